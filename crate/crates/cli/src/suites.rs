//! Verification suites selectable by name.

use std::f64::consts::SQRT_2;

use galext_core::contraction::experiments::{
    convergence_study, exotic_limit_matches_group_exponent, ExperimentInputs, ExperimentRegistry,
};
use galext_core::enveloping::{casimir_c1, casimir_c1_prime, casimir_c2, casimir_c2_prime, Enveloping, NOPoly};
use galext_core::group_cocycle::{
    apply_coboundary, associativity_defect, element_distance, exact_associativity_defect, exact_distance,
    exact_homomorphism_defect, homomorphism_defect, random_element, random_exact_element, wrap_angle, CocycleLaw,
    ExactElement, GalileiLaw, GroupElement, GroupKind, Theorem2Map,
};
use galext_core::lie_algebra::{make_galilei_algebra, theorem1_change, Generator, LieAlgebra};
use galext_core::{ExtensionParams, Rational};
use num_traits::{Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::RunConfig;
use crate::error::CliError;
use crate::report::{Check, ConvergenceRow, Report};

/// Largest component of `|v|` for the contraction samples, so `|v| <= 0.9`.
pub const VELOCITY_BOUND: f64 = 0.9 / SQRT_2;
/// Allowed deviation of a fitted log-log slope from its expected value.
pub const SLOPE_WINDOW: f64 = 0.1;
/// Relative error allowed at the largest `c` of the grid.
pub const FINAL_RELATIVE_ERROR: f64 = 1e-3;
/// Exact-arithmetic samples are slower; they are capped at this count.
const EXACT_SAMPLE_CAP: usize = 200;

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;

    /// `--samples` when the flag is absent.
    fn default_samples(&self) -> usize {
        1
    }

    fn run(&self, config: &RunConfig) -> Result<Report, CliError>;
}

/// Suites in registration order.
pub struct SuiteRegistry {
    suites: Vec<Box<dyn Suite>>,
}

impl Default for SuiteRegistry {
    fn default() -> Self {
        Self::with_builtins()
    }
}

impl SuiteRegistry {
    pub fn empty() -> Self {
        Self { suites: Vec::new() }
    }

    pub fn with_builtins() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(VerifyAlgebra));
        r.register(Box::new(Casimir));
        r.register(Box::new(Group));
        r.register(Box::new(Contract::default()));
        r
    }

    /// Replaces any suite already registered under the same name.
    pub fn register(&mut self, suite: Box<dyn Suite>) {
        self.suites.retain(|s| s.name() != suite.name());
        self.suites.push(suite);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Suite> {
        self.suites.iter().find(|s| s.name() == name).map(|s| s.as_ref())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Suite> {
        self.suites.iter().map(|s| s.as_ref())
    }
}

fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Sum of absolute coefficients.
fn poly_norm(p: &NOPoly) -> Rational {
    p.terms().map(|(_, c)| c.abs()).fold(Rational::zero(), |a, b| a + b)
}

/// Sum of absolute differences of structure constants.
fn algebra_distance(a: &LieAlgebra, b: &LieAlgebra) -> Rational {
    let n = a.dim();
    let mut total = Rational::zero();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                total += (a.constant(i, j, k) - b.constant(i, j, k)).abs();
            }
        }
    }
    total
}

pub struct VerifyAlgebra;

impl Suite for VerifyAlgebra {
    fn name(&self) -> &'static str {
        "verify-algebra"
    }

    fn run(&self, cfg: &RunConfig) -> Result<Report, CliError> {
        let mut report = Report::new(self.name(), cfg);
        let alg = make_galilei_algebra(&cfg.params);
        report.push(Check::exact("jacobi identity", &alg.jacobi_defect(), cfg.seed));
        report.push(Check::exact("antisymmetry", &alg.antisymmetry_defect(), cfg.seed));
        let name = "k removed by N_i -> N_i + (k/2m) eps_ij P_j";
        if cfg.params.m.is_zero() {
            report.push(Check::skipped(name, "m=0: hypothesis violated", cfg.seed));
        } else {
            let changed = alg.apply_basis_change(&theorem1_change(&cfg.params)?)?;
            let target = make_galilei_algebra(&cfg.params.without_k());
            report.push(Check::exact(name, &algebra_distance(&changed, &target), cfg.seed));
        }
        Ok(report)
    }
}

pub struct Casimir;

impl Casimir {
    fn central(env: &Enveloping, name: &str, p: &NOPoly, seed: u64) -> Check {
        let defect = env.centrality_defects(p).iter().map(|(_, d)| poly_norm(d)).fold(Rational::zero(), |a, b| a + b);
        Check::exact(format!("{name} central"), &defect, seed)
    }

    fn commutator_is(env: &Enveloping, name: &str, g: Generator, p: &NOPoly, value: Rational, seed: u64) -> Check {
        let d = env.commutator(&NOPoly::generator(g), p).sub(&NOPoly::constant(value));
        Check::exact(name, &poly_norm(&d), seed)
    }
}

impl Suite for Casimir {
    fn name(&self) -> &'static str {
        "casimir"
    }

    fn run(&self, cfg: &RunConfig) -> Result<Report, CliError> {
        let mut report = Report::new(self.name(), cfg);
        let p = &cfg.params;
        let seed = cfg.seed;
        let env = Enveloping::galilei(p);
        let mut expected: Vec<NOPoly> = vec![NOPoly::one()];
        if !p.m.is_zero() {
            let (c1, c2) = (casimir_c1(p)?, casimir_c2(p)?);
            if p.l.is_zero() {
                report.push(Self::central(&env, "C1 = H - P^2/2m", &c1, seed));
                report.push(Self::central(&env, "C2 = M - (N x P)/m - (k/m) H", &c2, seed));
                expected.extend([c1, c2]);
            } else {
                report.push(Self::commutator_is(&env, "[M, C1] = l", Generator::M, &c1, p.l.clone(), seed));
                report.push(Self::commutator_is(&env, "[H, C2] = -l", Generator::H, &c2, -p.l.clone(), seed));
            }
        } else {
            let (c1, c2) = (casimir_c1_prime(), casimir_c2_prime());
            report.push(Self::central(&env, "P^2", &c1, seed));
            expected.push(c1);
            if p.k.is_zero() {
                report.push(Self::central(&env, "N x P", &c2, seed));
                expected.push(c2);
            } else {
                let central = env.is_central(&c2);
                report.push(Check::flag("N x P not central when k != 0", !central, seed));
            }
        }
        let basis = env.centralizer_basis(cfg.max_degree);
        let within: Vec<&NOPoly> = expected.iter().filter(|q| q.degree().unwrap_or(0) <= cfg.max_degree).collect();
        let missing = within.iter().filter(|q| !basis.contains(q)).count();
        report.push(
            Check::flag("listed Casimirs lie in the centralizer", missing == 0, seed)
                .with_note(format!("{} of {} candidates up to degree {}", within.len() - missing, within.len(), cfg.max_degree)),
        );
        if !p.m.is_zero() && !p.l.is_zero() {
            report.push(
                Check::flag("centralizer is scalars only", basis.dimension() == 1, seed)
                    .with_note(format!("dimension {}", basis.dimension())),
            );
        }
        report.centralizer = Some((&basis).into());
        Ok(report)
    }
}

pub struct Group;

impl Group {
    fn float_law(kind: GroupKind, p: &ExtensionParams) -> Result<GalileiLaw<f64>, CliError> {
        Ok(GalileiLaw::new(kind, p)?)
    }

    fn kind_suite(&self, cfg: &RunConfig, kind: GroupKind, report: &mut Report) -> Result<(), CliError> {
        let (seed, tol, n) = (cfg.seed, cfg.tolerance, cfg.samples);
        let tag = kind.name();
        let p = &cfg.params;
        if kind == GroupKind::Extended && !p.l.is_zero() {
            let note = "l != 0: integrates only on the covering group";
            for what in ["cocycle identity", "inverse", "normalization", "coboundary shift", "k-removing map"] {
                report.push(Check::skipped(format!("{tag}: {what}"), note, seed));
            }
            return Ok(());
        }
        let law = Self::float_law(kind, p)?;
        let mut rng = seeded(seed);
        let sample = |rng: &mut ChaCha8Rng| random_element(rng, kind);

        let mut assoc = 0.0_f64;
        let mut inv = 0.0_f64;
        let mut norm = 0.0_f64;
        let e = GroupElement::identity();
        for _ in 0..n {
            let (g, h, f) = (sample(&mut rng), sample(&mut rng), sample(&mut rng));
            assoc = assoc.max(associativity_defect(&law, &g, &h, &f));
            let gi = law.inverse(&g);
            inv = inv.max(element_distance(kind, &law.compose(&g, &gi), &e));
            inv = inv.max(element_distance(kind, &law.compose(&gi, &g), &e));
            norm = norm.max(law.exponent(&g, &e).abs()).max(law.exponent(&e, &g).abs());
        }
        report.push(Check::float(format!("{tag}: cocycle identity"), assoc, tol, seed));
        report.push(Check::float(format!("{tag}: inverse"), inv, tol, seed));
        report.push(Check { pass: norm == 0.0, ..Check::float(format!("{tag}: normalization"), norm, tol, seed) });

        let shifted = apply_coboundary(Self::float_law(kind, p)?, Box::new(|g: &GroupElement| g.tau * g.u[0] + g.v[1] * g.theta.sin()));
        let mut cob = 0.0_f64;
        for _ in 0..n {
            let (g, h, f) = (sample(&mut rng), sample(&mut rng), sample(&mut rng));
            cob = cob.max(associativity_defect(&shifted, &g, &h, &f));
        }
        report.push(Check::float(format!("{tag}: coboundary shift"), cob, tol, seed));

        let name = format!("{tag}: k-removing map");
        if p.m.is_zero() {
            report.push(Check::skipped(name, "m=0: hypothesis violated", seed));
        } else {
            let map = Theorem2Map::<f64>::new(p)?;
            let target = Self::float_law(kind, &p.without_k())?;
            let mut hom = 0.0_f64;
            for _ in 0..n {
                let (g, h) = (sample(&mut rng), sample(&mut rng));
                hom = hom.max(homomorphism_defect(&law, &target, |x| map.apply(x), &g, &h));
            }
            report.push(Check::float(name, hom, tol, seed));
        }
        Ok(())
    }

    fn exact_suite(&self, cfg: &RunConfig, report: &mut Report) -> Result<(), CliError> {
        let seed = cfg.seed;
        let n = cfg.samples.min(EXACT_SAMPLE_CAP);
        let p = &cfg.params;
        // Angles vanish here, so both kinds share one law; l still enters through l theta tau'.
        let law = GalileiLaw::<Rational>::new(GroupKind::Covering, p)?;
        let mut rng = seeded(seed ^ 0x5eed);
        let mut assoc = Rational::zero();
        let mut inv = Rational::zero();
        for _ in 0..n {
            let (g, h, f) = (random_exact_element(&mut rng), random_exact_element(&mut rng), random_exact_element(&mut rng));
            assoc += exact_associativity_defect(&law, &g, &h, &f);
            inv += exact_distance(&law.compose(&g, &law.inverse(&g)), &ExactElement::identity());
        }
        report.push(Check::exact("exact: cocycle identity", &assoc, seed));
        report.push(Check::exact("exact: inverse", &inv, seed));
        let name = "exact: k-removing map";
        if p.m.is_zero() {
            report.push(Check::skipped(name, "m=0: hypothesis violated", seed));
        } else {
            let map = Theorem2Map::<Rational>::new(p)?;
            let target = GalileiLaw::<Rational>::new(GroupKind::Covering, &p.without_k())?;
            let mut hom = Rational::zero();
            for _ in 0..n {
                let (g, h) = (random_exact_element(&mut rng), random_exact_element(&mut rng));
                hom += exact_homomorphism_defect(&law, &target, |x| map.apply(x), &g, &h);
            }
            report.push(Check::exact(name, &hom, seed));
        }
        Ok(())
    }

    fn consistency(&self, cfg: &RunConfig, report: &mut Report) -> Result<(), CliError> {
        let name = "covering reduces to extended when l = 0";
        let p = cfg.params.without_l();
        let ext = Self::float_law(GroupKind::Extended, &p)?;
        let cov = Self::float_law(GroupKind::Covering, &p)?;
        let mut rng = seeded(cfg.seed ^ 0xc0e7);
        let mut worst = 0.0_f64;
        for _ in 0..cfg.samples {
            let (g, h) = (random_element(&mut rng, GroupKind::Extended), random_element(&mut rng, GroupKind::Extended));
            let mut c = cov.compose(&g, &h);
            c.theta = wrap_angle(c.theta);
            worst = worst.max(element_distance(GroupKind::Extended, &c, &ext.compose(&g, &h)));
        }
        let check = Check::float(name, worst, cfg.tolerance, cfg.seed);
        report.push(if cfg.params.l.is_zero() { check } else { check.with_note("evaluated with l set to 0") });
        Ok(())
    }
}

impl Suite for Group {
    fn name(&self) -> &'static str {
        "group"
    }

    fn default_samples(&self) -> usize {
        1000
    }

    fn run(&self, cfg: &RunConfig) -> Result<Report, CliError> {
        let mut report = Report::new(self.name(), cfg);
        for kind in GroupKind::ALL {
            self.kind_suite(cfg, kind, &mut report)?;
        }
        self.exact_suite(cfg, &mut report)?;
        self.consistency(cfg, &mut report)?;
        Ok(report)
    }
}

/// Convergence studies for the registered limit experiments.
#[derive(Default)]
pub struct Contract {
    pub experiments: ExperimentRegistry,
}

impl Contract {
    fn selected(&self, cfg: &RunConfig) -> Result<Vec<String>, CliError> {
        let names: Vec<String> = if cfg.experiments.is_empty() {
            self.experiments.names().map(str::to_string).collect()
        } else {
            cfg.experiments.clone()
        };
        for n in &names {
            if !self.experiments.names().any(|k| k == n) {
                let known: Vec<&str> = self.experiments.names().collect();
                return Err(CliError::Config(format!("unknown experiment `{n}` (known: {})", known.join(", "))));
            }
        }
        Ok(names)
    }
}

impl Suite for Contract {
    fn name(&self) -> &'static str {
        "contract"
    }

    fn default_samples(&self) -> usize {
        20
    }

    fn run(&self, cfg: &RunConfig) -> Result<Report, CliError> {
        let grid = &cfg.c_grid;
        if grid.len() < 3 {
            return Err(CliError::Config(format!("--c-grid needs at least 3 points for a slope fit, got {}", grid.len())));
        }
        if grid[0] <= VELOCITY_BOUND * SQRT_2 {
            return Err(CliError::Config(format!("--c-grid must start above the sample speed bound {}", VELOCITY_BOUND * SQRT_2)));
        }
        let names = self.selected(cfg)?;
        let mut report = Report::new(self.name(), cfg);
        let inputs: Vec<(u64, ExperimentInputs)> = (0..cfg.samples)
            .map(|i| {
                let seed = cfg.seed.wrapping_add(i as u64);
                (seed, ExperimentInputs::random(&mut seeded(seed), VELOCITY_BOUND))
            })
            .collect();
        for name in &names {
            let mut slope_dev = 0.0_f64;
            let mut zeta_dev = 0.0_f64;
            let mut final_rel = 0.0_f64;
            let mut failures = Vec::new();
            for (i, (seed, inp)) in inputs.iter().enumerate() {
                let exp = self.experiments.build(name, inp)?;
                match convergence_study(exp.as_ref(), grid) {
                    Ok(r) => {
                        slope_dev = slope_dev.max((r.fitted_slope + 2.0).abs());
                        zeta_dev = zeta_dev.max((r.zeta_slope - 2.0).abs());
                        if r.target != 0.0 {
                            final_rel = final_rel.max(r.final_relative_error());
                        }
                        report.convergence.push(ConvergenceRow { sample: i, seed: *seed, report: r });
                    }
                    Err(e) => failures.push(format!("sample {i}: {e}")),
                }
            }
            let note = (!failures.is_empty()).then(|| failures.join("; "));
            let mut slope = Check::float(format!("{name}: error slope -2"), slope_dev, SLOPE_WINDOW, cfg.seed);
            if let Some(n) = &note {
                slope = Check { pass: false, ..slope.with_note(n.clone()) };
            }
            report.push(slope);
            match name.as_str() {
                "thomas" | "rotation" => {
                    report.push(Check::float(format!("{name}: relative error at largest c"), final_rel, FINAL_RELATIVE_ERROR, cfg.seed));
                }
                "mass" => report.push(Check::float("mass: |zeta| slope +2", zeta_dev, SLOPE_WINDOW, cfg.seed)),
                _ => {}
            }
        }
        let worst = inputs.iter().map(|(_, i)| exotic_limit_matches_group_exponent(i)).fold(0.0, f64::max);
        report.push(Check::float("rotation limit is minus the k-cocycle at k=1", worst, cfg.tolerance, cfg.seed));
        Ok(report)
    }
}
