//! Named `c -> infinity` limit experiments and their convergence fits.
//!
//! Each experiment is a [`LimitExperiment`] registered under a name in an
//! [`ExperimentRegistry`]; the registry builds instances from a seeded
//! [`ExperimentInputs`] sample so runs are reproducible.

use std::collections::BTreeMap;

use nalgebra::Vector3;
use rand::Rng;
use serde::Serialize;

use super::{
    boost, compose_boosts, contract_element, mass_cocycle_exponent, mass_zeta, rotation_cocycle_exponent,
    thomas_target, PoincareElement,
};
use crate::error::{Error, Result};
use crate::group_cocycle::{cross, element_distance, CocycleLaw, Element, GalileiLaw, GroupElement, GroupKind, Scalar};
use crate::rational::ExtensionParams;

/// A quantity depending on `c` together with the finite value it approaches.
pub trait LimitExperiment: Send + Sync {
    fn name(&self) -> &str;

    fn target(&self) -> f64;

    /// Value at speed of light `c`.
    fn measure(&self, c: f64) -> Result<f64>;

    /// Size of the trivializing function whose coboundary is being measured.
    fn zeta_magnitude(&self, c: f64) -> Result<f64>;

    fn error(&self, c: f64) -> Result<f64> {
        Ok((self.measure(c)? - self.target()).abs())
    }
}

/// Galilei data from which experiment instances are built. Velocities are
/// meant to stay well below the smallest `c` on the grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentInputs {
    pub g: GroupElement,
    pub h: GroupElement,
}

impl ExperimentInputs {
    /// `tau, u, v` uniform in `[-bound, bound)`, angles in `[-pi, pi)`, zero phase.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, bound: f64) -> Self {
        let mut draw = || {
            let mut c = || rng.random_range(-bound..bound);
            let (tau, u, v) = (c(), [c(), c()], [c(), c()]);
            (tau, u, v)
        };
        let (t1, u1, v1) = draw();
        let (t2, u2, v2) = draw();
        let th1 = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
        let th2 = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
        Self {
            g: Element::new(0.0, t1, u1, v1, th1),
            h: Element::new(0.0, t2, u2, v2, th2),
        }
    }

    /// `R(theta_g) v_h`.
    fn rotated_second_velocity(&self) -> [f64; 2] {
        f64::rotate(&self.g.theta, &self.h.v)
    }
}

/// Wigner angle of `L(v) L(R v')`, scaled by `c^2`.
pub struct ThomasExperiment {
    v: [f64; 2],
    w: [f64; 2],
}

impl ThomasExperiment {
    pub fn new(inputs: &ExperimentInputs) -> Self {
        Self { v: inputs.g.v, w: inputs.rotated_second_velocity() }
    }
}

impl LimitExperiment for ThomasExperiment {
    fn name(&self) -> &str {
        "thomas"
    }

    fn target(&self) -> f64 {
        thomas_target(&self.v, &self.w)
    }

    fn measure(&self, c: f64) -> Result<f64> {
        let (_, dt) = compose_boosts(&self.v, &self.w, c)?;
        Ok(c * c * dt)
    }

    /// `zeta = c^2 theta` of the composite boost, which stays finite.
    fn zeta_magnitude(&self, c: f64) -> Result<f64> {
        Ok(self.measure(c)?.abs())
    }
}

/// Coboundary of `c^2 theta(Lambda)` on two pure boosts.
pub struct RotationCocycleExperiment {
    v: [f64; 2],
    w: [f64; 2],
}

impl RotationCocycleExperiment {
    pub fn new(inputs: &ExperimentInputs) -> Self {
        Self { v: inputs.g.v, w: inputs.rotated_second_velocity() }
    }
}

impl LimitExperiment for RotationCocycleExperiment {
    fn name(&self) -> &str {
        "rotation"
    }

    fn target(&self) -> f64 {
        thomas_target(&self.v, &self.w)
    }

    fn measure(&self, c: f64) -> Result<f64> {
        rotation_cocycle_exponent(&boost(&self.v, c)?, &boost(&self.w, c)?, c)
    }

    fn zeta_magnitude(&self, c: f64) -> Result<f64> {
        Ok(self.measure(c)?.abs())
    }
}

/// Coboundary of `zeta = c a^0` between `{L(v) R(theta), a}` and a translation
/// by `(c tau', u')`; tends to `|v|^2 tau' / 2 + v . R(theta) u'`.
pub struct MassExperiment {
    g: GroupElement,
    tau: f64,
    u: [f64; 2],
}

impl MassExperiment {
    pub fn new(inputs: &ExperimentInputs) -> Self {
        Self { g: inputs.g.clone(), tau: inputs.h.tau, u: inputs.h.u }
    }

    fn translation(&self, c: f64) -> PoincareElement {
        PoincareElement::translation(Vector3::new(c * self.tau, self.u[0], self.u[1]), c)
    }
}

impl LimitExperiment for MassExperiment {
    fn name(&self) -> &str {
        "mass"
    }

    fn target(&self) -> f64 {
        let v = self.g.v;
        let ru = f64::rotate(&self.g.theta, &self.u);
        0.5 * (v[0] * v[0] + v[1] * v[1]) * self.tau + v[0] * ru[0] + v[1] * ru[1]
    }

    fn measure(&self, c: f64) -> Result<f64> {
        let g = PoincareElement::from_galilei(&self.g, c)?;
        Ok(mass_cocycle_exponent(&g, &self.translation(c)))
    }

    /// `|zeta| = |c a'^0| = c^2 |tau'|`, which diverges.
    fn zeta_magnitude(&self, c: f64) -> Result<f64> {
        Ok(mass_zeta(&self.translation(c)).abs())
    }
}

/// Distance between contracting a Poincaré product and composing the
/// contracted factors in the plain Galilei group.
pub struct DiagramExperiment {
    g: GroupElement,
    h: GroupElement,
    galilei: GalileiLaw<f64>,
}

impl DiagramExperiment {
    pub fn new(inputs: &ExperimentInputs) -> Self {
        let galilei = GalileiLaw::new(GroupKind::Extended, &ExtensionParams::zero()).expect("l = 0");
        Self { g: inputs.g.clone(), h: inputs.h.clone(), galilei }
    }
}

impl LimitExperiment for DiagramExperiment {
    fn name(&self) -> &str {
        "diagram"
    }

    fn target(&self) -> f64 {
        0.0
    }

    fn measure(&self, c: f64) -> Result<f64> {
        let pg = PoincareElement::from_galilei(&self.g, c)?;
        let ph = PoincareElement::from_galilei(&self.h, c)?;
        let direct = contract_element(&pg.mul(&ph))?;
        let via = self.galilei.compose(&contract_element(&pg)?, &contract_element(&ph)?);
        Ok(element_distance(GroupKind::Extended, &direct, &via))
    }

    /// `|c a^0|` of the product, growing like `c^2`.
    fn zeta_magnitude(&self, c: f64) -> Result<f64> {
        let p = PoincareElement::from_galilei(&self.g, c)?.mul(&PoincareElement::from_galilei(&self.h, c)?);
        Ok(mass_zeta(&p).abs())
    }
}

/// Thomas experiment with `w = scale * v`. Collinear boosts compose to a pure
/// boost, so both the target and the measured value vanish.
pub fn collinear_thomas(v: [f64; 2], scale: f64) -> ThomasExperiment {
    ThomasExperiment { v, w: [scale * v[0], scale * v[1]] }
}

pub type ExperimentFactory = fn(&ExperimentInputs) -> Box<dyn LimitExperiment>;

/// Experiments selectable by name.
pub struct ExperimentRegistry {
    entries: BTreeMap<String, ExperimentFactory>,
}

impl Default for ExperimentRegistry {
    fn default() -> Self {
        Self::with_builtins()
    }
}

impl ExperimentRegistry {
    pub fn empty() -> Self {
        Self { entries: BTreeMap::new() }
    }

    /// `thomas`, `rotation`, `mass` and `diagram`.
    pub fn with_builtins() -> Self {
        let mut r = Self::empty();
        r.register("thomas", |i| Box::new(ThomasExperiment::new(i)));
        r.register("rotation", |i| Box::new(RotationCocycleExperiment::new(i)));
        r.register("mass", |i| Box::new(MassExperiment::new(i)));
        r.register("diagram", |i| Box::new(DiagramExperiment::new(i)));
        r
    }

    pub fn register(&mut self, name: &str, factory: ExperimentFactory) {
        self.entries.insert(name.to_string(), factory);
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn build(&self, name: &str, inputs: &ExperimentInputs) -> Result<Box<dyn LimitExperiment>> {
        let factory = self.entries.get(name).ok_or_else(|| Error::UnknownExperiment(name.to_string()))?;
        Ok(factory(inputs))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub experiment: String,
    pub target: f64,
    pub c_grid: Vec<f64>,
    pub measured: Vec<f64>,
    pub errors: Vec<f64>,
    pub zeta_magnitudes: Vec<f64>,
    /// Least-squares slope of `log error` against `log c`.
    pub fitted_slope: f64,
    /// Same fit for `|zeta|`.
    pub zeta_slope: f64,
}

impl ConvergenceReport {
    /// Error relative to the target at the largest `c`.
    pub fn final_relative_error(&self) -> f64 {
        let last = *self.errors.last().expect("grid has at least three points");
        if self.target == 0.0 {
            last
        } else {
            last / self.target.abs()
        }
    }
}

/// Slope of the least-squares line through `(ln x, ln y)`.
pub fn log_log_slope(xs: &[f64], ys: &[f64]) -> Result<f64> {
    if xs.len() != ys.len() || xs.len() < 3 {
        return Err(Error::DegenerateFit(format!("need at least 3 points, got {}", xs.len().min(ys.len()))));
    }
    if let Some(bad) = xs.iter().chain(ys).find(|v| !(v.is_finite() && **v > 0.0)) {
        return Err(Error::DegenerateFit(format!("log of non-positive value {bad}")));
    }
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::DegenerateFit("all grid points coincide".into()));
    }
    Ok(sxy / sxx)
}

/// Evaluates the experiment on a strictly increasing grid and fits both the
/// error decay and the growth of the trivializing function.
pub fn convergence_study(experiment: &dyn LimitExperiment, c_grid: &[f64]) -> Result<ConvergenceReport> {
    if c_grid.len() < 3 {
        return Err(Error::DegenerateFit(format!("need at least 3 grid points, got {}", c_grid.len())));
    }
    if c_grid.windows(2).any(|w| !(w[0] < w[1])) || c_grid[0] <= 0.0 {
        return Err(Error::DegenerateFit("c grid must be positive and strictly increasing".into()));
    }
    let mut measured = Vec::with_capacity(c_grid.len());
    let mut errors = Vec::with_capacity(c_grid.len());
    let mut zetas = Vec::with_capacity(c_grid.len());
    for &c in c_grid {
        measured.push(experiment.measure(c)?);
        errors.push(experiment.error(c)?);
        zetas.push(experiment.zeta_magnitude(c)?);
    }
    Ok(ConvergenceReport {
        experiment: experiment.name().to_string(),
        target: experiment.target(),
        c_grid: c_grid.to_vec(),
        fitted_slope: log_log_slope(c_grid, &errors)?,
        zeta_slope: log_log_slope(c_grid, &zetas)?,
        measured,
        errors,
        zeta_magnitudes: zetas,
    })
}

/// The contraction limit of the rotation coboundary, `(v x R v') / 2`, equals
/// minus the exotic part of the group exponent at `k = 1` (and likewise the
/// mass limit equals minus the mass part at `m = 1`).
pub fn exotic_limit_matches_group_exponent(inputs: &ExperimentInputs) -> f64 {
    let law = GalileiLaw::<f64>::new(GroupKind::Extended, &ExtensionParams::from_ints(1, 0, 0)).expect("l = 0");
    let group = law.exponent(&inputs.g, &inputs.h);
    let limit = 0.5 * cross(&inputs.g.v, &inputs.rotated_second_velocity());
    (group + limit).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Vec<f64> {
        vec![1e2, 1e3, 1e4, 1e5, 1e6]
    }

    fn inputs() -> ExperimentInputs {
        ExperimentInputs {
            g: Element::new(0.0, 0.6, [0.3, -0.7], [0.8, 0.2], 0.9),
            h: Element::new(0.0, -0.4, [0.5, 0.1], [-0.3, 0.6], -1.4),
        }
    }

    #[test]
    fn slope_of_exact_power_law() {
        let xs = [1.0_f64, 10.0, 100.0, 1000.0];
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 * x.powf(-2.0)).collect();
        assert!((log_log_slope(&xs, &ys).unwrap() + 2.0).abs() < 1e-12);
    }

    #[test]
    fn fit_needs_three_points() {
        let exp = ThomasExperiment::new(&inputs());
        assert!(matches!(convergence_study(&exp, &[1e2]), Err(Error::DegenerateFit(_))));
        assert!(matches!(convergence_study(&exp, &[1e2, 1e3]), Err(Error::DegenerateFit(_))));
        assert!(matches!(convergence_study(&exp, &[1e3, 1e2, 1e4]), Err(Error::DegenerateFit(_))));
    }

    #[test]
    fn collinear_thomas_has_no_error_to_fit() {
        let exp = collinear_thomas([0.3, 0.4], 0.5);
        assert_eq!(exp.target(), 0.0);
        assert!(exp.measure(1e3).unwrap().abs() < 1e-9);
    }

    #[test]
    fn thomas_converges_quadratically() {
        let r = convergence_study(&ThomasExperiment::new(&inputs()), &grid()).unwrap();
        assert!((r.fitted_slope + 2.0).abs() < 0.1, "{r:?}");
        assert!(r.final_relative_error() < 1e-3);
    }

    #[test]
    fn mass_converges_and_zeta_diverges() {
        let r = convergence_study(&MassExperiment::new(&inputs()), &grid()).unwrap();
        assert!((r.fitted_slope + 2.0).abs() < 0.1, "{r:?}");
        assert!((r.zeta_slope - 2.0).abs() < 0.1, "{r:?}");
    }

    #[test]
    fn rotation_cocycle_converges() {
        let r = convergence_study(&RotationCocycleExperiment::new(&inputs()), &grid()).unwrap();
        assert!((r.fitted_slope + 2.0).abs() < 0.1, "{r:?}");
    }

    #[test]
    fn diagram_commutes_in_the_limit() {
        let r = convergence_study(&DiagramExperiment::new(&inputs()), &grid()).unwrap();
        assert!((r.fitted_slope + 2.0).abs() < 0.1, "{r:?}");
    }

    #[test]
    fn registry_builds_by_name() {
        let reg = ExperimentRegistry::with_builtins();
        assert_eq!(reg.names().collect::<Vec<_>>(), ["diagram", "mass", "rotation", "thomas"]);
        assert_eq!(reg.build("mass", &inputs()).unwrap().name(), "mass");
        assert!(matches!(reg.build("nope", &inputs()), Err(Error::UnknownExperiment(_))));
    }

    #[test]
    fn limits_agree_with_group_exponent_signs() {
        assert!(exotic_limit_matches_group_exponent(&inputs()) < 1e-15);
        let law = GalileiLaw::<f64>::new(GroupKind::Extended, &ExtensionParams::from_ints(0, 1, 0)).unwrap();
        let i = inputs();
        let mass_limit = MassExperiment::new(&i).target();
        assert!((law.exponent(&i.g, &i.h) + mass_limit).abs() < 1e-15);
    }
}
