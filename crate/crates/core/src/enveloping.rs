//! Normal-ordered enveloping algebra of the extended Galilei algebra.
//!
//! Elements are polynomials in `N1, N2, P1, P2, H, M`, each monomial written in
//! that fixed order. The central generator `E` acts as the scalar `1`, so every
//! bracket `[X, Y] = ... + c E` contributes the scalar `c`.
//!
//! Products are brought to normal order by inserting one generator at a time
//! from the right and moving it left past every larger generator with
//! `X Y = Y X + [X, Y]`. Each swap produces a commutator term of strictly lower
//! degree, so the recursion terminates.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lie_algebra::{Generator, LieAlgebra};
use crate::linalg;
use crate::rational::{format_rational, parse_rational, ExtensionParams, Rational};

/// Normal order of the non-central generators.
pub const ORDER: [Generator; 6] = [
    Generator::N1,
    Generator::N2,
    Generator::P1,
    Generator::P2,
    Generator::H,
    Generator::M,
];

fn letter_of(g: Generator) -> Option<usize> {
    ORDER.iter().position(|&x| x == g)
}

/// Exponents of `N1, N2, P1, P2, H, M`, in that order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial([u32; 6]);

impl Monomial {
    pub const UNIT: Monomial = Monomial([0; 6]);

    pub fn new(exponents: [u32; 6]) -> Self {
        Self(exponents)
    }

    pub fn exponents(&self) -> [u32; 6] {
        self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn of(g: Generator) -> Option<Self> {
        let mut e = [0; 6];
        e[letter_of(g)?] = 1;
        Some(Self(e))
    }

    /// Highest letter present, i.e. the rightmost factor.
    fn top_letter(&self) -> Option<usize> {
        (0..6).rev().find(|&i| self.0[i] > 0)
    }

    fn with_delta(&self, letter: usize, up: bool) -> Self {
        let mut e = self.0;
        if up {
            e[letter] += 1;
        } else {
            e[letter] -= 1;
        }
        Self(e)
    }

    /// Serialization key `"l1,l2,m1,m2,n,r"`.
    pub fn key(&self) -> String {
        self.0.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }

    pub fn from_key(key: &str) -> Result<Self> {
        let bad = || Error::InvalidAlgebra(format!("bad monomial key `{key}`"));
        let parts: Vec<u32> = key.split(',').map(|p| p.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?;
        let exps: [u32; 6] = parts.try_into().map_err(|_| bad())?;
        Ok(Self(exps))
    }

    /// All monomials of total degree `<= max_degree`, sorted by degree and then
    /// lexicographically by exponent vector.
    pub fn up_to_degree(max_degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for d in 0..=max_degree {
            let mut of_degree = Vec::new();
            compositions(d, 0, &mut [0; 6], &mut of_degree);
            of_degree.sort();
            out.extend(of_degree);
        }
        out
    }
}

fn compositions(remaining: u32, slot: usize, acc: &mut [u32; 6], out: &mut Vec<Monomial>) {
    if slot == 5 {
        acc[5] = remaining;
        out.push(Monomial(*acc));
        return;
    }
    for e in 0..=remaining {
        acc[slot] = e;
        compositions(remaining - e, slot + 1, acc, out);
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for (g, &e) in ORDER.iter().zip(&self.0) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Normal-ordered polynomial: sparse map from monomial to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NOPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl NOPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::UNIT, c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// A single non-central generator.
    ///
    /// # Panics
    /// For `Generator::E`, which is the scalar `1` here; use [`NOPoly::one`].
    pub fn generator(g: Generator) -> Self {
        let m = Monomial::of(g).expect("E is the scalar unit in the enveloping algebra");
        Self::term(m, Rational::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, other: &NOPoly, s: &Rational) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(*m, c * s);
        }
    }

    pub fn add(&self, other: &NOPoly) -> NOPoly {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &NOPoly) -> NOPoly {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scale(&self, s: &Rational) -> NOPoly {
        let mut out = NOPoly::zero();
        out.add_scaled(self, s);
        out
    }

    /// Coefficients on a fixed list of monomials. Terms outside the list are
    /// dropped; callers choose a list that covers the support.
    pub fn coordinates(&self, basis: &[Monomial]) -> Vec<Rational> {
        basis.iter().map(|m| self.coefficient(m)).collect()
    }
}

impl fmt::Display for NOPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for NOPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<String, String> = self.terms.iter().map(|(m, c)| (m.key(), format_rational(c))).collect();
        map.serialize(s)
    }
}

impl<'de> Deserialize<'de> for NOPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let map = BTreeMap::<String, String>::deserialize(d)?;
        let mut p = NOPoly::zero();
        for (k, v) in map {
            let m = Monomial::from_key(&k).map_err(serde::de::Error::custom)?;
            let c = parse_rational(&v).map_err(serde::de::Error::custom)?;
            p.add_term(m, c);
        }
        Ok(p)
    }
}

/// Bracket of two letters: linear part over letters plus the scalar from `E`.
#[derive(Debug, Clone, Default)]
struct LetterBracket {
    linear: Vec<(usize, Rational)>,
    scalar: Rational,
}

/// Enveloping algebra of a 7-dimensional algebra with basis labels
/// `E, H, P1, P2, N1, N2, M` (any storage order) and `E` central.
#[derive(Debug, Clone)]
pub struct Enveloping {
    table: Vec<Vec<LetterBracket>>,
}

impl Enveloping {
    pub fn new(alg: &LieAlgebra) -> Result<Self> {
        if alg.dim() != 7 {
            return Err(Error::DimensionMismatch { expected: 7, found: alg.dim() });
        }
        let e = alg.index_of(Generator::E.label())?;
        let idx: Vec<usize> = ORDER.iter().map(|g| alg.index_of(g.label())).collect::<Result<_>>()?;
        for j in 0..7 {
            if !alg.basis_bracket(e, j).is_zero() || !alg.basis_bracket(j, e).is_zero() {
                return Err(Error::InvalidAlgebra("E is not central".into()));
            }
        }
        let table = (0..6)
            .map(|a| {
                (0..6)
                    .map(|b| {
                        let br = alg.basis_bracket(idx[a], idx[b]);
                        LetterBracket {
                            linear: (0..6)
                                .map(|l| (l, br.coefficients[idx[l]].clone()))
                                .filter(|(_, c)| !c.is_zero())
                                .collect(),
                            scalar: br.coefficients[e].clone(),
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(Self { table })
    }

    /// Enveloping algebra of `g(k, m, l)`.
    pub fn galilei(params: &ExtensionParams) -> Self {
        Self::new(&crate::lie_algebra::make_galilei_algebra(params)).expect("g(k,m,l) has the expected basis")
    }

    fn mul_mono_letter(&self, mono: &Monomial, g: usize) -> NOPoly {
        match mono.top_letter() {
            Some(x) if g < x => {
                // mono = rest * x, and x g = g x + [x, g]
                let rest = mono.with_delta(x, false);
                let mut out = self.mul_poly_letter(&self.mul_mono_letter(&rest, g), x);
                let br = &self.table[x][g];
                for (y, c) in &br.linear {
                    out.add_scaled(&self.mul_mono_letter(&rest, *y), c);
                }
                out.add_term(rest, br.scalar.clone());
                out
            }
            _ => NOPoly::term(mono.with_delta(g, true), Rational::one()),
        }
    }

    fn mul_poly_letter(&self, p: &NOPoly, g: usize) -> NOPoly {
        let mut out = NOPoly::zero();
        for (m, c) in p.terms() {
            out.add_scaled(&self.mul_mono_letter(m, g), c);
        }
        out
    }

    /// Product `p * q` in normal order.
    pub fn mul(&self, p: &NOPoly, q: &NOPoly) -> NOPoly {
        let mut out = NOPoly::zero();
        for (mq, cq) in q.terms() {
            let mut acc = p.clone();
            for (letter, &e) in mq.0.iter().enumerate() {
                for _ in 0..e {
                    acc = self.mul_poly_letter(&acc, letter);
                }
            }
            out.add_scaled(&acc, cq);
        }
        out
    }

    /// Product of generators in the given (not necessarily normal) order.
    pub fn product(&self, word: &[Generator]) -> NOPoly {
        word.iter().fold(NOPoly::one(), |acc, &g| match letter_of(g) {
            Some(l) => self.mul_poly_letter(&acc, l),
            None => acc,
        })
    }

    pub fn commutator(&self, p: &NOPoly, q: &NOPoly) -> NOPoly {
        self.mul(p, q).sub(&self.mul(q, p))
    }

    /// `[p, g]` for every non-central generator `g`, in `Generator::NON_CENTRAL` order.
    pub fn centrality_defects(&self, p: &NOPoly) -> Vec<(Generator, NOPoly)> {
        Generator::NON_CENTRAL
            .iter()
            .map(|&g| (g, self.commutator(p, &NOPoly::generator(g))))
            .collect()
    }

    pub fn is_central(&self, p: &NOPoly) -> bool {
        self.centrality_defects(p).iter().all(|(_, d)| d.is_zero())
    }

    /// Replaces every generator by a polynomial image, keeping factor order.
    /// `images` is indexed like [`ORDER`].
    pub fn substitute(&self, p: &NOPoly, images: &[NOPoly; 6]) -> NOPoly {
        let mut out = NOPoly::zero();
        for (m, c) in p.terms() {
            let mut acc = NOPoly::one();
            for (letter, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    acc = self.mul(&acc, &images[letter]);
                }
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// Basis of all normal-ordered polynomials of degree `<= max_degree`
    /// commuting with every generator, from the exact kernel of the linear map
    /// `p -> ([p, H], [p, P1], ..., [p, M])`.
    pub fn centralizer_basis(&self, max_degree: u32) -> CentralizerBasis {
        let monomials = Monomial::up_to_degree(max_degree);
        let mut rows: BTreeMap<(usize, Monomial), Vec<Rational>> = BTreeMap::new();
        let ncols = monomials.len();
        for (col, m) in monomials.iter().enumerate() {
            let mp = NOPoly::term(*m, Rational::one());
            for (gi, (_, defect)) in self.centrality_defects(&mp).into_iter().enumerate() {
                for (rm, c) in defect.terms() {
                    rows.entry((gi, *rm)).or_insert_with(|| vec![Rational::zero(); ncols])[col] = c.clone();
                }
            }
        }
        let rows: Vec<Vec<Rational>> = rows.into_values().collect();
        let elements = linalg::kernel_basis(&rows, ncols)
            .into_iter()
            .map(|v| {
                let mut p = NOPoly::zero();
                for (m, c) in monomials.iter().zip(v) {
                    p.add_term(*m, c);
                }
                p
            })
            .collect();
        CentralizerBasis { elements, max_degree }
    }
}

/// Spanning set of the bounded-degree centralizer.
#[derive(Debug, Clone, Serialize)]
pub struct CentralizerBasis {
    pub elements: Vec<NOPoly>,
    pub max_degree: u32,
}

impl CentralizerBasis {
    pub fn dimension(&self) -> usize {
        self.elements.len()
    }

    /// Whether `p` lies in the span of the basis.
    pub fn contains(&self, p: &NOPoly) -> bool {
        let deg = p.degree().unwrap_or(0).max(self.max_degree);
        let monomials = Monomial::up_to_degree(deg);
        let rows: Vec<Vec<Rational>> = self.elements.iter().map(|e| e.coordinates(&monomials)).collect();
        let base = linalg::rank(&rows, monomials.len());
        let mut with_p = rows;
        with_p.push(p.coordinates(&monomials));
        linalg::rank(&with_p, monomials.len()) == base
    }
}

fn require_mass(params: &ExtensionParams) -> Result<()> {
    if params.m.is_zero() {
        Err(Error::HypothesisViolated("m = 0: C1 and C2 are defined only for m != 0"))
    } else {
        Ok(())
    }
}

fn p_squared() -> NOPoly {
    let mut p = NOPoly::zero();
    p.add_term(Monomial::new([0, 0, 2, 0, 0, 0]), Rational::one());
    p.add_term(Monomial::new([0, 0, 0, 2, 0, 0]), Rational::one());
    p
}

fn n_cross_p() -> NOPoly {
    let mut p = NOPoly::zero();
    p.add_term(Monomial::new([1, 0, 0, 1, 0, 0]), Rational::one());
    p.add_term(Monomial::new([0, 1, 1, 0, 0, 0]), -Rational::one());
    p
}

/// `H - P^2 / 2m`.
pub fn casimir_c1(params: &ExtensionParams) -> Result<NOPoly> {
    require_mass(params)?;
    let two_m = Rational::from_integer(2.into()) * &params.m;
    Ok(NOPoly::generator(Generator::H).sub(&p_squared().scale(&two_m.recip())))
}

/// `M - (N x P) / m - (k / m) H`. Already normal ordered: every `N` precedes its `P`.
pub fn casimir_c2(params: &ExtensionParams) -> Result<NOPoly> {
    require_mass(params)?;
    let inv_m = params.m.recip();
    Ok(NOPoly::generator(Generator::M)
        .sub(&n_cross_p().scale(&inv_m))
        .sub(&NOPoly::generator(Generator::H).scale(&(&params.k * &inv_m))))
}

/// `P1^2 + P2^2`.
pub fn casimir_c1_prime() -> NOPoly {
    p_squared()
}

/// `N1 P2 - N2 P1`.
pub fn casimir_c2_prime() -> NOPoly {
    n_cross_p()
}
