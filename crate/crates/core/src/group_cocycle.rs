//! Centrally extended Galilei group in 2+1 dimensions and its extended
//! universal cover.
//!
//! An element is `(phase, tau, u, v, theta)`: a U(1) phase stored as its real
//! exponent, time translation, space translation, boost and rotation angle.
//! The product is
//!
//! ```text
//! (phase + phase' + xi(g, h), tau + tau', R(theta) u' + v tau' + u, R(theta) v' + v, theta + theta')
//! xi(g, h) = -m (|v|^2 tau' / 2 + v . R(theta) u') - (k / 2) (v x R(theta) v') [+ l theta tau']
//! ```
//!
//! with `R(theta) = [[cos, sin], [-sin, cos]]` and `v x w = v1 w2 - v2 w1`. The
//! `l` term is present only on the cover, where `theta` is not reduced.
//!
//! Every law is generic over [`Scalar`], so the same code runs in `f64` and in
//! exact rational arithmetic. The rational mode supports `theta = 0` only.

use std::f64::consts::{PI, TAU};
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{rational_to_f64, ExtensionParams, Rational};
use crate::sampling::random_rational;

pub trait Scalar:
    Clone + PartialEq + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero() -> Self;
    fn from_rational(r: &Rational) -> Self;
    /// Applies `R(theta) = [[cos, sin], [-sin, cos]]` to `v`.
    fn rotate(theta: &Self, v: &[Self; 2]) -> [Self; 2];
    /// Representative of `theta` modulo `2 pi`.
    fn wrap_angle(theta: Self) -> Self;

    fn half() -> Self {
        Self::from_rational(&Rational::new(1.into(), 2.into()))
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }

    fn from_rational(r: &Rational) -> Self {
        rational_to_f64(r)
    }

    fn rotate(theta: &Self, v: &[Self; 2]) -> [Self; 2] {
        let (s, c) = theta.sin_cos();
        [c * v[0] + s * v[1], -s * v[0] + c * v[1]]
    }

    fn wrap_angle(theta: Self) -> Self {
        wrap_angle(theta)
    }

    fn half() -> Self {
        0.5
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    /// # Panics
    /// On a nonzero angle: rotations have no exact rational representation here.
    fn rotate(theta: &Self, v: &[Self; 2]) -> [Self; 2] {
        assert!(theta.is_zero(), "exact group elements must have theta = 0");
        v.clone()
    }

    fn wrap_angle(theta: Self) -> Self {
        theta
    }
}

/// Reduces an angle to `(-pi, pi]`. Angles already in range are returned
/// unchanged, so small values keep their full relative precision.
pub fn wrap_angle(theta: f64) -> f64 {
    if theta > -PI && theta <= PI {
        return theta;
    }
    let r = theta.rem_euclid(TAU);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

fn dot<S: Scalar>(a: &[S; 2], b: &[S; 2]) -> S {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone()
}

/// `a x b = a1 b2 - a2 b1`.
pub fn cross<S: Scalar>(a: &[S; 2], b: &[S; 2]) -> S {
    a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Element<S> {
    pub phase: S,
    pub tau: S,
    pub u: [S; 2],
    pub v: [S; 2],
    pub theta: S,
}

pub type GroupElement = Element<f64>;
pub type ExactElement = Element<Rational>;

impl<S: Scalar> Element<S> {
    pub fn new(phase: S, tau: S, u: [S; 2], v: [S; 2], theta: S) -> Self {
        Self { phase, tau, u, v, theta }
    }

    pub fn identity() -> Self {
        Self::new(S::zero(), S::zero(), [S::zero(), S::zero()], [S::zero(), S::zero()], S::zero())
    }

    fn without_phase(&self) -> Self {
        Self { phase: S::zero(), ..self.clone() }
    }
}

impl GroupElement {
    pub fn is_finite(&self) -> bool {
        [self.phase, self.tau, self.u[0], self.u[1], self.v[0], self.v[1], self.theta]
            .iter()
            .all(|x| x.is_finite())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    /// `G(k, m)`: rotation angle taken modulo `2 pi`, requires `l = 0`.
    Extended,
    /// Extension of the universal cover: `theta` real, all three charges.
    Covering,
}

impl GroupKind {
    pub const ALL: [GroupKind; 2] = [GroupKind::Extended, GroupKind::Covering];

    pub fn name(self) -> &'static str {
        match self {
            GroupKind::Extended => "extended",
            GroupKind::Covering => "covering",
        }
    }
}

/// Semidirect Galilei product without any phase.
fn galilei_product<S: Scalar>(kind: GroupKind, g: &Element<S>, h: &Element<S>) -> Element<S> {
    let ru = S::rotate(&g.theta, &h.u);
    let rv = S::rotate(&g.theta, &h.v);
    let theta = g.theta.clone() + h.theta.clone();
    Element {
        phase: S::zero(),
        tau: g.tau.clone() + h.tau.clone(),
        u: [
            ru[0].clone() + g.v[0].clone() * h.tau.clone() + g.u[0].clone(),
            ru[1].clone() + g.v[1].clone() * h.tau.clone() + g.u[1].clone(),
        ],
        v: [rv[0].clone() + g.v[0].clone(), rv[1].clone() + g.v[1].clone()],
        theta: match kind {
            GroupKind::Extended => S::wrap_angle(theta),
            GroupKind::Covering => theta,
        },
    }
}

/// A group law on `Element<S>` determined by its phase exponent.
///
/// Implementations must make `exponent` independent of the phases of its
/// arguments; `compose` and `inverse` rely on it.
pub trait CocycleLaw<S: Scalar> {
    fn kind(&self) -> GroupKind;

    /// Phase increment `xi(g, h)` beyond `phase_g + phase_h`.
    fn exponent(&self, g: &Element<S>, h: &Element<S>) -> S;

    fn compose(&self, g: &Element<S>, h: &Element<S>) -> Element<S> {
        let mut out = galilei_product(self.kind(), g, h);
        out.phase = g.phase.clone() + h.phase.clone() + self.exponent(g, h);
        out
    }

    fn inverse(&self, g: &Element<S>) -> Element<S> {
        let back = S::zero() - g.theta.clone();
        let rv = S::rotate(&back, &g.v);
        let shifted = [
            g.v[0].clone() * g.tau.clone() - g.u[0].clone(),
            g.v[1].clone() * g.tau.clone() - g.u[1].clone(),
        ];
        let mut inv = Element {
            phase: S::zero(),
            tau: -g.tau.clone(),
            u: S::rotate(&back, &shifted),
            v: [-rv[0].clone(), -rv[1].clone()],
            theta: match self.kind() {
                GroupKind::Extended => S::wrap_angle(back),
                GroupKind::Covering => back,
            },
        };
        inv.phase = -g.phase.clone() - self.exponent(g, &inv);
        inv
    }
}

/// The Galilei law with extension parameters `(k, m, l)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GalileiLaw<S> {
    kind: GroupKind,
    k: S,
    m: S,
    l: S,
}

impl<S: Scalar> GalileiLaw<S> {
    /// Fails for [`GroupKind::Extended`] with `l != 0`: that extension exists
    /// only on the cover.
    pub fn new(kind: GroupKind, params: &ExtensionParams) -> Result<Self> {
        if kind == GroupKind::Extended && !params.l.is_zero() {
            return Err(Error::InconsistentKind(params.l.to_string()));
        }
        Ok(Self {
            kind,
            k: S::from_rational(&params.k),
            m: S::from_rational(&params.m),
            l: S::from_rational(&params.l),
        })
    }
}

impl<S: Scalar> CocycleLaw<S> for GalileiLaw<S> {
    fn kind(&self) -> GroupKind {
        self.kind
    }

    fn exponent(&self, g: &Element<S>, h: &Element<S>) -> S {
        let ru = S::rotate(&g.theta, &h.u);
        let rv = S::rotate(&g.theta, &h.v);
        let mass = S::half() * dot(&g.v, &g.v) * h.tau.clone() + dot(&g.v, &ru);
        let exotic = S::half() * self.k.clone() * cross(&g.v, &rv);
        let mut xi = S::zero() - self.m.clone() * mass - exotic;
        if self.kind == GroupKind::Covering {
            xi = xi + self.l.clone() * g.theta.clone() * h.tau.clone();
        }
        xi
    }
}

/// Real function on group elements, used to shift a cocycle by a coboundary.
pub type Trivializer = Box<dyn Fn(&GroupElement) -> f64 + Send + Sync>;

/// A law whose exponent is shifted by the coboundary of `zeta`:
/// `xi'(g, h) = xi(g, h) + zeta(g h) - zeta(g) - zeta(h)`.
///
/// `zeta` only ever sees elements with zero phase.
pub struct Coboundary<L> {
    inner: L,
    zeta: Trivializer,
}

pub fn apply_coboundary<L: CocycleLaw<f64>>(inner: L, zeta: Trivializer) -> Coboundary<L> {
    Coboundary { inner, zeta }
}

impl<L: CocycleLaw<f64>> CocycleLaw<f64> for Coboundary<L> {
    fn kind(&self) -> GroupKind {
        self.inner.kind()
    }

    fn exponent(&self, g: &GroupElement, h: &GroupElement) -> f64 {
        let (g0, h0) = (g.without_phase(), h.without_phase());
        let gh = galilei_product(self.kind(), &g0, &h0);
        self.inner.exponent(g, h) + (self.zeta)(&gh) - (self.zeta)(&g0) - (self.zeta)(&h0)
    }
}

pub fn compose(kind: GroupKind, params: &ExtensionParams, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
    Ok(GalileiLaw::new(kind, params)?.compose(g, h))
}

pub fn cocycle_exponent(kind: GroupKind, params: &ExtensionParams, g: &GroupElement, h: &GroupElement) -> Result<f64> {
    Ok(GalileiLaw::new(kind, params)?.exponent(g, h))
}

pub fn inverse(kind: GroupKind, params: &ExtensionParams, g: &GroupElement) -> Result<GroupElement> {
    Ok(GalileiLaw::<f64>::new(kind, params)?.inverse(g))
}

/// Component-wise max distance; the phase always compares modulo `2 pi`, the
/// angle only for [`GroupKind::Extended`].
pub fn element_distance(kind: GroupKind, a: &GroupElement, b: &GroupElement) -> f64 {
    let angle = match kind {
        GroupKind::Extended => wrap_angle(a.theta - b.theta).abs(),
        GroupKind::Covering => (a.theta - b.theta).abs(),
    };
    [
        wrap_angle(a.phase - b.phase).abs(),
        (a.tau - b.tau).abs(),
        (a.u[0] - b.u[0]).abs(),
        (a.u[1] - b.u[1]).abs(),
        (a.v[0] - b.v[0]).abs(),
        (a.v[1] - b.v[1]).abs(),
        angle,
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

/// Component-wise max absolute difference of exact elements.
pub fn exact_distance(a: &ExactElement, b: &ExactElement) -> Rational {
    let pairs = [
        (&a.phase, &b.phase),
        (&a.tau, &b.tau),
        (&a.u[0], &b.u[0]),
        (&a.u[1], &b.u[1]),
        (&a.v[0], &b.v[0]),
        (&a.v[1], &b.v[1]),
        (&a.theta, &b.theta),
    ];
    pairs
        .into_iter()
        .map(|(x, y)| (x - y).abs())
        .fold(<Rational as Zero>::zero(), |acc, d| if d > acc { d } else { acc })
}

/// `|(g h) f - g (h f)|` under [`element_distance`].
pub fn associativity_defect<L: CocycleLaw<f64> + ?Sized>(law: &L, g: &GroupElement, h: &GroupElement, f: &GroupElement) -> f64 {
    let left = law.compose(&law.compose(g, h), f);
    let right = law.compose(g, &law.compose(h, f));
    element_distance(law.kind(), &left, &right)
}

pub fn exact_associativity_defect<L: CocycleLaw<Rational> + ?Sized>(
    law: &L,
    g: &ExactElement,
    h: &ExactElement,
    f: &ExactElement,
) -> Rational {
    let left = law.compose(&law.compose(g, h), f);
    let right = law.compose(g, &law.compose(h, f));
    exact_distance(&left, &right)
}

/// Reparametrization `u_i -> u_i + (k / 2m) eps_ij v_j`, an isomorphism from
/// the group with parameters `(k, m, l)` onto the one with `(0, m, l)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Theorem2Map<S> {
    shift: S,
}

impl<S: Scalar> Theorem2Map<S> {
    pub fn new(params: &ExtensionParams) -> Result<Self> {
        Self::with_sign(params, 1)
    }

    pub(crate) fn with_sign(params: &ExtensionParams, sign: i64) -> Result<Self> {
        if params.m.is_zero() {
            return Err(Error::HypothesisViolated("m = 0: the k-removing reparametrization needs m != 0"));
        }
        let lambda = &params.k / (Rational::from_integer(2.into()) * &params.m) * Rational::from_integer(sign.into());
        Ok(Self { shift: S::from_rational(&lambda) })
    }

    pub fn apply(&self, g: &Element<S>) -> Element<S> {
        // eps v = (v2, -v1)
        let mut out = g.clone();
        out.u[0] = g.u[0].clone() + self.shift.clone() * g.v[1].clone();
        out.u[1] = g.u[1].clone() - self.shift.clone() * g.v[0].clone();
        out
    }
}

pub fn theorem2_map(params: &ExtensionParams, g: &GroupElement) -> Result<GroupElement> {
    Ok(Theorem2Map::<f64>::new(params)?.apply(g))
}

/// `|map(g) *_b map(h) - map(g *_a h)|`.
pub fn homomorphism_defect<A, B, F>(law_a: &A, law_b: &B, map: F, g: &GroupElement, h: &GroupElement) -> f64
where
    A: CocycleLaw<f64> + ?Sized,
    B: CocycleLaw<f64> + ?Sized,
    F: Fn(&GroupElement) -> GroupElement,
{
    let lhs = law_b.compose(&map(g), &map(h));
    let rhs = map(&law_a.compose(g, h));
    element_distance(law_b.kind(), &lhs, &rhs)
}

pub fn exact_homomorphism_defect<A, B, F>(law_a: &A, law_b: &B, map: F, g: &ExactElement, h: &ExactElement) -> Rational
where
    A: CocycleLaw<Rational> + ?Sized,
    B: CocycleLaw<Rational> + ?Sized,
    F: Fn(&ExactElement) -> ExactElement,
{
    let lhs = law_b.compose(&map(g), &map(h));
    let rhs = map(&law_a.compose(g, h));
    exact_distance(&lhs, &rhs)
}

/// Uniform element with phase and angle in `[-pi, pi)` (covering: `[-2pi, 2pi)`)
/// and the remaining components in `[-1, 1)`.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, kind: GroupKind) -> GroupElement {
    let span = match kind {
        GroupKind::Extended => PI,
        GroupKind::Covering => TAU,
    };
    let mut unit = || rng.random_range(-1.0..1.0);
    let (tau, u, v) = (unit(), [unit(), unit()], [unit(), unit()]);
    Element {
        phase: rng.random_range(-PI..PI),
        tau,
        u,
        v,
        theta: rng.random_range(-span..span),
    }
}

/// Rotation-free exact element with small random rational components.
pub fn random_exact_element<R: Rng + ?Sized>(rng: &mut R) -> ExactElement {
    let mut r = || random_rational(rng);
    Element {
        phase: r(),
        tau: r(),
        u: [r(), r()],
        v: [r(), r()],
        theta: <Rational as Zero>::zero(),
    }
}

#[cfg(test)]
mod tests {
    #[test]
    fn wrap_keeps_small_angles_exact() {
        for x in [-3e-16, 1e-20, -1.0, 2.5] {
            assert_eq!(super::wrap_angle(x), x);
        }
        assert!((super::wrap_angle(3.0 * std::f64::consts::PI) - std::f64::consts::PI).abs() < 1e-15);
    }

    use super::*;
    use crate::rational::{int, ratio};

    fn law(kind: GroupKind, k: i64, m: i64, l: i64) -> GalileiLaw<f64> {
        GalileiLaw::new(kind, &ExtensionParams::from_ints(k, m, l)).unwrap()
    }

    fn el(phase: f64, tau: f64, u: [f64; 2], v: [f64; 2], theta: f64) -> GroupElement {
        Element::new(phase, tau, u, v, theta)
    }

    #[test]
    fn identity_is_two_sided() {
        let law = law(GroupKind::Covering, 2, 3, 5);
        let g = el(0.3, -0.7, [0.1, 0.9], [-0.4, 0.2], 1.3);
        let e = GroupElement::identity();
        assert_eq!(law.compose(&e, &g), g);
        assert!(element_distance(GroupKind::Covering, &law.compose(&g, &e), &g) < 1e-15);
    }

    #[test]
    fn vanishing_params_give_plain_galilei_product() {
        let law = law(GroupKind::Extended, 0, 0, 0);
        let g = el(0.5, 1.0, [1.0, 2.0], [0.3, -0.1], 0.4);
        let h = el(-0.25, 2.0, [0.0, 1.0], [0.2, 0.2], -1.0);
        assert_eq!(law.exponent(&g, &h), 0.0);
        assert_eq!(law.compose(&g, &h).phase, 0.25);
    }

    #[test]
    fn boost_then_time_translation() {
        let law = law(GroupKind::Extended, 0, 1, 0);
        let g = el(0.0, 0.0, [0.0, 0.0], [1.0, 0.0], 0.0);
        let h = el(0.0, 1.0, [0.0, 0.0], [0.0, 0.0], 0.0);
        let gh = law.compose(&g, &h);
        assert_eq!(gh.phase, -0.5);
        assert_eq!(gh.u, [1.0, 0.0]);
        assert_eq!(gh.tau, 1.0);
    }

    #[test]
    fn exotic_term_isolated() {
        let law = law(GroupKind::Extended, 2, 0, 0);
        let g = el(0.0, 0.0, [0.0, 0.0], [1.0, 0.0], 0.0);
        let h = el(0.0, 0.0, [0.0, 0.0], [0.0, 1.0], 0.0);
        assert_eq!(law.exponent(&g, &h), -1.0);
    }

    #[test]
    fn rotation_time_term_isolated_on_cover() {
        let law = law(GroupKind::Covering, 0, 0, 3);
        let g = el(0.0, 0.0, [0.0, 0.0], [0.0, 0.0], PI);
        let h = el(0.0, 2.0, [0.0, 0.0], [0.0, 0.0], 0.0);
        assert!((law.exponent(&g, &h) - 6.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn cocycle_is_normalized() {
        let law = law(GroupKind::Covering, 3, -2, 7);
        let g = el(0.1, 0.4, [0.5, -0.3], [0.8, 0.1], 2.5);
        let e = GroupElement::identity();
        assert_eq!(law.exponent(&g, &e), 0.0);
        assert_eq!(law.exponent(&e, &g), 0.0);
    }

    #[test]
    fn extended_kind_rejects_l() {
        let err = GalileiLaw::<f64>::new(GroupKind::Extended, &ExtensionParams::from_ints(0, 1, 1)).unwrap_err();
        assert!(matches!(err, Error::InconsistentKind(_)));
        assert!(GalileiLaw::<f64>::new(GroupKind::Covering, &ExtensionParams::from_ints(0, 1, 1)).is_ok());
    }

    #[test]
    fn rotation_convention_is_clockwise() {
        let r = f64::rotate(&(PI / 2.0), &[1.0, 0.0]);
        assert!((r[0]).abs() < 1e-15 && (r[1] + 1.0).abs() < 1e-15);
    }

    #[test]
    fn inverse_of_identity_and_rotation() {
        let law = law(GroupKind::Covering, 1, 1, 1);
        assert_eq!(law.inverse(&GroupElement::identity()), GroupElement::identity());
        let rot = el(0.0, 0.0, [0.0, 0.0], [0.0, 0.0], 0.7);
        let inv = law.inverse(&rot);
        assert_eq!(inv.theta, -0.7);
        assert_eq!(inv.phase, 0.0);
        assert_eq!(inv.u, [0.0, 0.0]);
    }

    #[test]
    fn inverse_component_equations() {
        // Oracle: solve g h = e component by component and compare.
        let law = law(GroupKind::Extended, 3, 2, 0);
        let g = el(0.4, 0.9, [0.3, -0.6], [0.7, 0.2], 0.8);
        let inv = law.inverse(&g);
        let (s, c) = (-g.theta).sin_cos();
        let rot = |x: [f64; 2]| [c * x[0] + s * x[1], -s * x[0] + c * x[1]];
        let v_h = rot(g.v).map(|x| -x);
        let u_h = rot([g.v[0] * g.tau - g.u[0], g.v[1] * g.tau - g.u[1]]);
        assert!((inv.tau + 0.9).abs() < 1e-15);
        assert!((inv.v[0] - v_h[0]).abs() < 1e-15 && (inv.v[1] - v_h[1]).abs() < 1e-15);
        assert!((inv.u[0] - u_h[0]).abs() < 1e-15 && (inv.u[1] - u_h[1]).abs() < 1e-15);
        let e = GroupElement::identity();
        assert!(element_distance(GroupKind::Extended, &law.compose(&g, &inv), &e) < 1e-12);
        assert!(element_distance(GroupKind::Extended, &law.compose(&inv, &g), &e) < 1e-12);
    }

    /// Same law with the rotation dropped from `v . R u'`.
    struct DroppedRotation(GalileiLaw<f64>);

    impl CocycleLaw<f64> for DroppedRotation {
        fn kind(&self) -> GroupKind {
            self.0.kind()
        }
        fn exponent(&self, g: &GroupElement, h: &GroupElement) -> f64 {
            let ru = f64::rotate(&g.theta, &h.u);
            self.0.exponent(g, h) + self.0.m * (dot(&g.v, &ru) - dot(&g.v, &h.u))
        }
    }

    #[test]
    fn corrupted_cocycle_breaks_associativity() {
        let bad = DroppedRotation(law(GroupKind::Extended, 1, 2, 0));
        let g = el(0.0, 0.3, [0.2, 0.9], [0.8, -0.5], 1.9);
        let h = el(0.0, -0.4, [0.7, -0.3], [0.1, 0.6], -2.2);
        let f = el(0.0, 0.5, [-0.6, 0.4], [0.3, 0.3], 0.9);
        assert!(associativity_defect(&bad, &g, &h, &f) > 0.1);
        assert!(associativity_defect(&bad.0, &g, &h, &f) < 1e-12);
    }

    #[test]
    fn coboundary_by_time_is_trivial() {
        let base = law(GroupKind::Covering, 1, 2, 3);
        let shifted = apply_coboundary(law(GroupKind::Covering, 1, 2, 3), Box::new(|g: &GroupElement| 2.5 * g.tau));
        let g = el(0.0, 0.3, [0.2, 0.9], [0.8, -0.5], 1.9);
        let h = el(0.0, -0.4, [0.7, -0.3], [0.1, 0.6], -2.2);
        assert!((shifted.exponent(&g, &h) - base.exponent(&g, &h)).abs() < 1e-15);
    }

    #[test]
    fn zero_trivializer_changes_nothing() {
        let shifted = apply_coboundary(law(GroupKind::Extended, 1, 2, 0), Box::new(|_: &GroupElement| 0.0));
        let base = law(GroupKind::Extended, 1, 2, 0);
        let g = el(0.0, 0.3, [0.2, 0.9], [0.8, -0.5], 1.9);
        let h = el(0.0, -0.4, [0.7, -0.3], [0.1, 0.6], -2.2);
        assert_eq!(shifted.exponent(&g, &h), base.exponent(&g, &h));
    }

    #[test]
    fn theorem2_map_trivial_cases() {
        let g = el(0.1, 0.2, [0.3, 0.4], [0.5, 0.6], 0.7);
        assert_eq!(theorem2_map(&ExtensionParams::from_ints(0, 3, 0), &g).unwrap(), g);
        let still = el(0.1, 0.2, [0.3, 0.4], [0.0, 0.0], 0.7);
        assert_eq!(theorem2_map(&ExtensionParams::from_ints(5, 3, 0), &still).unwrap(), still);
        assert!(theorem2_map(&ExtensionParams::from_ints(5, 0, 0), &g).is_err());
    }

    #[test]
    fn theorem2_sign_is_pinned() {
        // Mismatch of the wrong sign is exactly k (v x R v') in the phase.
        let params = ExtensionParams::from_ints(1, 2, 0);
        let from = law(GroupKind::Extended, 1, 2, 0);
        let to = law(GroupKind::Extended, 0, 2, 0);
        let good = Theorem2Map::<f64>::with_sign(&params, 1).unwrap();
        let bad = Theorem2Map::<f64>::with_sign(&params, -1).unwrap();
        let g = el(0.0, 0.3, [0.2, 0.9], [0.8, -0.5], 1.9);
        let h = el(0.0, -0.4, [0.7, -0.3], [0.1, 0.6], -2.2);
        assert!(homomorphism_defect(&from, &to, |x| good.apply(x), &g, &h) < 1e-12);
        let rv = f64::rotate(&g.theta, &h.v);
        let expected = wrap_angle(cross(&g.v, &rv)).abs();
        let d = homomorphism_defect(&from, &to, |x| bad.apply(x), &g, &h);
        assert!((d - expected).abs() < 1e-12, "{d} vs {expected}");
    }

    #[test]
    fn exact_mode_is_exactly_associative() {
        let params = ExtensionParams::new(ratio(3, 2), ratio(-5, 3), int(0));
        let law = GalileiLaw::<Rational>::new(GroupKind::Extended, &params).unwrap();
        let mk = |a: i64, b: i64| Element::new(ratio(a, 3), ratio(b, 5), [ratio(a, 7), int(b)], [ratio(b, 2), ratio(a, 9)], int(0));
        let (g, h, f) = (mk(1, 2), mk(-3, 4), mk(5, -1));
        assert!(exact_associativity_defect(&law, &g, &h, &f).is_zero());
        let inv = law.inverse(&g);
        assert_eq!(law.compose(&g, &inv), ExactElement::identity());
    }

    #[test]
    fn element_json_shape() {
        let g = el(0.5, 1.0, [2.0, 3.0], [4.0, 5.0], 0.25);
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"phase":0.5,"tau":1.0,"u":[2.0,3.0],"v":[4.0,5.0],"theta":0.25}"#);
    }
}
