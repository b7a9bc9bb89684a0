//! 2+1 dimensional Poincaré group and its contraction to the Galilei group.
//!
//! Lorentz matrices use the signature `eta = diag(+1, -1, -1)` and act on
//! `(x^0, x^1, x^2)` with `x^0 = c t`. Every matrix is stored as its deviation
//! `Lambda - I`. For large `c` the interesting quantities (the Wigner angle,
//! `c (Lambda^0_0 - 1)`) are `O(1/c^2)` corrections to entries of size one;
//! keeping the deviation keeps them at full relative precision in `f64`.

pub mod experiments;

use nalgebra::{Matrix3, Vector3};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group_cocycle::{cross, wrap_angle, Element, GroupElement};

/// Absolute tolerance for matrix identities.
pub const MATRIX_TOL: f64 = 1e-10;

fn eta() -> Matrix3<f64> {
    Matrix3::from_diagonal(&Vector3::new(1.0, -1.0, -1.0))
}

/// Proper orthochronous Lorentz matrix, stored as `Lambda - I`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lorentz {
    dev: Matrix3<f64>,
}

impl Lorentz {
    pub fn identity() -> Self {
        Self { dev: Matrix3::zeros() }
    }

    /// Takes a full matrix. Small deviations from the identity lose relative
    /// precision here; prefer [`boost`] and [`rotation`] when possible.
    pub fn from_matrix(m: Matrix3<f64>) -> Self {
        Self { dev: m - Matrix3::identity() }
    }

    pub fn from_deviation(dev: Matrix3<f64>) -> Self {
        Self { dev }
    }

    pub fn matrix(&self) -> Matrix3<f64> {
        self.dev + Matrix3::identity()
    }

    pub fn deviation(&self) -> &Matrix3<f64> {
        &self.dev
    }

    /// `(I + A)(I + B) = I + (A + B + A B)`.
    pub fn mul(&self, other: &Lorentz) -> Lorentz {
        Lorentz { dev: self.dev * other.dev + self.dev + other.dev }
    }

    /// `Lambda^-1 = eta Lambda^T eta`.
    pub fn inverse(&self) -> Lorentz {
        let eta = eta();
        Lorentz { dev: eta * self.dev.transpose() * eta }
    }

    pub fn apply(&self, x: &Vector3<f64>) -> Vector3<f64> {
        x + self.dev * x
    }

    /// Largest entry of `Lambda^T eta Lambda - eta`.
    pub fn metric_defect(&self) -> f64 {
        let eta = eta();
        let d = self.dev;
        let m = d.transpose() * eta + eta * d + d.transpose() * eta * d;
        m.abs().max()
    }

    pub fn determinant(&self) -> f64 {
        self.matrix().determinant()
    }

    pub fn is_orthochronous(&self) -> bool {
        self.dev[(0, 0)] >= -MATRIX_TOL
    }
}

fn check_speed(v: &[f64; 2], c: f64) -> Result<f64> {
    let speed = v[0].hypot(v[1]);
    if !(c > 0.0) || !(speed < c) {
        return Err(Error::Superluminal { speed, c });
    }
    Ok(speed)
}

/// Pure boost with velocity `v` measured against `c`.
pub fn boost(v: &[f64; 2], c: f64) -> Result<Lorentz> {
    let speed = check_speed(v, c)?;
    if speed == 0.0 {
        return Ok(Lorentz::identity());
    }
    Ok(boost_from_beta(&[v[0] / c, v[1] / c]))
}

/// Boost with dimensionless velocity `beta = v / c`, `|beta| < 1`.
fn boost_from_beta(beta: &[f64; 2]) -> Lorentz {
    let b2 = beta[0] * beta[0] + beta[1] * beta[1];
    let gamma = 1.0 / (1.0 - b2).sqrt();
    // gamma - 1 = gamma^2 beta^2 / (1 + gamma), and (gamma - 1) / beta^2 = gamma^2 / (1 + gamma)
    let g2_over = gamma * gamma / (1.0 + gamma);
    let mut dev = Matrix3::zeros();
    dev[(0, 0)] = g2_over * b2;
    for i in 0..2 {
        dev[(0, i + 1)] = gamma * beta[i];
        dev[(i + 1, 0)] = gamma * beta[i];
        for k in 0..2 {
            dev[(i + 1, k + 1)] = g2_over * beta[i] * beta[k];
        }
    }
    Lorentz { dev }
}

/// Spatial rotation with block `[[cos, sin], [-sin, cos]]`.
pub fn rotation(theta: f64) -> Lorentz {
    let (s, _) = theta.sin_cos();
    let cm1 = -2.0 * (0.5 * theta).sin().powi(2);
    let mut dev = Matrix3::zeros();
    dev[(1, 1)] = cm1;
    dev[(2, 2)] = cm1;
    dev[(1, 2)] = s;
    dev[(2, 1)] = -s;
    Lorentz { dev }
}

/// Full boost matrix `L(v)`: `L^0_0 = gamma`, `L^0_i = L^i_0 = gamma v_i / c`,
/// `L^i_k = delta_ik + (gamma - 1) v_i v_k / v^2`.
pub fn boost_matrix(v: &[f64; 2], c: f64) -> Result<Matrix3<f64>> {
    Ok(boost(v, c)?.matrix())
}

/// Element `{Lambda, a}` of the 2+1 Poincaré group, with the speed of light
/// it is measured against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoincareElement {
    pub lambda: Lorentz,
    pub a: Vector3<f64>,
    pub c: f64,
}

impl PoincareElement {
    pub fn new(lambda: Lorentz, a: Vector3<f64>, c: f64) -> Self {
        Self { lambda, a, c }
    }

    pub fn identity(c: f64) -> Self {
        Self::new(Lorentz::identity(), Vector3::zeros(), c)
    }

    pub fn translation(a: Vector3<f64>, c: f64) -> Self {
        Self::new(Lorentz::identity(), a, c)
    }

    /// `{L(v) R(theta), (c tau, u)}` for the Galilei parameters of `g`
    /// (the phase is ignored).
    pub fn from_galilei(g: &GroupElement, c: f64) -> Result<Self> {
        let lambda = boost(&g.v, c)?.mul(&rotation(g.theta));
        Ok(Self::new(lambda, Vector3::new(c * g.tau, g.u[0], g.u[1]), c))
    }

    /// `{Lambda, a}{Lambda', a'} = {Lambda Lambda', Lambda a' + a}`.
    pub fn mul(&self, other: &PoincareElement) -> PoincareElement {
        PoincareElement::new(self.lambda.mul(&other.lambda), self.lambda.apply(&other.a) + self.a, self.c)
    }
}

/// `Lambda = L(v) R(theta)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoostDecomposition {
    pub v: [f64; 2],
    pub theta: f64,
}

/// Splits `Lambda` into `beta = v / c` and the angle of the rotation factor.
fn split(lambda: &Lorentz) -> Result<([f64; 2], f64)> {
    if !lambda.is_orthochronous() {
        return Err(Error::NotOrthochronous(1.0 + lambda.dev[(0, 0)]));
    }
    let g = 1.0 + lambda.dev[(0, 0)];
    let beta = [lambda.dev[(1, 0)] / g, lambda.dev[(2, 0)] / g];
    let residual = boost_from_beta(&[-beta[0], -beta[1]]).mul(lambda);
    let r = residual.dev;
    // Time row/column must vanish, the spatial block must be in SO(2).
    let block = r.fixed_view::<2, 2>(1, 1).into_owned();
    let ortho = block.transpose() + block + block.transpose() * block;
    let det = (1.0 + r[(1, 1)]) * (1.0 + r[(2, 2)]) - r[(1, 2)] * r[(2, 1)];
    let defect = [r[(0, 0)], r[(0, 1)], r[(0, 2)], r[(1, 0)], r[(2, 0)], det - 1.0]
        .iter()
        .map(|x| x.abs())
        .fold(ortho.abs().max(), f64::max);
    if !(defect <= MATRIX_TOL) {
        return Err(Error::NotARotation(defect));
    }
    Ok((beta, r[(1, 2)].atan2(1.0 + r[(1, 1)])))
}

/// `Lambda = L(v) R(theta)` with `v_i = c Lambda^i_0 / Lambda^0_0`.
pub fn decompose(p: &PoincareElement) -> Result<BoostDecomposition> {
    let (beta, theta) = split(&p.lambda)?;
    Ok(BoostDecomposition { v: [p.c * beta[0], p.c * beta[1]], theta })
}

/// Angle of the rotation factor of `Lambda`; independent of `c`.
pub fn rotation_angle(lambda: &Lorentz) -> Result<f64> {
    Ok(split(lambda)?.1)
}

/// `L(v) L(w) = L(v'') R(delta_theta)`; returns `(v'', delta_theta)`.
pub fn compose_boosts(v: &[f64; 2], w: &[f64; 2], c: f64) -> Result<([f64; 2], f64)> {
    let product = PoincareElement::new(boost(v, c)?.mul(&boost(w, c)?), Vector3::zeros(), c);
    let d = decompose(&product)?;
    Ok((d.v, d.theta))
}

/// Limit of `c^2 delta_theta`: `(v x w) / 2`.
pub fn thomas_target(v: &[f64; 2], w: &[f64; 2]) -> f64 {
    0.5 * cross(v, w)
}

/// Trivializing function of the mass cocycle: `zeta({Lambda, a}) = c a^0`.
pub fn mass_zeta(p: &PoincareElement) -> f64 {
    p.c * p.a[0]
}

/// `zeta(g h) - zeta(g) - zeta(h)` for `zeta = c a^0`.
///
/// The zeroth component of `Lambda a' + a` minus `a^0 + a'^0` is
/// `(Lambda - I)^0_mu a'^mu`; evaluating it through the stored deviation avoids
/// subtracting two numbers of size `c^2`.
pub fn mass_cocycle_exponent(g: &PoincareElement, h: &PoincareElement) -> f64 {
    let row = g.lambda.dev.row(0);
    g.c * (row[0] * h.a[0] + row[1] * h.a[1] + row[2] * h.a[2])
}

/// `c^2 (theta(Lambda Lambda') - theta(Lambda) - theta(Lambda'))`, with the
/// angle difference reduced to `(-pi, pi]` before scaling.
pub fn rotation_cocycle_exponent(lam1: &Lorentz, lam2: &Lorentz, c: f64) -> Result<f64> {
    let t12 = rotation_angle(&lam1.mul(lam2))?;
    let t1 = rotation_angle(lam1)?;
    let t2 = rotation_angle(lam2)?;
    Ok(c * c * wrap_angle(t12 - t1 - t2))
}

/// Galilei parameters of `X^-1 {Lambda, a} X` in the contraction limit:
/// `tau = a^0 / c`, `u = (a^1, a^2)`, `(v, theta)` from [`decompose`], zero phase.
pub fn contract_element(p: &PoincareElement) -> Result<GroupElement> {
    let d = decompose(p)?;
    Ok(Element::new(0.0, p.a[0] / p.c, [p.a[1], p.a[2]], d.v, d.theta))
}
