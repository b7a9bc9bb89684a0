//! Finite-dimensional Lie algebras given by rational structure constants.
//!
//! The extended Galilei algebra is stored with real structure constants: every
//! generator of the physical (Hermitian) basis is multiplied by `-i`, which
//! removes the factor `i` from each bracket and leaves the table otherwise
//! unchanged. With the basis `E, H, P1, P2, N1, N2, M` the nonzero brackets are
//!
//! ```text
//! [N_i, H]   = P_i            [M, P_i] = eps_ij P_j
//! [N_i, N_j] = k eps_ij E     [M, N_i] = eps_ij N_j
//! [N_i, P_j] = m delta_ij E   [M, H]   = l E
//! ```
//!
//! with `eps_12 = +1`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, RationalMatrix};
use crate::rational::{ExtensionParams, Rational};

/// Basis of the extended Galilei algebra, in storage order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    E,
    H,
    P1,
    P2,
    N1,
    N2,
    M,
}

impl Generator {
    pub const ALL: [Generator; 7] = [
        Generator::E,
        Generator::H,
        Generator::P1,
        Generator::P2,
        Generator::N1,
        Generator::N2,
        Generator::M,
    ];

    /// The six non-central generators.
    pub const NON_CENTRAL: [Generator; 6] = [
        Generator::H,
        Generator::P1,
        Generator::P2,
        Generator::N1,
        Generator::N2,
        Generator::M,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> &'static str {
        match self {
            Generator::E => "E",
            Generator::H => "H",
            Generator::P1 => "P1",
            Generator::P2 => "P2",
            Generator::N1 => "N1",
            Generator::N2 => "N2",
            Generator::M => "M",
        }
    }

    pub fn from_label(label: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|g| g.label() == label)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Levi-Civita symbol in two dimensions, `eps(0, 1) = +1`.
pub fn eps(i: usize, j: usize) -> i64 {
    match (i, j) {
        (0, 1) => 1,
        (1, 0) => -1,
        _ => 0,
    }
}

/// Coefficient vector of an algebra element in the algebra's basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    pub coefficients: Vec<Rational>,
}

impl AlgebraElement {
    pub fn zero(dim: usize) -> Self {
        Self { coefficients: vec![Rational::zero(); dim] }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coefficients[i] = Rational::one();
        e
    }

    pub fn generator(g: Generator) -> Self {
        Self::basis(Generator::ALL.len(), g.index())
    }

    pub fn from_coefficients(coefficients: Vec<Rational>) -> Self {
        Self { coefficients }
    }

    pub fn dim(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self { coefficients: self.coefficients.iter().map(|c| c * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim(), other.dim())?;
        Ok(Self {
            coefficients: self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Invertible change of basis. Row `a` holds the coordinates of the new basis
/// vector `X'_a` in the old basis: `X'_a = sum_b matrix[a][b] X_b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisChange {
    matrix: RationalMatrix,
}

impl BasisChange {
    pub fn new(matrix: RationalMatrix) -> Result<Self> {
        let n = matrix.len();
        for row in &matrix {
            check_dim(n, row.len())?;
        }
        if linalg::determinant(&matrix).is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(Self { matrix })
    }

    pub fn identity(dim: usize) -> Self {
        Self { matrix: linalg::identity(dim) }
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == linalg::identity(self.dim())
    }

    pub fn inverse(&self) -> Self {
        Self { matrix: linalg::inverse(&self.matrix).expect("basis change is invertible by construction") }
    }

    /// Image of a new basis vector in the old basis.
    pub fn image(&self, a: usize) -> AlgebraElement {
        AlgebraElement::from_coefficients(self.matrix[a].clone())
    }
}

/// Lie algebra given by a labeled basis and structure constants
/// `[X_i, X_j] = sum_k c[i][j][k] X_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    structure: Vec<Rational>,
}

impl LieAlgebra {
    /// Builds an algebra from a flat `dim^3` tensor. Only shapes are checked;
    /// antisymmetry and Jacobi are reported by [`Self::antisymmetry_defect`]
    /// and [`Self::jacobi_defect`].
    pub fn from_tensor(labels: Vec<String>, structure: Vec<Rational>) -> Result<Self> {
        let n = labels.len();
        check_dim(n * n * n, structure.len())?;
        Ok(Self { labels, structure })
    }

    pub fn zero(labels: Vec<String>) -> Self {
        let n = labels.len();
        Self { labels, structure: vec![Rational::zero(); n * n * n] }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        let n = self.dim();
        (i * n + j) * n + k
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.structure[self.offset(i, j, k)]
    }

    /// Overwrites one entry, leaving its antisymmetric partner untouched.
    pub fn set_constant(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        let o = self.offset(i, j, k);
        self.structure[o] = value;
    }

    /// Sets `[X_i, X_j]_k = value` and `[X_j, X_i]_k = -value`.
    pub fn set_bracket(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        self.set_constant(j, i, k, -value.clone());
        self.set_constant(i, j, k, value);
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> AlgebraElement {
        let n = self.dim();
        let start = self.offset(i, j, 0);
        AlgebraElement::from_coefficients(self.structure[start..start + n].to_vec())
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        let n = self.dim();
        check_dim(n, x.dim())?;
        check_dim(n, y.dim())?;
        let mut out = AlgebraElement::zero(n);
        for (i, xi) in x.coefficients.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.coefficients.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let w = xi * yj;
                for k in 0..n {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        out.coefficients[k] += &w * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `max |c[i][j][k] + c[j][i][k]|`.
    pub fn antisymmetry_defect(&self) -> Rational {
        let n = self.dim();
        let mut worst = Rational::zero();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let d = (self.constant(i, j, k) + self.constant(j, i, k)).abs();
                    if d > worst {
                        worst = d;
                    }
                }
            }
        }
        worst
    }

    /// Largest absolute value over `(i, j, k, n)` of
    /// `sum_m c[i][j][m] c[m][k][n] + c[j][k][m] c[m][i][n] + c[k][i][m] c[m][j][n]`.
    pub fn jacobi_defect(&self) -> Rational {
        let n = self.dim();
        // Sparse rows of the tensor: for each (i, j) the nonzero (m, c[i][j][m]).
        let sparse: Vec<Vec<(usize, &Rational)>> = (0..n * n)
            .map(|ij| {
                (0..n)
                    .map(|m| (m, &self.structure[ij * n + m]))
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect();
        let double = |a: usize, b: usize, c: usize, acc: &mut Vec<Rational>| {
            for &(m, cab) in &sparse[a * n + b] {
                for &(k, cmc) in &sparse[m * n + c] {
                    acc[k] += cab * cmc;
                }
            }
        };
        let mut worst = Rational::zero();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut acc = vec![Rational::zero(); n];
                    double(i, j, k, &mut acc);
                    double(j, k, i, &mut acc);
                    double(k, i, j, &mut acc);
                    for v in acc {
                        let v = v.abs();
                        if v > worst {
                            worst = v;
                        }
                    }
                }
            }
        }
        worst
    }

    /// Structure constants of the same algebra in the basis `X'_a = sum_b T[a][b] X_b`:
    /// `c'[a][b][c] = sum T[a][i] T[b][j] c[i][j][k] Tinv[k][c]`.
    pub fn apply_basis_change(&self, t: &BasisChange) -> Result<LieAlgebra> {
        let n = self.dim();
        check_dim(n, t.dim())?;
        let tm = t.matrix();
        let tinv = linalg::inverse(tm)?;
        // First express each [X'_a, X'_b] in the old basis, then change coordinates.
        let mut out = LieAlgebra::zero(self.labels.clone());
        for a in 0..n {
            for b in 0..n {
                let old = self.bracket(&t.image(a), &t.image(b))?;
                for c in 0..n {
                    let v: Rational = old
                        .coefficients
                        .iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(k, x)| x * &tinv[k][c])
                        .sum();
                    out.set_constant(a, b, c, v);
                }
            }
        }
        Ok(out)
    }
}

/// True iff both algebras have the same labels and identical structure constants.
pub fn algebras_equal(a: &LieAlgebra, b: &LieAlgebra) -> bool {
    a == b
}

/// The 7-dimensional centrally extended Galilei algebra `g(k, m, l)`.
pub fn make_galilei_algebra(params: &ExtensionParams) -> LieAlgebra {
    use Generator::*;
    let labels = Generator::ALL.iter().map(|g| g.label().to_string()).collect();
    let mut alg = LieAlgebra::zero(labels);
    let one = Rational::one();
    let n = [N1, N2];
    let p = [P1, P2];
    for i in 0..2 {
        alg.set_bracket(n[i].index(), H.index(), p[i].index(), one.clone());
        alg.set_bracket(n[i].index(), p[i].index(), E.index(), params.m.clone());
        for j in 0..2 {
            let e = eps(i, j);
            if e == 0 {
                continue;
            }
            let e = Rational::from_integer(e.into());
            if i < j {
                alg.set_bracket(n[i].index(), n[j].index(), E.index(), &params.k * &e);
            }
            alg.set_bracket(M.index(), p[i].index(), p[j].index(), e.clone());
            alg.set_bracket(M.index(), n[i].index(), n[j].index(), e);
        }
    }
    alg.set_bracket(M.index(), H.index(), E.index(), params.l.clone());
    alg
}

/// Basis change removing the `k` extension when `m != 0`: every generator is
/// kept except `N_i -> N_i + (k / 2m) eps_ij P_j`.
///
/// The shift sign `+1` is the one for which the transformed `g(k, m, l)`
/// coincides with `g(0, m, l)`; see the regression test below.
pub fn theorem1_change(params: &ExtensionParams) -> Result<BasisChange> {
    theorem1_change_with_sign(params, 1)
}

pub(crate) fn theorem1_change_with_sign(params: &ExtensionParams, sign: i64) -> Result<BasisChange> {
    use Generator::*;
    if params.m.is_zero() {
        return Err(Error::HypothesisViolated("m = 0: the k-removing basis change needs m != 0"));
    }
    let shift = &params.k / (Rational::from_integer(2.into()) * &params.m) * Rational::from_integer(sign.into());
    let mut t = linalg::identity(Generator::ALL.len());
    let n = [N1, N2];
    let p = [P1, P2];
    for i in 0..2 {
        for j in 0..2 {
            let e = eps(i, j);
            if e != 0 {
                t[n[i].index()][p[j].index()] = &shift * Rational::from_integer(e.into());
            }
        }
    }
    BasisChange::new(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use Generator::*;

    fn gen(g: Generator) -> AlgebraElement {
        AlgebraElement::generator(g)
    }

    fn bracket_of(alg: &LieAlgebra, a: Generator, b: Generator) -> AlgebraElement {
        alg.bracket(&gen(a), &gen(b)).unwrap()
    }

    #[test]
    fn bracket_table_matches_extension() {
        let alg = make_galilei_algebra(&ExtensionParams::from_ints(1, 2, 3));
        assert_eq!(bracket_of(&alg, N1, P1), gen(E).scale(&int(2)));
        assert!(bracket_of(&alg, H, P1).is_zero());
        assert_eq!(bracket_of(&alg, M, N1), gen(N2));
        assert_eq!(bracket_of(&alg, M, N2), gen(N1).scale(&int(-1)));
        assert_eq!(bracket_of(&alg, N1, N2), gen(E));
        assert_eq!(bracket_of(&alg, M, H), gen(E).scale(&int(3)));
        let n1_plus_n2 = gen(N1).add(&gen(N2)).unwrap();
        let expected = gen(P1).add(&gen(P2)).unwrap();
        assert_eq!(alg.bracket(&n1_plus_n2, &gen(H)).unwrap(), expected);
    }

    #[test]
    fn zero_params_decouple_the_center() {
        let alg = make_galilei_algebra(&ExtensionParams::zero());
        for i in 0..7 {
            for j in 0..7 {
                assert!(alg.constant(i, j, E.index()).is_zero());
            }
        }
        assert!(alg.jacobi_defect().is_zero());
    }

    #[test]
    fn self_bracket_vanishes() {
        let alg = make_galilei_algebra(&ExtensionParams::new(ratio(1, 3), int(-2), int(5)));
        let x = AlgebraElement::from_coefficients((1..=7).map(|i| ratio(i, 7 - i + 1)).collect());
        assert!(alg.bracket(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn bracket_rejects_wrong_dimension() {
        let alg = make_galilei_algebra(&ExtensionParams::zero());
        let err = alg.bracket(&AlgebraElement::zero(3), &gen(H)).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { expected: 7, found: 3 }));
    }

    #[test]
    fn one_sided_corruption_of_boost_pair_is_invisible_to_cyclic_jacobi() {
        // Flipping c[N1][N2][E] alone keeps the cyclic Jacobi sum at zero: the
        // entry only enters through pairs [[M, N_a], N_b] + [[N_a, M], N_b].
        // The antisymmetry check is what catches it.
        let mut alg = make_galilei_algebra(&ExtensionParams::from_ints(1, 2, 3));
        alg.set_constant(N1.index(), N2.index(), E.index(), int(-1));
        assert!(alg.jacobi_defect().is_zero());
        assert_eq!(alg.antisymmetry_defect(), int(2));
    }

    #[test]
    fn one_sided_corruption_of_mass_pair_breaks_jacobi() {
        // Triple (M, P2, N1): -c[P1][N1][E] - m, which is -2m once the
        // lower entry is flipped to +m.
        let mut alg = make_galilei_algebra(&ExtensionParams::from_ints(1, 2, 3));
        alg.set_constant(P1.index(), N1.index(), E.index(), int(2));
        assert_eq!(alg.jacobi_defect(), int(4));
    }

    #[test]
    fn identity_change_is_a_no_op() {
        let alg = make_galilei_algebra(&ExtensionParams::from_ints(1, 2, 3));
        let same = alg.apply_basis_change(&BasisChange::identity(7)).unwrap();
        assert!(algebras_equal(&alg, &same));
    }

    #[test]
    fn scaling_boosts_scales_mass_bracket() {
        let params = ExtensionParams::from_ints(0, 3, 0);
        let alg = make_galilei_algebra(&params);
        let mut t = linalg::identity(7);
        t[N1.index()][N1.index()] = int(2);
        t[N2.index()][N2.index()] = int(2);
        let scaled = alg.apply_basis_change(&BasisChange::new(t).unwrap()).unwrap();
        for (n, p) in [(N1, P1), (N2, P2)] {
            assert_eq!(scaled.constant(n.index(), p.index(), E.index()), &int(6));
        }
        assert!(scaled.constant(N1.index(), P2.index(), E.index()).is_zero());
        assert_eq!(scaled.constant(N1.index(), H.index(), P1.index()), &int(2));
        assert!(scaled.jacobi_defect().is_zero());
    }

    #[test]
    fn singular_basis_change_is_rejected() {
        let mut t = linalg::identity(7);
        t[M.index()][M.index()] = int(0);
        assert!(matches!(BasisChange::new(t), Err(Error::SingularMatrix)));
    }

    #[test]
    fn theorem1_shift_has_expected_entries() {
        let t = theorem1_change(&ExtensionParams::from_ints(1, 2, 0)).unwrap();
        let m = t.matrix();
        assert_eq!(m[N1.index()][P2.index()], ratio(1, 4));
        assert_eq!(m[N2.index()][P1.index()], ratio(-1, 4));
        assert_eq!(m[N1.index()][N1.index()], int(1));
        assert!(m[N1.index()][P1.index()].is_zero());
    }

    #[test]
    fn theorem1_is_identity_when_k_vanishes() {
        let t = theorem1_change(&ExtensionParams::from_ints(0, 5, 7)).unwrap();
        assert!(t.is_identity());
    }

    #[test]
    fn theorem1_requires_nonzero_mass() {
        let err = theorem1_change(&ExtensionParams::from_ints(1, 0, 1)).unwrap_err();
        assert!(matches!(err, Error::HypothesisViolated(_)));
    }

    #[test]
    fn theorem1_sign_is_pinned() {
        // Only the + shift removes k; the - shift doubles it.
        let params = ExtensionParams::new(ratio(3, 2), int(2), int(1));
        let target = make_galilei_algebra(&params.without_k());
        let alg = make_galilei_algebra(&params);
        let plus = alg.apply_basis_change(&theorem1_change_with_sign(&params, 1).unwrap()).unwrap();
        let minus = alg.apply_basis_change(&theorem1_change_with_sign(&params, -1).unwrap()).unwrap();
        assert!(algebras_equal(&plus, &target));
        assert!(!algebras_equal(&minus, &target));
        assert_eq!(minus.constant(N1.index(), N2.index(), E.index()), &ratio(3, 1));
    }

    #[test]
    fn extended_algebras_differ_before_the_change() {
        let a = make_galilei_algebra(&ExtensionParams::from_ints(1, 2, 0));
        let b = make_galilei_algebra(&ExtensionParams::from_ints(0, 2, 0));
        assert!(!algebras_equal(&a, &b));
        let moved = a.apply_basis_change(&theorem1_change(&ExtensionParams::from_ints(1, 2, 0)).unwrap()).unwrap();
        assert!(algebras_equal(&moved, &b));
    }
}
