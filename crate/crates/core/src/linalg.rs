//! Exact dense linear algebra over the rationals.
//!
//! Kernel computations clear denominators row by row and then eliminate over
//! the integers (fraction-free), dividing each row by the gcd of its entries
//! to keep coefficient growth in check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Dense row-major rational matrix.
pub type RationalMatrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> RationalMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let n = a.len();
    let inner = b.len();
    let p = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![Rational::zero(); p]; n];
    for i in 0..n {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..p {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// Inverse by Gauss-Jordan elimination.
pub fn inverse(m: &RationalMatrix) -> Result<RationalMatrix> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: m.iter().map(Vec::len).find(|&l| l != n).unwrap_or(n) });
    }
    let mut a = m.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularMatrix)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &f * &a[col][j];
                a[r][j] -= t;
                let t = &f * &inv[col][j];
                inv[r][j] -= t;
            }
        }
    }
    Ok(inv)
}

pub fn determinant(m: &RationalMatrix) -> Rational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for j in col..n {
                let t = &f * &a[col][j];
                a[r][j] -= t;
            }
        }
    }
    det
}

/// Scales a rational row to a primitive integer row (gcd of entries 1).
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = row.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    make_primitive(ints)
}

fn make_primitive(mut row: Vec<BigInt>) -> Vec<BigInt> {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in &mut row {
            *x /= &g;
        }
    }
    row
}

/// Fully reduced integer echelon form. Returns rows together with their pivot
/// columns; every pivot column is zero outside its own row.
fn reduced_echelon(rows: &[Vec<Rational>], ncols: usize) -> Vec<(usize, Vec<BigInt>)> {
    let mut work: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| integer_row(r))
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut pivots: Vec<(usize, Vec<BigInt>)> = Vec::new();
    for col in 0..ncols {
        let Some(idx) = work.iter().position(|r| !r[col].is_zero()) else {
            continue;
        };
        let mut prow = work.swap_remove(idx);
        if prow[col].is_negative() {
            for x in &mut prow {
                *x = -&*x;
            }
        }
        let eliminate = |row: &mut Vec<BigInt>, prow: &[BigInt]| {
            if row[col].is_zero() {
                return;
            }
            let g = prow[col].gcd(&row[col]);
            let a = &prow[col] / &g;
            let b = &row[col] / &g;
            for (x, p) in row.iter_mut().zip(prow) {
                *x = &a * &*x - &b * p;
            }
            let reduced = make_primitive(std::mem::take(row));
            *row = reduced;
        };
        for row in &mut work {
            eliminate(row, &prow);
        }
        work.retain(|r| r.iter().any(|x| !x.is_zero()));
        for (_, row) in &mut pivots {
            eliminate(row, &prow);
        }
        pivots.push((col, prow));
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    reduced_echelon(rows, ncols).len()
}

/// Basis of `{x : A x = 0}` where `A` is given by `rows` with `ncols` columns.
///
/// One basis vector per free column, with a 1 in that column and 0 in every
/// other free column; the result is deterministic for a given input.
pub fn kernel_basis(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let echelon = reduced_echelon(rows, ncols);
    let pivot_cols: Vec<usize> = echelon.iter().map(|(c, _)| *c).collect();
    (0..ncols)
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut x = vec![Rational::zero(); ncols];
            x[free] = Rational::one();
            for (pc, row) in &echelon {
                if !row[free].is_zero() {
                    x[*pc] = -Rational::new(row[free].clone(), row[*pc].clone());
                }
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1, 0], &[0, 1, 3], &[1, 0, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(3));
        assert_eq!(determinant(&a), int(5));
    }

    #[test]
    fn singular_is_rejected() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert!(matches!(inverse(&a), Err(Error::SingularMatrix)));
        assert_eq!(determinant(&a), int(0));
    }

    #[test]
    fn kernel_of_rank_deficient_system() {
        // x + y/2 - z = 0, 2x + y - 2z = 0 (dependent)
        let rows = vec![vec![int(1), ratio(1, 2), int(-1)], vec![int(2), int(1), int(-2)]];
        let ker = kernel_basis(&rows, 3);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for r in &rows {
                let dot: Rational = r.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
        assert_eq!(rank(&rows, 3), 1);
    }

    #[test]
    fn empty_system_has_full_kernel() {
        assert_eq!(kernel_basis(&[], 4).len(), 4);
    }
}
