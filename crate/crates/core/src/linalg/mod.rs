//! Exact integer and rational linear algebra.

mod echelon;
mod lattice;
mod matrix;
mod zint;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use echelon::{echelon, pivot_step, Echelon, Step};
pub use lattice::{quotient_coords, saturate, QuotientMap, SaturatedLattice};
pub use matrix::IntMatrix;
pub use zint::{narrow, Zint};

pub type Int = BigInt;
pub type Rat = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix has rank {rank}, expected full row rank {rows}")]
    RankDeficient { rank: usize, rows: usize },
}

/// Row-style Hermite normal form of a full-row-rank matrix.
///
/// Returns `H = U * M` with `U` unimodular, together with `det(U)`.
pub fn row_hnf(m: &IntMatrix) -> Result<(IntMatrix, i8), LinalgError> {
    let e = echelon(m.to_rows(), m.cols()).expect("BigInt arithmetic cannot overflow");
    if e.rank < m.rows() {
        return Err(LinalgError::RankDeficient { rank: e.rank, rows: m.rows() });
    }
    let h = IntMatrix::from_rows(m.cols(), &e.rows)?;
    Ok((h, if e.flips % 2 == 0 { 1 } else { -1 }))
}

/// Hermite form of an arbitrary matrix (zero rows at the bottom) and its rank.
pub fn hnf_any_rank(m: &IntMatrix) -> (IntMatrix, usize) {
    let e = echelon(m.to_rows(), m.cols()).expect("BigInt arithmetic cannot overflow");
    (IntMatrix::from_rows(m.cols(), &e.rows).expect("shape preserved"), e.rank)
}

/// Rank over the rationals, by fraction-free (Bareiss) elimination.
pub fn rank_rational(m: &IntMatrix) -> usize {
    bareiss(m.to_rows(), m.cols()).0
}

/// Determinant of a square matrix, by Bareiss elimination.
pub fn determinant(m: &IntMatrix) -> Result<BigInt, LinalgError> {
    if m.rows() != m.cols() {
        return Err(LinalgError::Shape(format!("determinant of a {}x{} matrix", m.rows(), m.cols())));
    }
    let (rank, det) = bareiss(m.to_rows(), m.cols());
    Ok(if rank < m.rows() { BigInt::zero() } else { det })
}

// Returns (rank, signed last pivot). The second value is the determinant
// when the input is square of full rank.
fn bareiss(mut a: Vec<Vec<BigInt>>, ncols: usize) -> (usize, BigInt) {
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            sign = -sign;
        }
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    let det = if sign < 0 { -prev } else { prev };
    (rank, det)
}

/// Some rational solution of `A x = b`, or `None` when the system is
/// inconsistent. Free variables are set to zero.
pub fn solve_rational(a: &IntMatrix, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(b.len(), a.rows(), "right-hand side length must match row count");
    let n = a.cols();
    let mut rows: Vec<Vec<Rat>> = (0..a.rows())
        .map(|i| {
            let mut r: Vec<Rat> = a.row(i).iter().map(|x| Rat::from_integer(x.clone())).collect();
            r.push(b[i].clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(p, rank);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..=n {
                    let d = &f * &rows[rank][c];
                    rows[r][c] -= d;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if rows[rank..].iter().any(|r| !r[n].is_zero()) {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rows[i][n].clone();
    }
    Some(x)
}

/// Rows `w` spanning `{ w : w * X = 0 }` for an `n x r` matrix `X`.
///
/// The rows returned form a basis of a saturated sublattice of `Z^n`.
pub fn left_kernel(x: &IntMatrix) -> IntMatrix {
    let n = x.rows();
    let aug = x.hcat(&IntMatrix::identity(n)).expect("same row count");
    let e = echelon(aug.to_rows(), aug.cols()).expect("BigInt arithmetic cannot overflow");
    let r = e.pivots.iter().filter(|&&p| p < x.cols()).count();
    let rows: Vec<Vec<BigInt>> = e.rows[r..].iter().map(|row| row[x.cols()..].to_vec()).collect();
    IntMatrix::from_rows(n, &rows).expect("shape preserved")
}

pub(crate) fn sign_of(v: &BigInt) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}
