//! Row-style Hermite normal form over any [`Zint`].
//!
//! Convention: each pivot lies strictly right of the pivot above it, pivots
//! are positive, and entries above a pivot lie in `[0, pivot)`. Entries of
//! non-pivot columns are left as they fall. Under this convention the form of
//! `U * M` is the same for every `U` in `GL_n(Z)`, for matrices of any rank.

use super::zint::Zint;

/// Outcome of reducing one column against the rows at and below `rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    /// Column already lies in the span of the existing pivot rows.
    NoPivot,
    /// A new pivot was placed at row `rank`. `flips` counts row swaps and
    /// row negations performed, so the transform's determinant changed by
    /// `(-1)^flips`.
    Pivot { flips: u32 },
}

/// `mat[target] -= q * mat[src]`.
pub(crate) fn row_sub_mul<T: Zint>(mat: &mut [Vec<T>], target: usize, src: usize, q: &T) -> Option<()> {
    if q.zis_zero() {
        return Some(());
    }
    let (t, s) = if target < src {
        let (a, b) = mat.split_at_mut(src);
        (&mut a[target], &b[0])
    } else {
        let (a, b) = mat.split_at_mut(target);
        (&mut b[0], &a[src])
    };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        if !y.zis_zero() {
            *x = x.zsub(&q.zmul(y)?)?;
        }
    }
    Some(())
}

pub(crate) fn negate_row<T: Zint>(row: &mut [T]) -> Option<()> {
    for x in row.iter_mut() {
        if !x.zis_zero() {
            *x = x.zneg()?;
        }
    }
    Some(())
}

/// Brings column `col` of `mat` into echelon position using rows `rank..`,
/// then reduces the entries above the new pivot. Row operations touch every
/// column of `mat`. Returns `None` on arithmetic overflow.
pub fn pivot_step<T: Zint>(mat: &mut [Vec<T>], rank: usize, col: usize) -> Option<Step> {
    let n = mat.len();
    let mut flips = 0u32;
    loop {
        let mut best: Option<(usize, T)> = None;
        for r in rank..n {
            let v = &mat[r][col];
            if v.zis_zero() {
                continue;
            }
            let a = v.zabs()?;
            if best.as_ref().map_or(true, |(_, b)| a < *b) {
                best = Some((r, a));
            }
        }
        let Some((r, _)) = best else {
            return Some(Step::NoPivot);
        };
        if r != rank {
            mat.swap(r, rank);
            flips += 1;
        }
        let mut clean = true;
        for r2 in rank + 1..n {
            if mat[r2][col].zis_zero() {
                continue;
            }
            let q = mat[r2][col].zdiv_trunc(&mat[rank][col])?;
            row_sub_mul(mat, r2, rank, &q)?;
            if !mat[r2][col].zis_zero() {
                clean = false;
            }
        }
        if clean {
            break;
        }
    }
    if mat[rank][col].zis_negative() {
        negate_row(&mut mat[rank])?;
        flips += 1;
    }
    let pivot = mat[rank][col].clone();
    for i in 0..rank {
        if mat[i][col].zis_zero() {
            continue;
        }
        let q = mat[i][col].zdiv_floor(&pivot)?;
        row_sub_mul(mat, i, rank, &q)?;
    }
    Some(Step::Pivot { flips })
}

/// Full echelon reduction of a row-major matrix.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    pub rows: Vec<Vec<T>>,
    pub rank: usize,
    pub pivots: Vec<usize>,
    /// Parity of row swaps and negations; the transform has determinant
    /// `(-1)^flips`.
    pub flips: u32,
}

pub fn echelon<T: Zint>(mut rows: Vec<Vec<T>>, ncols: usize) -> Option<Echelon<T>> {
    let mut rank = 0;
    let mut pivots = Vec::new();
    let mut flips = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        if let Step::Pivot { flips: f } = pivot_step(&mut rows, rank, col)? {
            flips += f;
            pivots.push(col);
            rank += 1;
        }
    }
    Some(Echelon { rows, rank, pivots, flips })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn echelon_of_small_matrix() {
        let e = echelon(vec![vec![2i64, 1], vec![0, 1]], 2).unwrap();
        assert_eq!(e.rows, vec![vec![2, 0], vec![0, 1]]);
        assert_eq!(e.rank, 2);
        assert_eq!(e.flips % 2, 0);
    }

    #[test]
    fn overflow_reported() {
        let big = i64::MAX / 2 + 7;
        let r = echelon(vec![vec![big, 3], vec![big - 1, i64::MAX]], 2);
        assert!(r.is_none());
    }

    #[test]
    fn rank_deficient_rows_sink() {
        let e = echelon(vec![vec![0i64, 0, 0], vec![1, 2, 3], vec![2, 4, 6]], 3).unwrap();
        assert_eq!(e.rank, 1);
        assert_eq!(e.rows[0], vec![1, 2, 3]);
        assert!(e.rows[1].iter().chain(&e.rows[2]).all(|x| *x == 0));
    }
}
