//! Saturated sublattices of `Z^n` and the quotient coordinates they induce.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{determinant, echelon, left_kernel, sign_of, IntMatrix};

/// A sublattice `L` of `Z^n` with `Z^n / L` torsion-free.
///
/// The basis is stored as the columns of an `n x rank` matrix whose
/// transpose is in Hermite normal form, so equal lattices have equal bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SaturatedLattice {
    ambient: usize,
    basis: IntMatrix,
    pivots: Vec<usize>,
}

impl SaturatedLattice {
    pub fn zero(ambient: usize) -> Self {
        SaturatedLattice { ambient, basis: IntMatrix::zeros(ambient, 0), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        SaturatedLattice { ambient, basis: IntMatrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    // `rows` must span a saturated lattice and be linearly independent.
    fn from_independent_rows(ambient: usize, rows: Vec<Vec<BigInt>>) -> Self {
        let e = echelon(rows, ambient).expect("BigInt arithmetic cannot overflow");
        debug_assert_eq!(e.rank, e.rows.len());
        let basis = IntMatrix::from_rows(ambient, &e.rows).expect("shape preserved").transpose();
        SaturatedLattice { ambient, basis, pivots: e.pivots }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// Basis vectors as the columns of an `ambient x rank` matrix.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// Integer coordinates `c` with `basis * c = v`, if `v` lies in the lattice.
    pub fn coords(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient, "vector length must match the ambient rank");
        let mut r = v.to_vec();
        let mut c = Vec::with_capacity(self.rank());
        for (i, &p) in self.pivots.iter().enumerate() {
            let b = self.basis.get(p, i);
            if !(&r[p] % b).is_zero() {
                return None;
            }
            let q = &r[p] / b;
            if !q.is_zero() {
                for (k, x) in r.iter_mut().enumerate() {
                    *x -= &q * self.basis.get(k, i);
                }
            }
            c.push(q);
        }
        if r.iter().all(Zero::is_zero) {
            Some(c)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coords(v).is_some()
    }
}

/// Saturation of the span of the given columns: `(Q-span) ∩ Z^n`.
pub fn saturate(span_of: &IntMatrix) -> SaturatedLattice {
    let n = span_of.rows();
    if span_of.cols() == 0 || span_of.is_zero() {
        return SaturatedLattice::zero(n);
    }
    // Annihilator of the span, then everything it annihilates.
    let annihilator = left_kernel(span_of);
    let sat = left_kernel(&annihilator.transpose());
    SaturatedLattice::from_independent_rows(n, sat.to_rows())
}

/// Surjection `Z^n -> Z^(n - rank L)` with kernel exactly `L`.
///
/// `orientation` is the sign of `det [B | C]`, where `B` is the lattice
/// basis and `C` the columns with `matrix * C = I` chosen by the completion.
/// Together with [`SaturatedLattice::coords`] this realises the inverse of
/// one fixed unimodular matrix whose first columns span `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    pub matrix: IntMatrix,
    pub completion: IntMatrix,
    pub orientation: i8,
}

impl QuotientMap {
    pub fn target_rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(v).expect("vector length matches ambient rank")
    }
}

pub fn quotient_coords(l: &SaturatedLattice) -> QuotientMap {
    let n = l.ambient_rank();
    let b = l.basis();
    let kernel = left_kernel(b);
    let q = if kernel.rows() == 0 {
        IntMatrix::zeros(0, n)
    } else {
        let e = echelon(kernel.to_rows(), n).expect("BigInt arithmetic cannot overflow");
        IntMatrix::from_rows(n, &e.rows).expect("shape preserved")
    };
    let d = q.rows();
    // Rows of U with U * Q^T = [I; 0] give columns C with Q * C = I.
    let aug = q.transpose().hcat(&IntMatrix::identity(n)).expect("same row count");
    let e = echelon(aug.to_rows(), aug.cols()).expect("BigInt arithmetic cannot overflow");
    let c_rows: Vec<Vec<BigInt>> = e.rows[..d].iter().map(|r| r[d..].to_vec()).collect();
    let completion = IntMatrix::from_rows(n, &c_rows).expect("shape preserved").transpose();
    debug_assert_eq!(q.mul(&completion).unwrap(), IntMatrix::identity(d));
    let g = b.hcat(&completion).expect("same row count");
    let orientation = sign_of(&determinant(&g).expect("square"));
    debug_assert!(orientation != 0);
    QuotientMap { matrix: q, completion, orientation }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cols(n: usize, c: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_columns(n, c).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn saturate_examples() {
        // Small integer points on the line through (2, 0) are multiples of (1, 0).
        let l = saturate(&cols(2, &[vec![2, 0]]));
        let oracle: Vec<Vec<i64>> = (-4i64..=4)
            .flat_map(|x| (-4i64..=4).map(move |y| vec![x, y]))
            .filter(|p| p[1] == 0)
            .collect();
        let primitive = oracle.iter().filter(|p| p[0] > 0).min_by_key(|p| p[0]).unwrap();
        assert_eq!(l.basis(), &cols(2, &[primitive.clone()]));

        assert_eq!(saturate(&cols(2, &[vec![1, 0], vec![0, 1]])), SaturatedLattice::full(2));
        let empty = saturate(&IntMatrix::zeros(3, 0));
        assert_eq!(empty.rank(), 0);
        assert_eq!(empty.ambient_rank(), 3);
    }

    #[test]
    fn saturate_index_two_sublattice() {
        // (1,1) and (1,-1) span an index-2 sublattice of Z^2.
        let l = saturate(&cols(2, &[vec![1, 1], vec![1, -1]]));
        assert_eq!(l, SaturatedLattice::full(2));
        let l = saturate(&cols(3, &[vec![2, 2, 0], vec![0, 3, 3]]));
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&big(&[1, 1, 0])));
        assert!(l.contains(&big(&[0, 1, 1])));
        assert!(!l.contains(&big(&[0, 0, 1])));
    }

    #[test]
    fn coords_examples() {
        let l = saturate(&cols(2, &[vec![0, 1]]));
        assert_eq!(l.coords(&big(&[0, 1])), Some(big(&[1])));
        assert_eq!(l.coords(&big(&[0, 2])), Some(big(&[2])));
        assert_eq!(l.coords(&big(&[1, 2])), None);
        let f = SaturatedLattice::full(3);
        assert_eq!(f.coords(&big(&[4, -1, 2])), Some(big(&[4, -1, 2])));
    }

    #[test]
    fn quotient_examples() {
        let l = saturate(&cols(2, &[vec![1, 0]]));
        let q = quotient_coords(&l);
        assert_eq!(q.apply(&big(&[1, 0])), big(&[0]));
        assert_eq!(q.apply(&big(&[0, 1])), big(&[1]));
        assert_eq!(q.orientation, 1);

        let q = quotient_coords(&SaturatedLattice::full(3));
        assert_eq!(q.target_rank(), 0);

        let q = quotient_coords(&SaturatedLattice::zero(2));
        assert_eq!(q.matrix, IntMatrix::identity(2));
        assert_eq!(q.orientation, 1);
    }

    #[test]
    fn quotient_orientation_of_second_axis() {
        // L = Z e2: completion by e1 gives det [e2 | e1] = -1.
        let q = quotient_coords(&saturate(&cols(2, &[vec![0, 1]])));
        assert_eq!(q.apply(&big(&[1, 0])), big(&[1]));
        assert_eq!(q.orientation, -1);
    }
}
