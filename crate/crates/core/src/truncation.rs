//! Finite subcomplexes spanned by sharblies on a fixed pool of vectors.
//!
//! Deleting a column keeps a sharbly on the pool, so these subcomplexes are
//! closed under `∂`. Their homology is a statement about the subcomplex only.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::bialgebra::boundary;
use crate::canon::{canonicalize, max_cols, with_max_cols, BasicSharbly, Canonical, CanonicalSharbly, Character, Element};
use crate::error::{Error, Result};
use crate::json::pool_to_json;
use crate::linalg::{rank_rational, solve_rational, IntMatrix, Rat};

/// Largest number of column selections a build may canonicalize.
pub const DEFAULT_SELECTION_CAP: u64 = 2_000_000;

/// Nonzero vectors of `Z^n`, no two equal up to sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorPool {
    n: usize,
    vectors: Vec<Vec<BigInt>>,
}

impl VectorPool {
    /// Drops later vectors that repeat an earlier one up to sign.
    pub fn new(n: usize, vectors: Vec<Vec<BigInt>>) -> Result<Self> {
        let mut kept: Vec<Vec<BigInt>> = Vec::new();
        for v in vectors {
            if v.len() != n {
                return Err(Error::Malformed(format!("pool vector of length {} for rank {n}", v.len())));
            }
            if v.iter().all(Zero::is_zero) {
                return Err(Error::Malformed("pool contains the zero vector".into()));
            }
            let neg: Vec<BigInt> = v.iter().map(|x| -x).collect();
            if !kept.iter().any(|w| *w == v || *w == neg) {
                kept.push(v);
            }
        }
        Ok(VectorPool { n, vectors: kept })
    }

    pub fn from_i64(n: usize, vectors: &[Vec<i64>]) -> Result<Self> {
        Self::new(n, vectors.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// SHA-256 of the pool's JSON form, in hex.
    pub fn hash(&self) -> String {
        let text = serde_json::to_string(&pool_to_json(self.n, &self.vectors)).expect("serializable");
        Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[derive(Clone, Debug)]
pub struct TruncatedComplex {
    pub n: usize,
    pub chi: Character,
    pub pool: VectorPool,
    pub max_k: usize,
    /// `bases[k]`: canonical sharblies of degree `k`, sorted.
    pub bases: Vec<Vec<CanonicalSharbly>>,
    /// `boundaries[k]`: matrix of `∂: C_k -> C_{k-1}` (columns indexed by
    /// `bases[k]`); `boundaries[0]` has no rows.
    pub boundaries: Vec<IntMatrix>,
}

fn subsets(len: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, len: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            if len - i < size - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, len, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, len, size, &mut Vec::new(), &mut out);
    out
}

pub fn build_complex(n: usize, chi: Character, pool: &VectorPool, max_k: usize) -> Result<TruncatedComplex> {
    build_complex_capped(n, chi, pool, max_k, DEFAULT_SELECTION_CAP)
}

pub fn build_complex_capped(n: usize, chi: Character, pool: &VectorPool, max_k: usize, cap: u64) -> Result<TruncatedComplex> {
    if n == 0 {
        return Err(Error::Domain("truncated complexes need n >= 1".into()));
    }
    if pool.n() != n {
        return Err(Error::Malformed(format!("pool of rank {} for a rank-{n} complex", pool.n())));
    }
    let total: u64 = (0..=max_k)
        .map(|k| if n + k > pool.len() { 0 } else { binomial(pool.len() as u64, (n + k) as u64) })
        .sum();
    if total > cap {
        return Err(Error::SizeCap(format!("{total} column selections exceed the cap of {cap}")));
    }
    let width = max_cols();
    let mut bases = Vec::with_capacity(max_k + 1);
    for k in 0..=max_k {
        let m = n + k;
        let reps: Vec<Result<Option<CanonicalSharbly>>> = subsets(pool.len(), m)
            .into_par_iter()
            .map(|sel| {
                with_max_cols(width, || {
                    let cols: Vec<Vec<BigInt>> = sel.iter().map(|&i| pool.vectors[i].clone()).collect();
                    let x = BasicSharbly::from_columns(n, chi, &cols)?;
                    Ok(match canonicalize(&x)? {
                        Canonical::Zero(_) => None,
                        Canonical::NonZero { rep, .. } => Some(rep),
                    })
                })
            })
            .collect();
        let mut set = BTreeSet::new();
        for r in reps {
            if let Some(rep) = r? {
                set.insert(rep);
            }
        }
        bases.push(set.into_iter().collect::<Vec<_>>());
    }
    let mut boundaries = vec![IntMatrix::zeros(0, bases[0].len())];
    for k in 1..=max_k {
        let index: HashMap<&CanonicalSharbly, usize> = bases[k - 1].iter().enumerate().map(|(i, r)| (r, i)).collect();
        let columns: Vec<Result<Vec<BigInt>>> = bases[k]
            .par_iter()
            .map(|r| {
                with_max_cols(width, || {
                    let d = boundary(&Element::from_canonical(Rat::one(), r.clone()))?;
                    let mut col = vec![BigInt::zero(); bases[k - 1].len()];
                    for (face, c) in d.terms() {
                        let i = *index.get(face).expect("faces of pool sharblies lie on the pool");
                        debug_assert!(c.is_integer());
                        col[i] = c.to_integer();
                    }
                    Ok(col)
                })
            })
            .collect();
        let columns = columns.into_iter().collect::<Result<Vec<_>>>()?;
        let mut m = IntMatrix::zeros(bases[k - 1].len(), bases[k].len());
        for (j, col) in columns.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        boundaries.push(m);
    }
    Ok(TruncatedComplex { n, chi, pool: pool.clone(), max_k, bases, boundaries })
}

impl TruncatedComplex {
    pub fn chain_dims(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    /// `dim H_k` over `Q` for `0 <= k < max_k`.
    pub fn homology_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.boundaries.iter().map(rank_rational).collect();
        (0..self.max_k).map(|k| self.bases[k].len() - ranks[k] - ranks[k + 1]).collect()
    }

    pub fn element(&self, k: usize, coords: &[Rat]) -> Element {
        let mut e = Element::zero(self.n, k, self.chi);
        for (r, c) in self.bases[k].iter().zip(coords) {
            e.add_scaled(c, &Element::from_canonical(Rat::one(), r.clone())).expect("same grade");
        }
        e
    }
}

pub fn homology_dims(c: &TruncatedComplex) -> Vec<usize> {
    c.homology_dims()
}

/// Some `x` on the pool with `∂x = y`, or `None` when the pool has none.
///
/// The returned witness has been re-checked with [`boundary`].
pub fn find_boundary_witness(y: &Element, pool: &VectorPool) -> Result<Option<Element>> {
    if y.is_zero() {
        return Ok(Some(Element::zero(y.n(), y.k() + 1, y.chi())));
    }
    let k = y.k();
    let c = build_complex(y.n(), y.chi(), pool, k + 1)?;
    let index: HashMap<&CanonicalSharbly, usize> = c.bases[k].iter().enumerate().map(|(i, r)| (r, i)).collect();
    let mut target = vec![Rat::zero(); c.bases[k].len()];
    for (r, coeff) in y.terms() {
        let i = index.get(r).ok_or_else(|| Error::Domain("target is not supported on the pool".into()))?;
        target[*i] = coeff.clone();
    }
    let Some(x) = solve_rational(&c.boundaries[k + 1], &target) else {
        return Ok(None);
    };
    let x = c.element(k + 1, &x);
    assert_eq!(boundary(&x)?, *y, "witness failed re-verification");
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_on_three_vertices() {
        let pool = VectorPool::from_i64(1, &[vec![1], vec![2], vec![3]]).unwrap();
        let c = build_complex(1, Character::Trivial, &pool, 2).unwrap();
        assert_eq!(c.chain_dims(), vec![3, 3, 1]);
        assert_eq!(c.homology_dims(), vec![1, 0]);
    }

    #[test]
    fn unit_square_pool() {
        let pool = VectorPool::from_i64(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let c = build_complex(2, Character::Trivial, &pool, 1).unwrap();
        assert_eq!(c.chain_dims(), vec![0, 0]);
        assert_eq!(c.homology_dims(), vec![0]);
    }

    #[test]
    fn pool_dedup_and_hash() {
        let p = VectorPool::from_i64(1, &[vec![1], vec![-1], vec![2]]).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.hash(), VectorPool::from_i64(1, &[vec![1], vec![2]]).unwrap().hash());
        assert!(VectorPool::from_i64(1, &[vec![0]]).is_err());
    }

    #[test]
    fn size_cap() {
        let pool = VectorPool::from_i64(1, &(1..=10).map(|i| vec![i]).collect::<Vec<_>>()).unwrap();
        assert!(matches!(build_complex_capped(1, Character::Trivial, &pool, 3, 10), Err(Error::SizeCap(_))));
    }
}
