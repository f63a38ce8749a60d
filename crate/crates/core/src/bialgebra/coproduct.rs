use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;

use super::TensorElement;
use crate::canon::{canonicalize, BasicSharbly, Canonical, Element};
use crate::error::{Error, Result};
use crate::linalg::{quotient_coords, rank_rational, saturate, IntMatrix, Rat, SaturatedLattice};

/// One summand `sign * x'_V ⊗ x''_V` of the coproduct of a basic sharbly.
#[derive(Clone, Debug)]
pub struct SubspaceRecord {
    /// `V ∩ Z^n`.
    pub lattice: SaturatedLattice,
    /// Indices of the columns lying in `V`, increasing.
    pub members: Vec<usize>,
    /// Sign of the shuffle moving `members` to the front.
    pub shuffle_sign: i8,
    /// Sign of the determinant of the basis change that puts `V` first.
    /// Under the determinant character it multiplies the term.
    pub orientation: i8,
    /// Members in coordinates of the lattice basis.
    pub left: BasicSharbly,
    /// The remaining columns in quotient coordinates.
    pub right: BasicSharbly,
}

impl SubspaceRecord {
    pub fn sign(&self) -> i8 {
        self.shuffle_sign * self.left.chi().eval(self.orientation)
    }
}

/// The saturated sublattices spanned by subsets of the columns of `x`,
/// including `0` and `Z^n`, in a fixed order.
pub fn flats(x: &BasicSharbly) -> Vec<SaturatedLattice> {
    let n = x.n();
    let cols = x.columns();
    let mut seen = BTreeSet::new();
    let mut stack = vec![SaturatedLattice::zero(n)];
    seen.insert(SaturatedLattice::zero(n));
    while let Some(l) = stack.pop() {
        for v in &cols {
            if l.contains(v) {
                continue;
            }
            let mut gens = l.basis().columns();
            gens.push(v.clone());
            let next = saturate(&IntMatrix::from_columns(n, &gens).expect("length n"));
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// All coproduct summands of a spanning sharbly, before canonicalization.
pub fn subspace_terms(x: &BasicSharbly) -> Result<Vec<SubspaceRecord>> {
    let n = x.n();
    if rank_rational(x.matrix()) < n {
        return Err(Error::Domain("coproduct of a non-spanning sharbly".into()));
    }
    let chi = x.chi();
    let cols = x.columns();
    let mut out = Vec::new();
    for lattice in flats(x) {
        let mut members = Vec::new();
        let mut left_cols: Vec<Vec<BigInt>> = Vec::new();
        let mut rest = Vec::new();
        for (i, v) in cols.iter().enumerate() {
            match lattice.coords(v) {
                Some(c) => {
                    members.push(i);
                    left_cols.push(c);
                }
                None => rest.push(i),
            }
        }
        let q = quotient_coords(&lattice);
        let right_cols: Vec<Vec<BigInt>> = rest.iter().map(|&i| q.apply(&cols[i])).collect();
        let mut inversions = 0usize;
        for &r in &rest {
            inversions += members.iter().filter(|&&s| s > r).count();
        }
        let left = BasicSharbly::from_columns(lattice.rank(), chi, &left_cols)?;
        let right = BasicSharbly::from_columns(q.target_rank(), chi, &right_cols)?;
        out.push(SubspaceRecord {
            lattice,
            members,
            shuffle_sign: if inversions % 2 == 0 { 1 } else { -1 },
            orientation: q.orientation,
            left,
            right,
        });
    }
    Ok(out)
}

/// `Δ` on an element.
pub fn coproduct(x: &Element) -> Result<TensorElement> {
    let mut out = TensorElement::zero(x.chi());
    for (rep, c) in x.terms() {
        for rec in subspace_terms(&rep.to_basic())? {
            let Canonical::NonZero { sign: a, rep: l } = canonicalize(&rec.left)? else { continue };
            let Canonical::NonZero { sign: b, rep: r } = canonicalize(&rec.right)? else { continue };
            let s = rec.sign() * a * b;
            out.add_pair(if s < 0 { -c } else { c.clone() }, l, r);
        }
    }
    Ok(out)
}

/// `ε`: the coefficient of the unit.
pub fn counit(x: &Element) -> Rat {
    if x.n() == 0 {
        x.terms().map(|(_, c)| c.clone()).next().unwrap_or_default()
    } else {
        Rat::default()
    }
}

/// `x ⊗ 1 + 1 ⊗ x`.
pub fn primitive_part(x: &Element) -> TensorElement {
    let unit = Element::unit(x.chi());
    let mut t = TensorElement::tensor(x, &unit).expect("same character");
    t.add_scaled(&Rat::one(), &TensorElement::tensor(&unit, x).expect("same character")).expect("same character");
    t
}

pub fn is_primitive(x: &Element) -> Result<bool> {
    Ok(coproduct(x)? == primitive_part(x))
}
