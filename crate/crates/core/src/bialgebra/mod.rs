//! Differential, product, coproduct and antipode on coinvariant sharblies.

mod coproduct;
mod tensor;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::canon::{canonicalize, BasicSharbly, Canonical, CanonicalSharbly, Element};
use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, Rat};

pub use coproduct::{coproduct, counit, flats, is_primitive, primitive_part, subspace_terms, SubspaceRecord};
pub use tensor::TensorElement;

/// `∂[v_1, ..., v_m] = Σ (-1)^i [v_1, ..., v̂_i, ..., v_m]`, counting from 1.
pub fn boundary(x: &Element) -> Result<Element> {
    if x.k() == 0 {
        return Ok(Element::zero(x.n(), 0, x.chi()));
    }
    let mut out = Element::zero(x.n(), x.k() - 1, x.chi());
    for (rep, c) in x.terms() {
        let cols = rep.matrix().columns();
        for i in 0..cols.len() {
            let face: Vec<Vec<BigInt>> = cols.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| v.clone()).collect();
            let face = BasicSharbly::from_columns(rep.n(), rep.chi(), &face)?;
            let coeff = if i % 2 == 0 { -c } else { c.clone() };
            out.add_basic(coeff, &face)?;
        }
    }
    Ok(out)
}

/// Block sum `[x, 0; 0, y]` of two sharblies.
pub fn block_product(x: &BasicSharbly, y: &BasicSharbly) -> Result<BasicSharbly> {
    if x.chi() != y.chi() {
        return Err(Error::Character(x.chi().to_string(), y.chi().to_string()));
    }
    let (a, b) = (x.matrix(), y.matrix());
    let mut m = IntMatrix::zeros(a.rows() + b.rows(), a.cols() + b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            m.set(i, j, a.get(i, j).clone());
        }
    }
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            m.set(a.rows() + i, a.cols() + j, b.get(i, j).clone());
        }
    }
    BasicSharbly::new(x.chi(), m)
}

/// Product of two canonical sharblies as an element.
pub fn product_reps(x: &CanonicalSharbly, y: &CanonicalSharbly) -> Result<Element> {
    if x.is_unit() {
        return Ok(Element::from_canonical(Rat::one(), y.clone()));
    }
    if y.is_unit() {
        return Ok(Element::from_canonical(Rat::one(), x.clone()));
    }
    let z = block_product(&x.to_basic(), &y.to_basic())?;
    Ok(match canonicalize(&z)? {
        Canonical::Zero(_) => Element::zero(z.n(), z.k(), z.chi()),
        Canonical::NonZero { sign, rep } => Element::from_canonical(Rat::from_integer(sign.into()), rep),
    })
}

/// `∇`: the bilinear extension of the block sum.
pub fn product(x: &Element, y: &Element) -> Result<Element> {
    if x.chi() != y.chi() {
        return Err(Error::Character(x.chi().to_string(), y.chi().to_string()));
    }
    let mut out = Element::zero(x.n() + y.n(), x.k() + y.k(), x.chi());
    for (a, p) in x.terms() {
        for (b, q) in y.terms() {
            out.add_scaled(&(p * q), &product_reps(a, b)?)?;
        }
    }
    Ok(out)
}

/// Memoized antipode. Each basis sharbly `r` satisfies
/// `S(r) = -r - Σ S(r') r''` over the reduced coproduct.
#[derive(Default)]
pub struct Antipode {
    memo: HashMap<CanonicalSharbly, Element>,
}

impl Antipode {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn apply(&mut self, x: &Element) -> Result<Element> {
        let mut out = Element::zero(x.n(), x.k(), x.chi());
        for (r, c) in x.terms() {
            let s = self.apply_rep(r)?;
            out.add_scaled(c, &s)?;
        }
        Ok(out)
    }

    pub fn apply_rep(&mut self, r: &CanonicalSharbly) -> Result<Element> {
        if let Some(s) = self.memo.get(r) {
            return Ok(s.clone());
        }
        let x = Element::from_canonical(Rat::one(), r.clone());
        let s = if r.is_unit() {
            x
        } else {
            let mut s = x.scale(&-Rat::one());
            for (a, b, c) in coproduct(&x)?.reduced().terms() {
                let sa = self.apply_rep(a)?;
                let term = product(&sa, &Element::from_canonical(Rat::one(), b.clone()))?;
                s.add_scaled(&-c, &term)?;
            }
            s
        };
        self.memo.insert(r.clone(), s.clone());
        Ok(s)
    }
}

pub fn antipode(x: &Element) -> Result<Element> {
    Antipode::new().apply(x)
}

/// `η ∘ ε` on `x`: the counit times the unit.
pub fn unit_counit(x: &Element) -> Element {
    let e = counit(x);
    if e.is_zero() {
        Element::zero(0, 0, x.chi())
    } else {
        Element::unit(x.chi()).scale(&e)
    }
}
