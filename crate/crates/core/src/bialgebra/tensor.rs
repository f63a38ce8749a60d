use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::product_reps;
use crate::canon::{CanonicalSharbly, Character, Element};
use crate::error::{Error, Result};
use crate::linalg::Rat;

/// A rational combination of pairs `a ⊗ b` of canonical sharblies.
#[derive(Clone)]
pub struct TensorElement {
    chi: Character,
    terms: BTreeMap<(CanonicalSharbly, CanonicalSharbly), Rat>,
}

fn koszul(p: usize, q: usize) -> bool {
    p % 2 == 1 && q % 2 == 1
}

impl TensorElement {
    pub fn zero(chi: Character) -> Self {
        TensorElement { chi, terms: BTreeMap::new() }
    }

    /// `a ⊗ b` for elements `a` and `b`.
    pub fn tensor(a: &Element, b: &Element) -> Result<Self> {
        if a.chi() != b.chi() {
            return Err(Error::Character(a.chi().to_string(), b.chi().to_string()));
        }
        let mut t = Self::zero(a.chi());
        for (l, x) in a.terms() {
            for (r, y) in b.terms() {
                t.add_pair(x * y, l.clone(), r.clone());
            }
        }
        Ok(t)
    }

    pub fn chi(&self) -> Character {
        self.chi
    }

    pub fn add_pair(&mut self, coeff: Rat, left: CanonicalSharbly, right: CanonicalSharbly) {
        if coeff.is_zero() {
            return;
        }
        debug_assert!(left.chi() == self.chi && right.chi() == self.chi);
        let key = (left, right);
        let v = self.terms.entry(key.clone()).or_insert_with(Rat::zero);
        *v += coeff;
        if v.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, c: &Rat, other: &TensorElement) -> Result<()> {
        if other.is_zero() {
            return Ok(());
        }
        if self.is_zero() {
            self.chi = other.chi;
        } else if self.chi != other.chi {
            return Err(Error::Character(self.chi.to_string(), other.chi.to_string()));
        }
        for ((l, r), x) in &other.terms {
            self.add_pair(x * c, l.clone(), r.clone());
        }
        Ok(())
    }

    pub fn try_sub(&self, other: &TensorElement) -> Result<TensorElement> {
        let mut t = self.clone();
        t.add_scaled(&-Rat::one(), other)?;
        Ok(t)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CanonicalSharbly, &CanonicalSharbly, &Rat)> {
        self.terms.iter().map(|((l, r), c)| (l, r, c))
    }

    pub fn coeff(&self, left: &CanonicalSharbly, right: &CanonicalSharbly) -> Rat {
        self.terms.get(&(left.clone(), right.clone())).cloned().unwrap_or_else(Rat::zero)
    }

    /// Drops the pairs with a unit factor.
    pub fn reduced(&self) -> TensorElement {
        let terms = self.terms.iter().filter(|((l, r), _)| !l.is_unit() && !r.is_unit()).map(|(k, v)| (k.clone(), v.clone())).collect();
        TensorElement { chi: self.chi, terms }
    }

    /// `a ⊗ b ↦ (-1)^(|a||b|) b ⊗ a`, with total degrees.
    pub fn swap(&self) -> TensorElement {
        let mut t = Self::zero(self.chi);
        for ((l, r), c) in &self.terms {
            let c = if koszul(l.degree(), r.degree()) { -c } else { c.clone() };
            t.add_pair(c, r.clone(), l.clone());
        }
        t
    }

    /// Product in `B ⊗ B`: `(a ⊗ b)(c ⊗ d) = (-1)^(|b||c|) ac ⊗ bd`.
    pub fn mul(&self, other: &TensorElement) -> Result<TensorElement> {
        if self.chi != other.chi {
            return Err(Error::Character(self.chi.to_string(), other.chi.to_string()));
        }
        let mut out = Self::zero(self.chi);
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                let ac = product_reps(a, c)?;
                if ac.is_zero() {
                    continue;
                }
                let bd = product_reps(b, d)?;
                if bd.is_zero() {
                    continue;
                }
                let mut coeff = x * y;
                if koszul(b.degree(), c.degree()) {
                    coeff = -coeff;
                }
                for (l, p) in ac.terms() {
                    for (r, q) in bd.terms() {
                        out.add_pair(&coeff * p * q, l.clone(), r.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// Applies `f ⊗ g` termwise, where `f` and `g` map single sharblies to
    /// elements, with the Koszul sign `(-1)^(deg_g * |a|)` for `a ⊗ b`.
    pub fn map(
        &self,
        mut f: impl FnMut(&CanonicalSharbly) -> Result<Element>,
        mut g: impl FnMut(&CanonicalSharbly) -> Result<Element>,
        deg_g: usize,
    ) -> Result<TensorElement> {
        let mut out = Self::zero(self.chi);
        for ((a, b), x) in &self.terms {
            let fa = f(a)?;
            if fa.is_zero() {
                continue;
            }
            let gb = g(b)?;
            let sign_odd = koszul(deg_g, a.degree());
            for (l, p) in fa.terms() {
                for (r, q) in gb.terms() {
                    let c = x * p * q;
                    out.add_pair(if sign_odd { -c } else { c }, l.clone(), r.clone());
                }
            }
        }
        Ok(out)
    }

    /// `∇`: multiplies the two factors of every pair.
    pub fn contract(&self) -> Result<Element> {
        let mut out: Option<Element> = None;
        for ((a, b), x) in &self.terms {
            let p = product_reps(a, b)?;
            match &mut out {
                None => out = Some(p.scale(x)),
                Some(e) => e.add_scaled(x, &p)?,
            }
        }
        Ok(out.unwrap_or_else(|| Element::zero(0, 0, self.chi)))
    }
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (self.terms.is_empty() || self.chi == other.chi)
    }
}

impl Eq for TensorElement {}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((l, r), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{l:?}⊗{r:?}")?;
        }
        Ok(())
    }
}
