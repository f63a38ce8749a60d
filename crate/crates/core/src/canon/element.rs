use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{canonicalize, BasicSharbly, Canonical, CanonicalSharbly, Character};
use crate::error::{Error, Result};
use crate::linalg::Rat;

/// A rational combination of canonical sharblies of one bigrade `(n, k)`.
///
/// The zero element of any grade compares equal to the zero element of every
/// other grade, and adding a zero of another grade is allowed.
#[derive(Clone)]
pub struct Element {
    n: usize,
    k: usize,
    chi: Character,
    terms: BTreeMap<CanonicalSharbly, Rat>,
}

impl Element {
    pub fn zero(n: usize, k: usize, chi: Character) -> Self {
        Element { n, k, chi, terms: BTreeMap::new() }
    }

    pub fn unit(chi: Character) -> Self {
        Self::from_canonical(Rat::one(), CanonicalSharbly::unit(chi))
    }

    pub fn from_canonical(coeff: Rat, rep: CanonicalSharbly) -> Self {
        let mut e = Self::zero(rep.n(), rep.k(), rep.chi());
        if !coeff.is_zero() {
            e.terms.insert(rep, coeff);
        }
        e
    }

    pub fn from_basic(x: &BasicSharbly) -> Result<Self> {
        Self::from_terms(x.n(), x.k(), x.chi(), [(Rat::one(), x.clone())])
    }

    /// Canonicalizes each term and folds signs into the coefficients.
    pub fn from_terms<I>(n: usize, k: usize, chi: Character, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rat, BasicSharbly)>,
    {
        let mut e = Self::zero(n, k, chi);
        for (c, x) in terms {
            e.add_basic(c, &x)?;
        }
        Ok(e)
    }

    /// Adds `coeff * x`.
    pub fn add_basic(&mut self, coeff: Rat, x: &BasicSharbly) -> Result<()> {
        if (x.n(), x.k()) != (self.n, self.k) {
            return Err(Error::Grade(format!("term of grade ({}, {}) in an element of grade ({}, {})", x.n(), x.k(), self.n, self.k)));
        }
        if x.chi() != self.chi {
            return Err(Error::Character(x.chi().to_string(), self.chi.to_string()));
        }
        if let Canonical::NonZero { sign, rep } = canonicalize(x)? {
            let c = if sign < 0 { -coeff } else { coeff };
            self.add_rep(c, rep);
        }
        Ok(())
    }

    // Caller guarantees `rep` has this element's grade and character.
    pub(crate) fn add_rep(&mut self, coeff: Rat, rep: CanonicalSharbly) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!((rep.n(), rep.k(), rep.chi()), (self.n, self.k, self.chi));
        match self.terms.entry(rep) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn chi(&self) -> Character {
        self.chi
    }

    /// Total degree `n + k`.
    pub fn degree(&self) -> usize {
        self.n + self.k
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

    pub fn terms(&self) -> impl Iterator<Item = (&CanonicalSharbly, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, rep: &CanonicalSharbly) -> Rat {
        self.terms.get(rep).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Element {
        let mut e = Self::zero(self.n, self.k, self.chi);
        if !c.is_zero() {
            e.terms = self.terms.iter().map(|(r, x)| (r.clone(), x * c)).collect();
        }
        e
    }

    /// `self + c * other`.
    pub fn add_scaled(&mut self, c: &Rat, other: &Element) -> Result<()> {
        if other.is_zero() || c.is_zero() {
            return Ok(());
        }
        if self.is_zero() && (self.n, self.k, self.chi) != (other.n, other.k, other.chi) {
            *self = other.scale(c);
            return Ok(());
        }
        if (self.n, self.k) != (other.n, other.k) {
            return Err(Error::Grade(format!("({}, {}) + ({}, {})", self.n, self.k, other.n, other.k)));
        }
        if self.chi != other.chi {
            return Err(Error::Character(self.chi.to_string(), other.chi.to_string()));
        }
        for (r, x) in &other.terms {
            self.add_rep(x * c, r.clone());
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        let mut e = self.clone();
        e.add_scaled(&Rat::one(), other)?;
        Ok(e)
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element> {
        let mut e = self.clone();
        e.add_scaled(&-Rat::one(), other)?;
        Ok(e)
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (self.terms.is_empty() || (self.n, self.k, self.chi) == (other.n, other.k, other.chi))
    }
}

impl Eq for Element {}

impl std::ops::Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&-Rat::one())
    }
}

/// Panics if both sides are nonzero and of different grades.
impl std::ops::Add for &Element {
    type Output = Element;
    fn add(self, other: &Element) -> Element {
        self.try_add(other).expect("adding elements of different grades")
    }
}

/// Panics if both sides are nonzero and of different grades.
impl std::ops::Sub for &Element {
    type Output = Element;
    fn sub(self, other: &Element) -> Element {
        self.try_sub(other).expect("subtracting elements of different grades")
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0_({},{})", self.n, self.k);
        }
        for (i, (r, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{r:?}")?;
        }
        Ok(())
    }
}
