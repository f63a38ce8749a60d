//! Distinguished cycles: wheel sharblies and `t_1`.

use num_traits::One;

use crate::bialgebra::boundary;
use crate::canon::{BasicSharbly, Character, Element};
use crate::error::{Error, Result};
use crate::linalg::Rat;

/// Columns `e_1, ..., e_n, e_1 - e_2, ..., e_{n-1} - e_n, e_n - e_1`.
pub fn wheel_columns(n: usize) -> Vec<Vec<i64>> {
    let mut cols = Vec::with_capacity(2 * n);
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        cols.push(e);
    }
    for i in 0..n {
        let mut d = vec![0; n];
        d[i] = 1;
        d[(i + 1) % n] = -1;
        cols.push(d);
    }
    cols
}

pub fn wheel_sharbly(n: usize) -> Result<BasicSharbly> {
    if n < 3 {
        return Err(Error::Domain(format!("wheel sharblies need n >= 3, got {n}")));
    }
    BasicSharbly::from_columns(n, Character::Trivial, &wheel_columns(n))
}

/// The wheel `w_n` in grade `(n, n)` with trivial character.
///
/// Canonicalizing `2n` columns needs the width cap at least `2n`; see
/// [`crate::canon::with_max_cols`].
pub fn wheel(n: usize) -> Result<Element> {
    Element::from_basic(&wheel_sharbly(n)?)
}

/// `t_1 = [1]` in grade `(1, 0)`.
pub fn t1() -> Element {
    let x = BasicSharbly::from_columns(1, Character::Trivial, &[vec![1]]).expect("well formed");
    Element::from_terms(1, 0, Character::Trivial, [(Rat::one(), x)]).expect("well formed")
}

pub fn is_cycle(x: &Element) -> Result<bool> {
    Ok(boundary(x)?.is_zero())
}
