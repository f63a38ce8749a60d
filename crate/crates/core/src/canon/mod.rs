//! Basic sharblies and their canonical coinvariant representatives.
//!
//! Two column matrices name the same coinvariant sharbly up to sign when they
//! differ by `U * M * S * P` with `U` in `GL_n(Z)`, `S` a diagonal sign matrix
//! and `P` a permutation; the generators satisfy
//! `[U M S P] = chi(det U) * sign(P) * [M]`. The canonical representative of
//! an orbit is its least Hermite form, comparing matrices column by column.

mod element;
mod search;

use std::cell::Cell;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{narrow, rank_rational, IntMatrix, Zint};
use search::{least_form, Outcome};

pub use element::Element;

/// A character of `Z^x = {1, -1}`, determined by its value at `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Character {
    #[serde(rename = "triv")]
    Trivial,
    #[serde(rename = "det")]
    Determinant,
}

impl Character {
    pub fn chi_minus_one(self) -> i8 {
        match self {
            Character::Trivial => 1,
            Character::Determinant => -1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Character::Determinant
    }

    /// `chi(d)` for `d = +-1`.
    pub fn eval(self, d: i8) -> i8 {
        if d < 0 {
            self.chi_minus_one()
        } else {
            1
        }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Character::Trivial => "triv",
            Character::Determinant => "det",
        })
    }
}

impl std::str::FromStr for Character {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "triv" => Ok(Character::Trivial),
            "det" => Ok(Character::Determinant),
            _ => Err(Error::Malformed(format!("unknown character {s:?}, expected \"triv\" or \"det\""))),
        }
    }
}

/// A generator `[v_1, ..., v_{n+k}]`: an `n x (n+k)` integer matrix with
/// nonzero columns.
///
/// The only rank-0 sharbly is the empty one, which serves as the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasicSharbly {
    chi: Character,
    cols: IntMatrix,
}

impl BasicSharbly {
    pub fn new(chi: Character, cols: IntMatrix) -> Result<Self> {
        let (n, m) = (cols.rows(), cols.cols());
        if m < n {
            return Err(Error::Malformed(format!("{m} columns cannot span rank {n}")));
        }
        if n == 0 && m > 0 {
            return Err(Error::Malformed("rank-0 sharbly must have no columns".into()));
        }
        if let Some(j) = (0..m).find(|&j| (0..n).all(|i| cols.get(i, j).is_zero())) {
            return Err(Error::Malformed(format!("column {j} is zero")));
        }
        Ok(BasicSharbly { chi, cols })
    }

    /// Builds from column vectors of length `n`.
    pub fn from_columns<T: Into<BigInt> + Clone>(n: usize, chi: Character, columns: &[Vec<T>]) -> Result<Self> {
        Self::new(chi, IntMatrix::from_columns(n, columns)?)
    }

    pub fn unit(chi: Character) -> Self {
        BasicSharbly { chi, cols: IntMatrix::zeros(0, 0) }
    }

    pub fn n(&self) -> usize {
        self.cols.rows()
    }

    pub fn k(&self) -> usize {
        self.cols.cols() - self.cols.rows()
    }

    pub fn chi(&self) -> Character {
        self.chi
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.cols
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        self.cols.columns()
    }
}

/// Canonical representative of a nonzero coinvariant sharbly.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalSharbly {
    chi: Character,
    matrix: IntMatrix,
}

impl CanonicalSharbly {
    pub fn unit(chi: Character) -> Self {
        CanonicalSharbly { chi, matrix: IntMatrix::zeros(0, 0) }
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn k(&self) -> usize {
        self.matrix.cols() - self.matrix.rows()
    }

    /// Total degree `n + k`.
    pub fn degree(&self) -> usize {
        self.matrix.cols()
    }

    pub fn chi(&self) -> Character {
        self.chi
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn is_unit(&self) -> bool {
        self.matrix.rows() == 0
    }

    pub fn to_basic(&self) -> BasicSharbly {
        BasicSharbly { chi: self.chi, cols: self.matrix.clone() }
    }
}

impl fmt::Debug for CanonicalSharbly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (j, c) in self.matrix.columns().iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        write!(f, "]^{}", self.chi)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroReason {
    /// The columns do not span `Q^n`.
    NotSpanning,
    /// Two columns agree up to sign.
    RepeatedVertex,
    /// The orbit reaches its representative with both signs.
    SelfAnnihilating,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Canonical {
    Zero(ZeroReason),
    /// `x = sign * [rep]` in the coinvariants.
    NonZero { sign: i8, rep: CanonicalSharbly },
}

impl Canonical {
    pub fn sign(&self) -> i8 {
        match self {
            Canonical::Zero(_) => 0,
            Canonical::NonZero { sign, .. } => *sign,
        }
    }

    pub fn rep(&self) -> Option<&CanonicalSharbly> {
        match self {
            Canonical::Zero(_) => None,
            Canonical::NonZero { rep, .. } => Some(rep),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Canonical::Zero(_))
    }
}

pub const DEFAULT_MAX_COLS: usize = 9;
// The search tracks used columns in a u64.
const HARD_MAX_COLS: usize = 64;

thread_local! {
    static WIDTH_OVERRIDE: Cell<Option<usize>> = const { Cell::new(None) };
}

fn env_max_cols() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("SHARBLY_MAX_COLS")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_COLS)
            .min(HARD_MAX_COLS)
    })
}

/// Largest column count [`canonicalize`] accepts on this thread.
///
/// Defaults to `SHARBLY_MAX_COLS` (or 9); [`with_max_cols`] overrides it.
pub fn max_cols() -> usize {
    WIDTH_OVERRIDE.with(Cell::get).unwrap_or_else(env_max_cols)
}

/// Runs `f` with the width cap set to `cap` on the current thread.
pub fn with_max_cols<R>(cap: usize, f: impl FnOnce() -> R) -> R {
    struct Restore(Option<usize>);
    impl Drop for Restore {
        fn drop(&mut self) {
            WIDTH_OVERRIDE.with(|c| c.set(self.0));
        }
    }
    let _restore = Restore(WIDTH_OVERRIDE.with(|c| c.replace(Some(cap.min(HARD_MAX_COLS)))));
    f()
}

fn repeated_vertex(columns: &[Vec<BigInt>]) -> bool {
    for (i, a) in columns.iter().enumerate() {
        for b in &columns[i + 1..] {
            if a == b || a.iter().zip(b).all(|(x, y)| *x == -y) {
                return true;
            }
        }
    }
    false
}

/// Canonical representative and sign of `x` in the coinvariants.
pub fn canonicalize(x: &BasicSharbly) -> Result<Canonical> {
    let n = x.n();
    let m = x.cols.cols();
    if n == 0 {
        return Ok(Canonical::NonZero { sign: 1, rep: CanonicalSharbly::unit(x.chi) });
    }
    if rank_rational(&x.cols) < n {
        return Ok(Canonical::Zero(ZeroReason::NotSpanning));
    }
    let columns = x.cols.columns();
    if repeated_vertex(&columns) {
        return Ok(Canonical::Zero(ZeroReason::RepeatedVertex));
    }
    let cap = max_cols();
    if m > cap {
        return Err(Error::TooWide { cols: m, cap });
    }
    let odd = x.chi.is_odd();
    let small: Option<Vec<Vec<i64>>> = columns.iter().map(|c| c.iter().map(narrow).collect()).collect();
    let outcome = small
        .and_then(|c| least_form::<i64>(&c, n, odd))
        .map(widen)
        .unwrap_or_else(|| least_form::<BigInt>(&columns, n, odd).expect("BigInt arithmetic cannot overflow"));
    Ok(match outcome {
        Outcome::SelfAnnihilating => Canonical::Zero(ZeroReason::SelfAnnihilating),
        Outcome::Found { columns, sign } => {
            let matrix = IntMatrix::from_columns(n, &columns).expect("columns have length n");
            Canonical::NonZero { sign, rep: CanonicalSharbly { chi: x.chi, matrix } }
        }
    })
}

fn widen<T: Zint>(o: Outcome<T>) -> Outcome<BigInt> {
    match o {
        Outcome::SelfAnnihilating => Outcome::SelfAnnihilating,
        Outcome::Found { columns, sign } => Outcome::Found {
            columns: columns.iter().map(|c| c.iter().map(Zint::to_bigint).collect()).collect(),
            sign,
        },
    }
}

/// Random sharbly with entries in `[-entry_bound, entry_bound]`, determined
/// by `seed` (ChaCha8).
pub fn random_sharbly(n: usize, k: usize, entry_bound: u32, chi: Character, seed: u64) -> Result<BasicSharbly> {
    random_sharbly_with(&mut ChaCha8Rng::seed_from_u64(seed), n, k, entry_bound, chi)
}

/// As [`random_sharbly`], drawing from a caller-supplied generator.
pub fn random_sharbly_with<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    k: usize,
    entry_bound: u32,
    chi: Character,
) -> Result<BasicSharbly> {
    if n == 0 || entry_bound == 0 {
        return Err(Error::Domain("random sharblies need n >= 1 and entry_bound >= 1".into()));
    }
    let b = i64::from(entry_bound);
    let columns: Vec<Vec<i64>> = (0..n + k)
        .map(|_| loop {
            let c: Vec<i64> = (0..n).map(|_| rng.gen_range(-b..=b)).collect();
            if c.iter().any(|&v| v != 0) {
                break c;
            }
        })
        .collect();
    BasicSharbly::from_columns(n, chi, &columns)
}
