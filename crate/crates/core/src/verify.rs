//! Randomized exact checks of the dg bialgebra axioms.
//!
//! Sample `i` of a run with seed `s` draws from `ChaCha8Rng::seed_from_u64(s)`
//! switched to stream `i`, so any single sample can be replayed on its own
//! and the report does not depend on how samples are scheduled.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bialgebra::{self, Antipode, TensorElement};
use crate::canon::{max_cols, random_sharbly_with, with_max_cols, CanonicalSharbly, Character, Element};
use crate::error::{Error, Result};
use crate::json::{element_to_json, tensor_to_json, ElementJson};
use crate::linalg::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axiom {
    D2,
    Leibniz,
    Comm,
    Coassoc,
    Coleibniz,
    Compat,
    Counit,
    Antipode,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::D2,
        Axiom::Leibniz,
        Axiom::Comm,
        Axiom::Coassoc,
        Axiom::Coleibniz,
        Axiom::Compat,
        Axiom::Counit,
        Axiom::Antipode,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::D2 => "d2",
            Axiom::Leibniz => "leibniz",
            Axiom::Comm => "comm",
            Axiom::Coassoc => "coassoc",
            Axiom::Coleibniz => "coleibniz",
            Axiom::Compat => "compat",
            Axiom::Counit => "counit",
            Axiom::Antipode => "antipode",
        }
    }

    fn binary(self) -> bool {
        matches!(self, Axiom::Leibniz | Axiom::Comm | Axiom::Compat)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axiom {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown axiom {s:?}")))
    }
}

/// The operations under test. Every method defaults to the real
/// implementation; test fixtures override one to plant a sign error.
pub trait Structure: Sync {
    fn boundary(&self, x: &Element) -> Result<Element> {
        bialgebra::boundary(x)
    }
    fn product(&self, x: &Element, y: &Element) -> Result<Element> {
        bialgebra::product(x, y)
    }
    fn coproduct(&self, x: &Element) -> Result<TensorElement> {
        bialgebra::coproduct(x)
    }
}

pub struct Standard;
impl Structure for Standard {}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyParams {
    pub samples: usize,
    pub seed: u64,
    pub max_n: usize,
    pub max_k: usize,
    pub entry_bound: u32,
    pub chi: Character,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams { samples: 100, seed: 42, max_n: 4, max_k: 3, entry_bound: 3, chi: Character::Trivial }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub sample: usize,
    pub inputs: Vec<ElementJson>,
    pub lhs: serde_json::Value,
    pub rhs: serde_json::Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub axiom: Axiom,
    pub params: VerifyParams,
    pub passed: bool,
    /// Samples whose inputs were all nonzero.
    pub nontrivial: usize,
    pub counterexample: Option<Counterexample>,
    pub wall_time_ms: u128,
}

enum Outcome {
    Pass { nontrivial: bool },
    Fail(Counterexample),
}

/// Either side of an identity.
enum Side {
    E(Element),
    T(TensorElement),
    T3(Triple),
}

impl Side {
    fn json(&self) -> serde_json::Value {
        match self {
            Side::E(e) => serde_json::to_value(element_to_json(e)).expect("serializable"),
            Side::T(t) => serde_json::to_value(tensor_to_json(t)).expect("serializable"),
            Side::T3(t) => t.json(),
        }
    }
}

/// Elements of `B ⊗ B ⊗ B`, only needed for coassociativity.
#[derive(Clone, PartialEq, Eq, Default)]
struct Triple(BTreeMap<(CanonicalSharbly, CanonicalSharbly, CanonicalSharbly), Rat>);

impl Triple {
    fn add(&mut self, c: Rat, key: (CanonicalSharbly, CanonicalSharbly, CanonicalSharbly)) {
        let v = self.0.entry(key.clone()).or_insert_with(Rat::zero);
        *v += c;
        if v.is_zero() {
            self.0.remove(&key);
        }
    }

    fn json(&self) -> serde_json::Value {
        let cols = |r: &CanonicalSharbly| crate::json::rep_columns(r);
        serde_json::Value::Array(
            self.0
                .iter()
                .map(|((a, b, c), x)| serde_json::json!({"coeff": x.to_string(), "factors": [cols(a), cols(b), cols(c)]}))
                .collect(),
        )
    }
}

fn single(r: &CanonicalSharbly) -> Element {
    Element::from_canonical(Rat::one(), r.clone())
}

fn random_element<R: Rng>(rng: &mut R, n: usize, k: usize, p: &VerifyParams) -> Result<Element> {
    if n == 0 {
        return Ok(Element::unit(p.chi));
    }
    let mut last = Element::zero(n, k, p.chi);
    for _ in 0..8 {
        let mut e = Element::zero(n, k, p.chi);
        for _ in 0..rng.gen_range(1..=2) {
            let c: i64 = [-2, -1, 1, 2][rng.gen_range(0..4)];
            e.add_basic(Rat::from_integer(BigInt::from(c)), &random_sharbly_with(rng, n, k, p.entry_bound, p.chi)?)?;
        }
        if !e.is_zero() {
            return Ok(e);
        }
        last = e;
    }
    Ok(last)
}

fn sample_inputs(axiom: Axiom, p: &VerifyParams, i: usize) -> Result<Vec<Element>> {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    rng.set_stream(i as u64);
    if !axiom.binary() {
        let n = rng.gen_range(1..=p.max_n);
        let k = rng.gen_range(0..=p.max_k);
        return Ok(vec![random_element(&mut rng, n, k, p)?]);
    }
    // Factors of a product share the rank and degree budget.
    let n1 = rng.gen_range(1..=p.max_n);
    let n2 = rng.gen_range(0..=p.max_n - n1);
    let k1 = rng.gen_range(0..=p.max_k);
    let k2 = if n2 == 0 { 0 } else { rng.gen_range(0..=p.max_k - k1) };
    Ok(vec![random_element(&mut rng, n1, k1, p)?, random_element(&mut rng, n2, k2, p)?])
}

fn sign(odd: bool) -> Rat {
    if odd {
        -Rat::one()
    } else {
        Rat::one()
    }
}

fn check(axiom: Axiom, s: &dyn Structure, xs: &[Element]) -> Result<Option<(Side, Side)>> {
    let x = &xs[0];
    let differ = |l: Side, r: Side| -> Option<(Side, Side)> {
        let same = match (&l, &r) {
            (Side::E(a), Side::E(b)) => a == b,
            (Side::T(a), Side::T(b)) => a == b,
            (Side::T3(a), Side::T3(b)) => a == b,
            _ => false,
        };
        (!same).then_some((l, r))
    };
    Ok(match axiom {
        Axiom::D2 => {
            let dd = s.boundary(&s.boundary(x)?)?;
            differ(Side::E(dd), Side::E(Element::zero(x.n(), 0, x.chi())))
        }
        Axiom::Leibniz => {
            let y = &xs[1];
            let lhs = s.boundary(&s.product(x, y)?)?;
            let mut rhs = s.product(&s.boundary(x)?, y)?;
            rhs.add_scaled(&sign(x.degree() % 2 == 1), &s.product(x, &s.boundary(y)?)?)?;
            differ(Side::E(lhs), Side::E(rhs))
        }
        Axiom::Comm => {
            let y = &xs[1];
            let lhs = s.product(x, y)?;
            let rhs = s.product(y, x)?.scale(&sign(x.degree() * y.degree() % 2 == 1));
            differ(Side::E(lhs), Side::E(rhs))
        }
        Axiom::Coassoc => {
            let d = s.coproduct(x)?;
            let mut lhs = Triple::default();
            let mut rhs = Triple::default();
            for (a, b, c) in d.terms() {
                for (a1, a2, c1) in s.coproduct(&single(a))?.terms() {
                    lhs.add(c * c1, (a1.clone(), a2.clone(), b.clone()));
                }
                for (b1, b2, c2) in s.coproduct(&single(b))?.terms() {
                    rhs.add(c * c2, (a.clone(), b1.clone(), b2.clone()));
                }
            }
            differ(Side::T3(lhs), Side::T3(rhs))
        }
        Axiom::Coleibniz => {
            let lhs = s.coproduct(&s.boundary(x)?)?;
            let d = s.coproduct(x)?;
            let mut rhs = d.map(|a| s.boundary(&single(a)), |b| Ok(single(b)), 0)?;
            rhs.add_scaled(&Rat::one(), &d.map(|a| Ok(single(a)), |b| s.boundary(&single(b)), 1)?)?;
            differ(Side::T(lhs), Side::T(rhs))
        }
        Axiom::Compat => {
            let y = &xs[1];
            let lhs = s.coproduct(&s.product(x, y)?)?;
            let rhs = s.coproduct(x)?.mul(&s.coproduct(y)?)?;
            differ(Side::T(lhs), Side::T(rhs))
        }
        Axiom::Counit => {
            let d = s.coproduct(x)?;
            let mut left = Element::zero(x.n(), x.k(), x.chi());
            let mut right = Element::zero(x.n(), x.k(), x.chi());
            for (a, b, c) in d.terms() {
                if a.is_unit() {
                    left.add_scaled(c, &single(b))?;
                }
                if b.is_unit() {
                    right.add_scaled(c, &single(a))?;
                }
            }
            differ(Side::E(left.clone()), Side::E(x.clone())).or_else(|| differ(Side::E(right), Side::E(x.clone())))
        }
        Axiom::Antipode => {
            let d = s.coproduct(x)?;
            let mut ant = Antipode::new();
            let expect = bialgebra::unit_counit(x);
            let mut left = Element::zero(x.n(), x.k(), x.chi());
            let mut right = Element::zero(x.n(), x.k(), x.chi());
            for (a, b, c) in d.terms() {
                left.add_scaled(c, &s.product(&ant.apply_rep(a)?, &single(b))?)?;
                right.add_scaled(c, &s.product(&single(a), &ant.apply_rep(b)?)?)?;
            }
            differ(Side::E(left), Side::E(expect.clone())).or_else(|| differ(Side::E(right), Side::E(expect)))
        }
    })
}

fn run_sample(axiom: Axiom, s: &dyn Structure, p: &VerifyParams, i: usize) -> Result<Outcome> {
    let xs = sample_inputs(axiom, p, i)?;
    let nontrivial = xs.iter().all(|x| !x.is_zero());
    Ok(match check(axiom, s, &xs)? {
        None => Outcome::Pass { nontrivial },
        Some((lhs, rhs)) => Outcome::Fail(Counterexample {
            sample: i,
            inputs: xs.iter().map(element_to_json).collect(),
            lhs: lhs.json(),
            rhs: rhs.json(),
        }),
    })
}

/// Checks `axiom` on `params.samples` random inputs.
pub fn verify(axiom: Axiom, params: &VerifyParams) -> Result<VerifyReport> {
    verify_with(&Standard, axiom, params)
}

pub fn verify_with(s: &dyn Structure, axiom: Axiom, params: &VerifyParams) -> Result<VerifyReport> {
    if params.samples == 0 || params.max_n == 0 || params.entry_bound == 0 {
        return Err(Error::Domain("samples, max_n and entry_bound must be at least 1".into()));
    }
    let start = Instant::now();
    let cap = max_cols();
    let outcomes: Vec<Result<Outcome>> = (0..params.samples)
        .into_par_iter()
        .map(|i| with_max_cols(cap, || run_sample(axiom, s, params, i)))
        .collect();
    let mut nontrivial = 0;
    let mut counterexample = None;
    for o in outcomes {
        match o? {
            Outcome::Pass { nontrivial: t } => nontrivial += usize::from(t),
            Outcome::Fail(c) => {
                counterexample.get_or_insert(c);
            }
        }
    }
    Ok(VerifyReport {
        axiom,
        params: params.clone(),
        passed: counterexample.is_none(),
        nontrivial,
        counterexample,
        wall_time_ms: start.elapsed().as_millis(),
    })
}

/// Replays one sample's inputs, for reproducing a counterexample.
pub fn sample(axiom: Axiom, params: &VerifyParams, index: usize) -> Result<Vec<Element>> {
    sample_inputs(axiom, params, index)
}
