//! JSON forms of elements, tensors and vector pools.
//!
//! ```json
//! {"n": 2, "k": 1, "chi": "det", "terms": [{"coeff": "-1/2", "cols": [[1,0],[0,1],[1,1]]}]}
//! {"chi": "triv", "terms": [{"coeff": "1", "left": [[1]], "right": [[2]]}]}
//! ```
//!
//! Integers are written as JSON numbers when they fit in `i64` and as
//! decimal strings otherwise; both forms are accepted on input.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::bialgebra::TensorElement;
use crate::canon::{BasicSharbly, CanonicalSharbly, Character, Element};
use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonInt {
    Num(i64),
    Str(String),
}

impl JsonInt {
    fn from_big(v: &BigInt) -> Self {
        v.to_i64().map_or_else(|| JsonInt::Str(v.to_string()), JsonInt::Num)
    }

    fn to_big(&self) -> Result<BigInt> {
        match self {
            JsonInt::Num(v) => Ok(BigInt::from(*v)),
            JsonInt::Str(s) => s.trim().parse().map_err(|_| Error::Malformed(format!("not an integer: {s:?}"))),
        }
    }
}

pub type JsonColumns = Vec<Vec<JsonInt>>;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub coeff: String,
    pub cols: JsonColumns,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementJson {
    pub n: usize,
    pub k: usize,
    pub chi: Character,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairJson {
    pub coeff: String,
    pub left: JsonColumns,
    pub right: JsonColumns,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorJson {
    pub chi: Character,
    pub terms: Vec<PairJson>,
}

/// A finite set of vectors in `Z^n`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PoolJson {
    pub n: usize,
    pub vectors: JsonColumns,
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::Malformed(format!("not a rational: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
        Some((p, q)) => {
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rat::new(p.trim().parse().map_err(|_| bad())?, q))
        }
    }
}

fn columns_to_json(m: &IntMatrix) -> JsonColumns {
    m.columns().iter().map(|c| c.iter().map(JsonInt::from_big).collect()).collect()
}

pub fn columns_from_json(n: usize, cols: &JsonColumns) -> Result<Vec<Vec<BigInt>>> {
    cols.iter()
        .map(|c| {
            if c.len() != n {
                return Err(Error::Malformed(format!("column of length {} for rank {n}", c.len())));
            }
            c.iter().map(JsonInt::to_big).collect()
        })
        .collect()
}

fn rank_of(cols: &JsonColumns) -> usize {
    cols.first().map_or(0, Vec::len)
}

pub fn element_to_json(x: &Element) -> ElementJson {
    ElementJson {
        n: x.n(),
        k: x.k(),
        chi: x.chi(),
        terms: x.terms().map(|(r, c)| TermJson { coeff: c.to_string(), cols: columns_to_json(r.matrix()) }).collect(),
    }
}

pub fn element_from_json(j: &ElementJson) -> Result<Element> {
    let mut e = Element::zero(j.n, j.k, j.chi);
    for t in &j.terms {
        if t.cols.len() != j.n + j.k {
            return Err(Error::Grade(format!("term with {} columns in grade ({}, {})", t.cols.len(), j.n, j.k)));
        }
        let cols = columns_from_json(j.n, &t.cols)?;
        let x = BasicSharbly::new(j.chi, IntMatrix::from_columns(j.n, &cols)?)?;
        e.add_basic(parse_rat(&t.coeff)?, &x)?;
    }
    Ok(e)
}

pub fn tensor_to_json(t: &TensorElement) -> TensorJson {
    TensorJson {
        chi: t.chi(),
        terms: t
            .terms()
            .map(|(l, r, c)| PairJson { coeff: c.to_string(), left: columns_to_json(l.matrix()), right: columns_to_json(r.matrix()) })
            .collect(),
    }
}

fn factor_from_json(chi: Character, cols: &JsonColumns) -> Result<Element> {
    let n = rank_of(cols);
    let x = BasicSharbly::new(chi, IntMatrix::from_columns(n, &columns_from_json(n, cols)?)?)?;
    Element::from_basic(&x)
}

pub fn tensor_from_json(j: &TensorJson) -> Result<TensorElement> {
    let mut t = TensorElement::zero(j.chi);
    for p in &j.terms {
        let c = parse_rat(&p.coeff)?;
        let pair = TensorElement::tensor(&factor_from_json(j.chi, &p.left)?, &factor_from_json(j.chi, &p.right)?)?;
        t.add_scaled(&c, &pair)?;
    }
    Ok(t)
}

pub fn pool_from_json(j: &PoolJson) -> Result<Vec<Vec<BigInt>>> {
    columns_from_json(j.n, &j.vectors)
}

pub fn pool_to_json(n: usize, vectors: &[Vec<BigInt>]) -> PoolJson {
    PoolJson { n, vectors: vectors.iter().map(|v| v.iter().map(JsonInt::from_big).collect()).collect() }
}

/// Parses an element from JSON text.
pub fn parse_element(text: &str) -> Result<Element> {
    let j: ElementJson = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    element_from_json(&j)
}

pub fn parse_tensor(text: &str) -> Result<TensorElement> {
    let j: TensorJson = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    tensor_from_json(&j)
}

pub fn element_string(x: &Element) -> String {
    serde_json::to_string(&element_to_json(x)).expect("serializable")
}

pub fn tensor_string(t: &TensorElement) -> String {
    serde_json::to_string(&tensor_to_json(t)).expect("serializable")
}

pub(crate) fn rep_columns(r: &CanonicalSharbly) -> JsonColumns {
    columns_to_json(r.matrix())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_round_trip() {
        let text = r#"{"n":2,"k":1,"chi":"det","terms":[{"coeff":"-1/2","cols":[[1,0],[0,1],[1,1]]}]}"#;
        let x = parse_element(text).unwrap();
        assert_eq!(x.len(), 1);
        assert_eq!(parse_element(&element_string(&x)).unwrap(), x);
    }

    #[test]
    fn big_integers_as_strings() {
        let text = r#"{"n":1,"k":0,"chi":"triv","terms":[{"coeff":"1","cols":[["123456789012345678901234567890"]]}]}"#;
        let x = parse_element(text).unwrap();
        let out = element_string(&x);
        assert!(out.contains("\"123456789012345678901234567890\""));
        assert_eq!(parse_element(&out).unwrap(), x);
    }

    #[test]
    fn schema_and_grade_errors() {
        assert!(matches!(parse_element(r#"{"n":1}"#), Err(Error::Malformed(_))));
        let wrong = r#"{"n":1,"k":0,"chi":"triv","terms":[{"coeff":"1","cols":[[1],[2]]}]}"#;
        assert!(matches!(parse_element(wrong), Err(Error::Grade(_))));
        assert!(matches!(parse_rat("1/0"), Err(Error::Malformed(_))));
    }
}
