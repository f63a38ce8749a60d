//! One line per acceptance criterion, then a single assertion over all of
//! them. Every comparison is exact equality of canonical elements; the only
//! numeric limits are the sample counts and time budgets pinned below.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use common::brute_canonical;
use sharbly::bialgebra::{primitive_part, TensorElement};
use sharbly::canon::{random_sharbly, with_max_cols};
use sharbly::classes::{is_cycle, wheel};
use sharbly::linalg::Rat;
use sharbly::truncation::{build_complex, find_boundary_witness, VectorPool};
use sharbly::verify::{verify, Axiom, VerifyParams};
use sharbly::{boundary, canonicalize, coproduct, is_primitive, BasicSharbly, Character, Element};

const AXIOM_SAMPLES: usize = 1000;
const AXIOM_SEED: u64 = 42;
const AXIOM_MAX_N: usize = 4;
const AXIOM_MAX_K: usize = 3;
const AXIOM_ENTRY_BOUND: u32 = 3;
const AXIOM_BUDGET: Duration = Duration::from_secs(10 * 60);

const VANISHING_SAMPLES: u64 = 500;

const WHEEL5_BUDGET: Duration = Duration::from_secs(5 * 60);

const ORACLE_ENTRY_BOUND: i64 = 2;
const ORACLE_MAX_COLS: usize = 4;
const ORACLE_BUDGET: Duration = Duration::from_secs(15 * 60);

const TRUNCATION_POOL_MAX: i64 = 6;
const TRUNCATION_MAX_K: usize = 5;

const ANTIPODE_SAMPLES: usize = 100;
const ANTIPODE_MAX_N: usize = 3;
const ANTIPODE_MAX_K: usize = 2;

use Character::{Determinant as Det, Trivial as Triv};

fn el(n: usize, chi: Character, cols: &[Vec<i64>]) -> Element {
    Element::from_basic(&BasicSharbly::from_columns(n, chi, cols).unwrap()).unwrap()
}

fn criterion_axioms() -> (bool, String) {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut nontrivial = 0;
    for chi in [Triv, Det] {
        for axiom in Axiom::ALL {
            let p = VerifyParams {
                samples: AXIOM_SAMPLES,
                seed: AXIOM_SEED,
                max_n: AXIOM_MAX_N,
                max_k: AXIOM_MAX_K,
                entry_bound: AXIOM_ENTRY_BOUND,
                chi,
            };
            let r = verify(axiom, &p).unwrap();
            nontrivial += r.nontrivial;
            if !r.passed {
                failures.push(format!("{axiom}/{chi}: {}", serde_json::to_string(&r.counterexample).unwrap()));
            }
        }
    }
    let t = start.elapsed();
    let ok = failures.is_empty() && t <= AXIOM_BUDGET;
    (ok, format!("16 runs x {AXIOM_SAMPLES} samples, {nontrivial} with nonzero inputs, {t:.1?}; failures: {failures:?}"))
}

fn criterion_vanishing() -> (bool, String) {
    let mut nonzero = 0;
    for seed in 0..VANISHING_SAMPLES {
        let n = if seed % 2 == 0 { 1 } else { 3 };
        let k = (seed / 2 % 4) as usize;
        let x = random_sharbly(n, k, 3, Det, seed).unwrap();
        if !canonicalize(&x).unwrap().is_zero() {
            nonzero += 1;
        }
    }
    (nonzero == 0, format!("{VANISHING_SAMPLES} sharblies, {nonzero} nonzero"))
}

fn criterion_wheels() -> (bool, String) {
    let w4 = with_max_cols(8, || wheel(4)).unwrap();
    let w6 = with_max_cols(12, || wheel(6)).unwrap();
    let w3 = wheel(3).unwrap();
    let start = Instant::now();
    let (w5, d5, p5) = with_max_cols(10, || {
        let w5 = wheel(5).unwrap();
        (w5.clone(), boundary(&w5).unwrap(), is_primitive(&w5).unwrap())
    });
    let t5 = start.elapsed();
    let checks = [
        ("w4 = 0", w4.is_zero()),
        ("w6 = 0", w6.is_zero()),
        ("w3 != 0", !w3.is_zero()),
        ("w5 != 0", !w5.is_zero()),
        ("d w3 = 0", boundary(&w3).unwrap().is_zero()),
        ("d w5 = 0", d5.is_zero()),
        ("w3 primitive", is_primitive(&w3).unwrap()),
        ("w5 primitive", p5),
        ("w5 within budget", t5 <= WHEEL5_BUDGET),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    (failed.is_empty(), format!("wheel(5) coproduct {t5:.1?}; failed: {failed:?}"))
}

fn criterion_oracle() -> (bool, String) {
    let start = Instant::now();
    let b = ORACLE_ENTRY_BOUND;
    let vectors: Vec<Vec<i64>> = (-b..=b).flat_map(|x| (-b..=b).map(move |y| vec![x, y])).filter(|v| v != &vec![0, 0]).collect();
    let mut cases: Vec<(Character, Vec<usize>)> = Vec::new();
    for chi in [Triv, Det] {
        for m in 2..=ORACLE_MAX_COLS {
            for sel in subsets(vectors.len(), m) {
                cases.push((chi, sel));
            }
        }
    }
    let mismatches: Vec<String> = cases
        .par_iter()
        .filter_map(|(chi, sel)| {
            let cols: Vec<Vec<i64>> = sel.iter().map(|&i| vectors[i].clone()).collect();
            let x = BasicSharbly::from_columns(2, *chi, &cols).unwrap();
            let fast = canonicalize(&x).unwrap();
            let fast = fast.rep().map(|r| (r.matrix().clone(), fast.sign()));
            (fast != brute_canonical(&x)).then(|| format!("{chi} {cols:?}"))
        })
        .collect();
    let t = start.elapsed();
    let ok = mismatches.is_empty() && t <= ORACLE_BUDGET;
    (ok, format!("{} sharblies, {} mismatches, {t:.1?}; first: {:?}", cases.len(), mismatches.len(), mismatches.first()))
}

fn subsets(len: usize, size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![vec![]];
    }
    (0..len)
        .flat_map(|first| subsets(len, size - 1).into_iter().filter(move |s| s.first().map_or(true, |&f| f > first)).map(move |mut s| {
            s.insert(0, first);
            s
        }))
        .collect()
}

fn criterion_hand() -> (bool, String) {
    let e1e2 = [vec![1, 0], vec![0, 1]];
    let tri = [vec![1, 0], vec![0, 1], vec![1, 1]];
    let is_zero = |chi, cols: &[Vec<i64>]| canonicalize(&BasicSharbly::from_columns(2, chi, cols).unwrap()).unwrap().is_zero();
    let x = el(2, Triv, &[vec![1, 0], vec![0, 2]]);
    let middle = coproduct(&x).unwrap().try_sub(&primitive_part(&x)).unwrap();
    let one = el(1, Triv, &[vec![1]]);
    let two = el(1, Triv, &[vec![2]]);
    let mut expect = TensorElement::tensor(&one, &two).unwrap();
    expect.add_scaled(&-Rat::one(), &TensorElement::tensor(&two, &one).unwrap()).unwrap();
    let checks = [
        ("[e1,e2] triv = 0", is_zero(Triv, &e1e2)),
        ("[e1,e2] det = 0", is_zero(Det, &e1e2)),
        ("[e1,e2,e1+e2] triv = 0", is_zero(Triv, &tri)),
        ("[e1,e2,e1+e2] det != 0", !is_zero(Det, &tri)),
        ("[e1,e2,e1+e2] det is a cycle", is_cycle(&el(2, Det, &tri)).unwrap()),
        ("d[e1,e2,2e2] = [e1,2e2]", boundary(&el(2, Triv, &[vec![1, 0], vec![0, 1], vec![0, 2]])).unwrap() == x),
        ("middle of D[e1,2e2] = [1]x[2] - [2]x[1]", middle == expect),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    (failed.is_empty(), format!("{} checks; failed: {failed:?}", checks.len()))
}

fn criterion_truncation() -> (bool, String) {
    let pool = VectorPool::from_i64(1, &(1..=TRUNCATION_POOL_MAX).map(|i| vec![i]).collect::<Vec<_>>()).unwrap();
    let c = build_complex(1, Triv, &pool, TRUNCATION_MAX_K).unwrap();
    let dims = c.homology_dims();
    let dims_ok = dims == vec![1, 0, 0, 0, 0];
    let y = el(2, Triv, &[vec![1, 0], vec![0, 2]]);
    let pool2 = VectorPool::new(
        2,
        [[1, 0], [0, 1], [0, 2]].iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect(),
    )
    .unwrap();
    let w = find_boundary_witness(&y, &pool2).unwrap();
    let witness_ok = w.as_ref().is_some_and(|x| boundary(x).unwrap() == y);
    (dims_ok && witness_ok, format!("homology dims {dims:?}; witness {w:?}"))
}

fn criterion_antipode() -> (bool, String) {
    let mut details = Vec::new();
    let mut ok = true;
    for chi in [Triv, Det] {
        let p = VerifyParams {
            samples: ANTIPODE_SAMPLES,
            seed: AXIOM_SEED,
            max_n: ANTIPODE_MAX_N,
            max_k: ANTIPODE_MAX_K,
            entry_bound: AXIOM_ENTRY_BOUND,
            chi,
        };
        let r = verify(Axiom::Antipode, &p).unwrap();
        ok &= r.passed;
        details.push(format!("{chi}: passed={} nonzero={}", r.passed, r.nontrivial));
    }
    (ok, details.join(", "))
}

// Runs without the libtest harness so the lines are printed even on success.
fn main() {
    let criteria: [(&str, fn() -> (bool, String)); 7] = [
        ("1 bialgebra axiom suite", criterion_axioms),
        ("2 odd-rank determinant vanishing", criterion_vanishing),
        ("3 wheel claims", criterion_wheels),
        ("4 canonicalization oracle equivalence", criterion_oracle),
        ("5 hand-verified instances", criterion_hand),
        ("6 truncation sanity", criterion_truncation),
        ("7 hopf recursion", criterion_antipode),
    ];
    let mut all = true;
    for (name, f) in criteria {
        let (ok, detail) = f();
        all &= ok;
        println!("[{}] criterion {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    }
    if !all {
        eprintln!("some acceptance criteria failed");
        std::process::exit(1);
    }
}
