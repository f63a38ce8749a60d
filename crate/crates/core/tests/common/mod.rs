//! Reference implementations shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use sharbly::linalg::{rank_rational, row_hnf, IntMatrix};
use sharbly::{BasicSharbly, Character};

pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

pub fn perm_sign(p: &[usize]) -> i8 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Matrices compared column by column, each column top to bottom.
pub fn column_key(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    m.columns()
}

/// Exhaustive orbit enumeration: every sign pattern and every permutation,
/// each reduced by `row_hnf`. Returns the least form and its sign, or `None`
/// when the sharbly vanishes.
pub fn brute_canonical(x: &BasicSharbly) -> Option<(IntMatrix, i8)> {
    let a = x.matrix();
    let (n, m) = (a.rows(), a.cols());
    if n == 0 {
        return Some((IntMatrix::zeros(0, 0), 1));
    }
    if rank_rational(a) < n {
        return None;
    }
    let cols = a.columns();
    for i in 0..m {
        for j in i + 1..m {
            let neg: Vec<BigInt> = cols[j].iter().map(|v| -v).collect();
            if cols[i] == cols[j] || cols[i] == neg {
                return None;
            }
        }
    }
    let mut best: Option<(Vec<Vec<BigInt>>, IntMatrix, Vec<i8>)> = None;
    for p in permutations(m) {
        for signs in 0u32..(1 << m) {
            let moved: Vec<Vec<BigInt>> = p
                .iter()
                .enumerate()
                .map(|(j, &src)| {
                    let neg = signs & (1 << j) != 0;
                    cols[src].iter().map(|v| if neg { -v } else { v.clone() }).collect()
                })
                .collect();
            let (h, d) = row_hnf(&IntMatrix::from_columns(n, &moved).unwrap()).unwrap();
            let chi_d = if x.chi() == Character::Determinant { d } else { 1 };
            let sign = perm_sign(&p) * chi_d;
            let key = column_key(&h);
            match &mut best {
                Some((k, _, s)) if *k == key => s.push(sign),
                Some((k, _, _)) if *k < key => {}
                _ => best = Some((key, h, vec![sign])),
            }
        }
    }
    let (_, h, signs) = best.unwrap();
    if signs.iter().any(|&s| s != signs[0]) {
        None
    } else {
        Some((h, signs[0]))
    }
}
