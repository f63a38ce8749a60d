mod common;

use common::brute_canonical;
use sharbly::canon::random_sharbly;
use sharbly::{canonicalize, BasicSharbly, Character};

fn agree(x: &BasicSharbly) {
    let fast = canonicalize(x).unwrap();
    let slow = brute_canonical(x);
    let fast = fast.rep().map(|r| (r.matrix().clone(), fast.sign()));
    assert_eq!(fast, slow, "disagreement on {:?} ({})", x.matrix(), x.chi());
}

#[test]
fn spec_style_examples() {
    for chi in [Character::Trivial, Character::Determinant] {
        for cols in [
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![1, 0], vec![0, 2]],
            vec![vec![1, 0], vec![0, 1], vec![1, 1]],
            vec![vec![2, 1], vec![1, 2], vec![0, 3]],
        ] {
            agree(&BasicSharbly::from_columns(2, chi, &cols).unwrap());
        }
    }
}

#[test]
fn random_rank_two_and_three() {
    for seed in 0..300 {
        for chi in [Character::Trivial, Character::Determinant] {
            let n = 2 + (seed % 2) as usize;
            let k = (seed / 2 % 3) as usize;
            if n + k > 5 {
                continue;
            }
            agree(&random_sharbly(n, k, 3, chi, seed).unwrap());
        }
    }
}

#[test]
fn random_rank_one_and_wide() {
    for seed in 0..200 {
        agree(&random_sharbly(1, (seed % 4) as usize, 6, Character::Trivial, seed).unwrap());
        agree(&random_sharbly(2, 4, 2, Character::Trivial, 1000 + seed).unwrap());
    }
}
