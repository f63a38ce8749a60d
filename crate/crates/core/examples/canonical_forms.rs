//! Canonical representatives of coinvariant sharblies and when they vanish.

use sharbly::{canonicalize, BasicSharbly, Canonical, Character};

fn show(label: &str, n: usize, chi: Character, cols: &[Vec<i64>]) {
    let x = BasicSharbly::from_columns(n, chi, cols).unwrap();
    match canonicalize(&x).unwrap() {
        Canonical::Zero(reason) => println!("{label:<24} {chi}: zero ({reason:?})"),
        Canonical::NonZero { sign, rep } => println!("{label:<24} {chi}: {sign:+} * {rep:?}"),
    }
}

fn main() {
    for chi in [Character::Trivial, Character::Determinant] {
        show("[e1]", 1, chi, &[vec![1]]);
        show("[e1, 2e1]", 2, chi, &[vec![1, 0], vec![2, 0]]);
        show("[e1, e2]", 2, chi, &[vec![1, 0], vec![0, 1]]);
        show("[e1, 2e2]", 2, chi, &[vec![1, 0], vec![0, 2]]);
        show("[e1, e2, e1+e2]", 2, chi, &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        show("[2e1+e2, e1-e2, e2]", 2, chi, &[vec![2, 1], vec![1, -1], vec![0, 1]]);
    }
}
