//! Hermite forms, saturated lattices and quotient coordinates.

use num_bigint::BigInt;
use sharbly::linalg::{quotient_coords, rank_rational, row_hnf, saturate, solve_rational, IntMatrix, Rat};

fn main() {
    let m = IntMatrix::from_rows(3, &[vec![2, 4, 1], vec![3, 1, 5]]).unwrap();
    let (h, det) = row_hnf(&m).unwrap();
    println!("M = {m:?}\nH = {h:?} (det U = {det})");

    // The line through (2, 4, 6) meets Z^3 in multiples of (1, 2, 3).
    let l = saturate(&IntMatrix::from_columns(3, &[vec![2, 4, 6]]).unwrap());
    println!("saturation basis {:?}", l.basis());
    let v: Vec<BigInt> = [5, 10, 15].map(BigInt::from).to_vec();
    println!("coords of (5,10,15): {:?}", l.coords(&v));

    let q = quotient_coords(&l);
    println!("quotient map {:?}, orientation {}", q.matrix, q.orientation);

    let a = IntMatrix::from_rows(2, &[vec![1, 1], vec![1, -1]]).unwrap();
    println!("rank {} ; solve x+y=3, x-y=1 -> {:?}", rank_rational(&a), solve_rational(&a, &[Rat::from_integer(3.into()), Rat::from_integer(1.into())]));
}
