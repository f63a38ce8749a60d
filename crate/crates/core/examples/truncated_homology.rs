//! Homology of subcomplexes spanned by a finite pool of vectors, and
//! boundary witnesses found by exact linear solving.

use sharbly::truncation::{build_complex, find_boundary_witness, VectorPool};
use sharbly::{boundary, BasicSharbly, Character, Element};

fn main() {
    let line = VectorPool::from_i64(1, &(1..=6).map(|i| vec![i]).collect::<Vec<_>>()).unwrap();
    let c = build_complex(1, Character::Trivial, &line, 5).unwrap();
    println!("n=1 pool {{1..6}}: chains {:?}, homology {:?}", c.chain_dims(), c.homology_dims());

    let square = VectorPool::from_i64(2, &[vec![1, 0], vec![0, 1], vec![1, 1], vec![1, -1], vec![2, 1], vec![1, 2]]).unwrap();
    for chi in [Character::Trivial, Character::Determinant] {
        let c = build_complex(2, chi, &square, 3).unwrap();
        println!("n=2 {chi}: chains {:?}, homology {:?} (pool {})", c.chain_dims(), c.homology_dims(), &square.hash()[..12]);
    }

    let y = Element::from_basic(&BasicSharbly::from_columns(2, Character::Trivial, &[vec![1, 0], vec![0, 2]]).unwrap()).unwrap();
    let pool = VectorPool::from_i64(2, &[vec![1, 0], vec![0, 1], vec![0, 2]]).unwrap();
    let x = find_boundary_witness(&y, &pool).unwrap().expect("witness on this pool");
    println!("[e1,2e2] = d({x:?}); check: {}", boundary(&x).unwrap() == y);
}
