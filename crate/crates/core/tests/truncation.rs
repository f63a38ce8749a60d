use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use sharbly::linalg::{rank_rational, IntMatrix};
use sharbly::truncation::{build_complex, find_boundary_witness, VectorPool};
use sharbly::{boundary, BasicSharbly, Character, Element};

fn el(n: usize, chi: Character, cols: &[Vec<i64>]) -> Element {
    Element::from_basic(&BasicSharbly::from_columns(n, chi, cols).unwrap()).unwrap()
}

fn pool(n: usize, v: &[Vec<i64>]) -> VectorPool {
    VectorPool::from_i64(n, v).unwrap()
}

fn pow_mod(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut r = 1i64;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

// Rank over F_p by plain Gaussian elimination.
fn rank_mod(m: &IntMatrix, p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(|x| x.mod_floor(&BigInt::from(p)).to_i64().unwrap()).collect())
        .collect();
    let mut rank = 0;
    for c in 0..m.cols() {
        let Some(piv) = (rank..a.len()).find(|&r| a[r][c] != 0) else { continue };
        a.swap(piv, rank);
        let inv = pow_mod(a[rank][c], p - 2, p);
        for r in 0..a.len() {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c] * inv % p;
                for j in 0..m.cols() {
                    a[r][j] = (a[r][j] - f * a[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn line_pools_are_contractible() {
    for max in 2..=5i64 {
        let p = pool(1, &(1..=max).map(|i| vec![i]).collect::<Vec<_>>());
        let c = build_complex(1, Character::Trivial, &p, (max - 1) as usize).unwrap();
        let mut expect = vec![0; (max - 1) as usize];
        expect[0] = 1;
        assert_eq!(c.homology_dims(), expect);
    }
    let empty = VectorPool::new(2, vec![]).unwrap();
    assert_eq!(build_complex(2, Character::Trivial, &empty, 2).unwrap().homology_dims(), vec![0, 0]);
}

#[test]
fn boundary_matrices_compose_to_zero_and_ranks_agree_mod_p() {
    let p = pool(2, &[vec![1, 0], vec![0, 1], vec![1, 1], vec![1, -1], vec![2, 1], vec![1, 2]]);
    for chi in [Character::Trivial, Character::Determinant] {
        let c = build_complex(2, chi, &p, 3).unwrap();
        for k in 1..c.max_k {
            let dd = c.boundaries[k].mul(&c.boundaries[k + 1]).unwrap();
            assert!(dd.is_zero(), "d{k} d{} != 0", k + 1);
        }
        for d in &c.boundaries {
            let r = rank_rational(d);
            // Boundary entries are small, so large primes see the rational rank.
            for prime in [1_000_003, 998_244_353] {
                assert_eq!(rank_mod(d, prime), r);
            }
        }
    }
}

#[test]
fn faces_of_basis_elements_stay_in_the_basis() {
    let p = pool(2, &[vec![1, 0], vec![0, 1], vec![1, 1], vec![1, -1], vec![0, 2]]);
    let c = build_complex(2, Character::Trivial, &p, 3).unwrap();
    for k in 1..=3 {
        for r in &c.bases[k] {
            let d = boundary(&Element::from_canonical(One::one(), r.clone())).unwrap();
            for (face, _) in d.terms() {
                assert!(c.bases[k - 1].contains(face));
            }
        }
    }
}

#[test]
fn witness_examples() {
    let y = el(2, Character::Trivial, &[vec![1, 0], vec![0, 2]]);
    let p = pool(2, &[vec![1, 0], vec![0, 1], vec![0, 2]]);
    let x = find_boundary_witness(&y, &p).unwrap().unwrap();
    assert_eq!(boundary(&x).unwrap(), y);
    assert_eq!(x, el(2, Character::Trivial, &[vec![1, 0], vec![0, 1], vec![0, 2]]));

    let zero = Element::zero(2, 0, Character::Trivial);
    assert!(find_boundary_witness(&zero, &p).unwrap().unwrap().is_zero());
}

#[test]
fn exploratory_determinant_triangle() {
    let y = el(2, Character::Determinant, &[vec![1, 0], vec![0, 1], vec![1, 1]]);
    let p = pool(2, &[vec![1, 0], vec![0, 1], vec![1, 1], vec![1, -1], vec![2, 1], vec![1, 2]]);
    let w = find_boundary_witness(&y, &p).unwrap();
    println!("pool hash {} witness {:?}", p.hash(), w);
    if let Some(x) = w {
        assert_eq!(boundary(&x).unwrap(), y);
    }
}

#[test]
fn larger_pools_solve_at_least_as_much() {
    let small = pool(2, &[vec![1, 0], vec![0, 1], vec![0, 2]]);
    let large = pool(2, &[vec![1, 0], vec![0, 1], vec![0, 2], vec![1, 1], vec![2, 1]]);
    let c = build_complex(2, Character::Trivial, &small, 1).unwrap();
    for r in &c.bases[0] {
        let y = Element::from_canonical(One::one(), r.clone());
        if find_boundary_witness(&y, &small).unwrap().is_some() {
            assert!(find_boundary_witness(&y, &large).unwrap().is_some());
        }
    }
}
