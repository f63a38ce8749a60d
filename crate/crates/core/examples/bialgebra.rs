//! Differential, product, coproduct and antipode on small elements.

use sharbly::{antipode, boundary, coproduct, product, BasicSharbly, Character, Element};

fn el(n: usize, cols: &[Vec<i64>]) -> Element {
    Element::from_basic(&BasicSharbly::from_columns(n, Character::Trivial, cols).unwrap()).unwrap()
}

fn main() {
    let edge = el(1, &[vec![1], vec![2]]);
    println!("d[1,2] = {:?}", boundary(&edge).unwrap());

    let one = el(1, &[vec![1]]);
    let two = el(1, &[vec![2]]);
    println!("[1]*[1] = {:?}", product(&one, &one).unwrap());
    let x = product(&one, &two).unwrap();
    println!("[1]*[2] = {x:?}");
    println!("D([e1,2e2]) = {:?}", coproduct(&x).unwrap());

    let y = el(2, &[vec![1, 0], vec![0, 1], vec![0, 2]]);
    println!("d[e1,e2,2e2] = {:?}", boundary(&y).unwrap());
    println!("S([e1,2e2]) = {:?}", antipode(&x).unwrap());
}
