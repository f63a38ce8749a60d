//! Reading and writing elements and tensors as JSON.

use sharbly::coproduct;
use sharbly::json::{element_string, parse_element, tensor_string};

fn main() {
    let text = r#"{"n":2,"k":1,"chi":"det","terms":[{"coeff":"-1/2","cols":[[1,0],[0,1],[1,1]]}]}"#;
    let x = parse_element(text).unwrap();
    println!("parsed:    {x:?}");
    println!("canonical: {}", element_string(&x));
    println!("coproduct: {}", tensor_string(&coproduct(&x).unwrap()));
}
