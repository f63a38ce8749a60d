//! Wheel sharblies: zero for even n, primitive cycles for odd n.

use sharbly::canon::with_max_cols;
use sharbly::classes::{is_cycle, wheel};
use sharbly::is_primitive;

fn main() {
    for n in 3..=6 {
        // w_n has 2n columns, more than the default width cap allows for n >= 5.
        with_max_cols(2 * n, || {
            let w = wheel(n).unwrap();
            if w.is_zero() {
                println!("w_{n} = 0");
            } else {
                println!("w_{n} != 0, cycle: {}, primitive: {}", is_cycle(&w).unwrap(), is_primitive(&w).unwrap());
            }
        });
    }
}
