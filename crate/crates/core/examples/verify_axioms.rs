//! Checks every bialgebra identity on seeded random elements.

use sharbly::verify::{verify, Axiom, VerifyParams};
use sharbly::Character;

fn main() {
    let samples = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(200);
    for chi in [Character::Trivial, Character::Determinant] {
        for axiom in Axiom::ALL {
            let params = VerifyParams { samples, chi, ..VerifyParams::default() };
            let r = verify(axiom, &params).unwrap();
            println!(
                "{chi:<4} {axiom:<10} {} ({} of {samples} samples nonzero, {} ms)",
                if r.passed { "ok" } else { "FAILED" },
                r.nontrivial,
                r.wall_time_ms
            );
        }
    }
}
