use sharbly::verify::{verify, Axiom, VerifyParams};
use sharbly::Character;

#[test]
fn all_axioms_small_run() {
    for chi in [Character::Trivial, Character::Determinant] {
        for axiom in Axiom::ALL {
            let p = VerifyParams { samples: 60, seed: 1, chi, ..VerifyParams::default() };
            let r = verify(axiom, &p).unwrap();
            println!("{axiom} {chi}: passed={} nontrivial={} {}ms", r.passed, r.nontrivial, r.wall_time_ms);
            assert!(r.passed, "{}", serde_json::to_string_pretty(&r.counterexample).unwrap());
        }
    }
}
