//! Predict how the prime 2 splits at each level of the tower and verify the
//! prediction by factoring f^n over GF(2).
//!
//! Run with: cargo run --example splitting_of_two

use monoquad::intpoly::QuadParams;
use monoquad::splitting::{predict_split2, verify_split2};

fn main() {
    // b odd, c even: 2 splits with a tail of low-degree primes
    let q = QuadParams::new(-1, 2);
    println!("f(x) = {}", q.poly().to_intpoly().to_string_in("x"));
    for n in 1..=6 {
        let check = verify_split2(q, n).unwrap();
        println!(
            "n = {}: predicted {}, factor degrees {:?} -> {}",
            n,
            check.predicted,
            check.actual_degrees,
            if check.agrees { "agree" } else { "DISAGREE" }
        );
    }

    // the primes above 2 at level 5, as two-generator ideals
    let check = verify_split2(q, 5).unwrap();
    println!("\nprimes above 2 in Q[x]/(f^5):");
    for g in &check.factors {
        println!("  (2, g(a)) with g = {}", g.to_string_in("a"));
    }

    // b even: totally ramified instead
    let q = QuadParams::new(0, -2);
    for n in [1, 3, 5] {
        println!(
            "\nx^2 - 2, n = {}: {}",
            n,
            predict_split2(q, n).unwrap()
        );
    }
}
