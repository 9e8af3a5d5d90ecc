//! The GF(2) identities behind the splitting prediction: iterating
//! F = x^2 + x + 1 and G = x^2 + x.
//!
//! Run with: cargo run --example gf2_identities

use monoquad::ffpoly::{gf2_iterate, GF2Poly};
use monoquad::splitting::ff_identities;
use rand::SeedableRng;

fn main() {
    let f = GF2Poly::f_quadratic();
    for n in 1..=5u32 {
        let fn_ = gf2_iterate(&f, n).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let degs: Vec<usize> = fn_
            .factor(&mut rng)
            .iter()
            .map(|(g, _)| g.degree().unwrap())
            .collect();
        println!("F^{} factors into degrees {:?}", n, degs);
    }
    println!();
    for check in ff_identities(10).unwrap() {
        println!("[{}] {}", if check.holds { "ok" } else { "FAIL" }, check.name);
    }
}
