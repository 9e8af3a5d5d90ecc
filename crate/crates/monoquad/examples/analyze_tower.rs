//! Decide monogenicity of a tower of iterated quadratics.
//!
//! Run with: cargo run --example analyze_tower

use monoquad::analyzer::{report, Verdict};
use monoquad::intpoly::{iterate, QuadParams, DEFAULT_MAX_BITS};
use monoquad::pcf::FactorBudget;

fn main() {
    let budget = FactorBudget::default();

    for (b, c) in [(0i64, -2i64), (1, 1), (0, 3), (1, 7), (2, 2)] {
        let q = QuadParams::new(b, c);
        println!("== f(x) = {} ==", q.poly().to_intpoly().to_string_in("x"));
        match report(q, 6, &budget, DEFAULT_MAX_BITS) {
            Ok(rep) => {
                println!("  2-class: {}", rep.two_class.label());
                let orbit: Vec<String> =
                    rep.orbit.values.iter().map(|v| v.to_string()).collect();
                println!("  critical orbit: {}", orbit.join(", "));
                if let (Some(pre), Some(per)) = (rep.orbit.preperiod, rep.orbit.period) {
                    println!("  post-critically finite: preperiod {}, period {}", pre, per);
                }
                for obs in &rep.obstructions {
                    println!(
                        "  obstruction at level {}: odd part {}",
                        obs.n, obs.odd_part
                    );
                }
                println!("  verdict: {}", rep.verdict.label());
                if rep.verdict == Verdict::DynamicallyMonogenicAllN {
                    // peek at how fast the iterates grow anyway
                    let f4 = iterate(q, 4, DEFAULT_MAX_BITS).unwrap();
                    println!(
                        "  (f^4 has degree {}, largest coefficient {} bits)",
                        f4.degree(),
                        f4.max_coeff_bits()
                    );
                }
            }
            Err(e) => println!("  {}", e),
        }
        println!();
    }
}
