//! Cross-check the closed-form p-maximality criterion against Dedekind's
//! criterion and the Newton-polygon engine on a small grid.
//!
//! Run with: cargo run --release --example oracle_crosscheck

use monoquad::analyzer::closed_form_p_maximal;
use monoquad::dedekind::dedekind_p_maximal;
use monoquad::intpoly::{is_perfect_square, iterate, QuadParams, DEFAULT_MAX_BITS};
use monoquad::orenewton::ore_analyze;

fn main() {
    let mut checked = 0u64;
    let mut disagreements = 0u64;
    for b in -6i64..=6 {
        for c in -6i64..=6 {
            let q = QuadParams::new(b, c);
            if is_perfect_square(&q.disc()) {
                continue;
            }
            for n in 1..=2u32 {
                let f = iterate(q, n, DEFAULT_MAX_BITS).unwrap();
                for p in [2u64, 3, 5, 7] {
                    let closed = closed_form_p_maximal(q, n, p);
                    let ded = dedekind_p_maximal(&f, p).unwrap().p_maximal;
                    let ore = ore_analyze(&f, p).p_maximal;
                    checked += 1;
                    if closed != ded || ded != ore {
                        disagreements += 1;
                        println!(
                            "DISAGREE at b={} c={} n={} p={}: closed={} dedekind={} ore={}",
                            b, c, n, p, closed, ded, ore
                        );
                    }
                }
            }
        }
    }
    println!("{} verdicts checked, {} disagreements", checked, disagreements);
}
