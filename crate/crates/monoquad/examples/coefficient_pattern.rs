//! Which irreducible factors of F^(2^(m-1)) over GF(2) satisfy the
//! subdiagonal coefficient pattern (a_{2^m-1} = 0, a_{2^m-1-2^i} = 1), and do
//! they exhaust it? An open question; this just prints the data.
//!
//! Run with: cargo run --release --example coefficient_pattern

use monoquad::splitting::pattern_experiment;

fn main() {
    for row in pattern_experiment(4).unwrap() {
        println!(
            "m = {}: F^{} has {} irreducible factors of degree {}; pattern holds for all: {}; exhausts pattern: {}",
            row.m,
            1u32 << (row.m - 1),
            row.factor_count,
            1u32 << row.m,
            row.pattern_holds_for_all_factors,
            row.factors_exhaust_pattern
        );
    }
}
