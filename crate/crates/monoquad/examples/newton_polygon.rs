//! Inspect the first-level Newton-polygon data for a polynomial at a prime:
//! phi-adic development, principal polygon, residual polynomials, and the
//! resulting index bound and splitting shape.
//!
//! Run with: cargo run --example newton_polygon

use monoquad::intpoly::{iterate, QuadParams, DEFAULT_MAX_BITS};
use monoquad::orenewton::ore_analyze;

fn main() {
    let q = QuadParams::new(0, -2);
    let f = iterate(q, 3, DEFAULT_MAX_BITS).unwrap();
    let p = 2;
    println!(
        "f^3 of x^2 - 2 = {}\nat p = {}",
        f.to_intpoly().to_string_in("x"),
        p
    );
    let rep = ore_analyze(&f, p);
    for phi in &rep.per_phi {
        println!(
            "\nphi = {} (multiplicity {} in f mod p)",
            phi.phi.to_intpoly().to_string_in("x"),
            phi.multiplicity
        );
        println!("  cloud: {:?}", phi.polygon.points);
        for (side, residual) in phi.polygon.sides.iter().zip(&phi.residuals) {
            println!(
                "  side {:?} -> {:?}, slope -{}/{}, residual R(y) = {}",
                side.start,
                side.end,
                side.h,
                side.e,
                residual.poly.to_string_in("y")
            );
        }
        println!("  ind_phi = {}", phi.ind);
    }
    println!(
        "\nindex lower bound {} ({}), p-maximal: {}",
        rep.index_lower_bound,
        if rep.exact { "exact" } else { "bound only" },
        rep.p_maximal
    );
    if let Some(shape) = &rep.shape {
        println!("splitting shape of {}: {}", p, shape);
    }
}
