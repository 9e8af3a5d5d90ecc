//! The three post-critically finite families and their closed-form
//! dynamical-monogenicity certificates.
//!
//! Run with: cargo run --example pcf_families

use monoquad::pcf::{
    family_scan, family_verdict, specialization_map, FactorBudget, Family, FamilyParam,
};

fn main() {
    let budget = FactorBudget::default();

    for family in [Family::FA, Family::GA, Family::HA] {
        let scan = family_scan(family, -10, 10, &budget).unwrap();
        let positives: Vec<i64> = scan
            .rows
            .iter()
            .filter(|r| r.verdict.monogenic_all_n == Some(true))
            .map(|r| r.a)
            .collect();
        println!(
            "family {}: monogenic for all n at a = {:?}",
            family.name(),
            positives
        );
    }

    // the reasoning for one member
    let fp = FamilyParam {
        family: Family::HA,
        a: 0,
    };
    let v = family_verdict(&fp, &budget).unwrap();
    println!("\nh with a = 0 (this is x^2 - 2):");
    for reason in &v.reasons {
        println!("  {}", reason);
    }

    // each family member is a shifted power map: family^n(x - a) = base^n(x) - a
    let (lhs, _rhs) = specialization_map(&fp, 3).unwrap();
    println!(
        "\nspecialization at n = 3: {}",
        lhs.to_intpoly().to_string_in("x")
    );
}
