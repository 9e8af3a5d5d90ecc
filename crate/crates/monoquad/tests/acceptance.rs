//! The acceptance gate: ten end-to-end criteria, one pass/fail line each
//! (run with `--nocapture` to see the lines).

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use monoquad::analyzer::{
    classify_2, closed_form_p_maximal, critical_orbit, is_two_eisenstein, report,
    scaling_observation, TwoClass, Verdict,
};
use monoquad::dedekind::{dedekind_p_maximal, reduce_monic_mod_p};
use monoquad::intpoly::{is_perfect_square, iterate, MonicIntPoly, QuadParams, DEFAULT_MAX_BITS};
use monoquad::orenewton::ore_analyze;
use monoquad::pcf::{family_scan, FactorBudget, Family, FamilyParam};
use monoquad::splitting::{factor2, ff_identities, predict_split2, verify_split2, ShapeEntry};

const ORACLE_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn certify_irreducible(f: &MonicIntPoly) -> bool {
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        if reduce_monic_mod_p(f, p).is_irreducible() {
            return true;
        }
    }
    false
}

#[test]
fn criterion_01_oracle_equivalence_grid() {
    let start = Instant::now();
    let mut checked = 0u64;
    for b in -12i64..=12 {
        for c in -12i64..=12 {
            let q = QuadParams::new(b, c);
            if is_perfect_square(&q.disc()) {
                continue;
            }
            for n in 1..=3u32 {
                let f = iterate(q, n, DEFAULT_MAX_BITS).unwrap();
                if !certify_irreducible(&f) {
                    continue;
                }
                for p in ORACLE_PRIMES {
                    let closed = closed_form_p_maximal(q, n, p);
                    let ded = dedekind_p_maximal(&f, p).unwrap().p_maximal;
                    let ore = ore_analyze(&f, p).p_maximal;
                    assert_eq!(
                        closed, ded,
                        "closed form vs Dedekind at b={} c={} n={} p={}",
                        b, c, n, p
                    );
                    assert_eq!(
                        ded, ore,
                        "Dedekind vs Newton polygon at b={} c={} n={} p={}",
                        b, c, n, p
                    );
                    checked += 1;
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 120.0, "took {:.1}s, limit 120s", secs);
    println!(
        "[PASS] criterion 1: oracle equivalence on {} grid verdicts, zero disagreements ({:.1}s)",
        checked, secs
    );
}

#[test]
fn criterion_02_x2_minus_2_reproduction() {
    let q = QuadParams::new(0, -2);
    let rep = report(q, 5, &FactorBudget::default(), DEFAULT_MAX_BITS).unwrap();
    assert_eq!(rep.verdict, Verdict::DynamicallyMonogenicAllN);
    let vals: Vec<String> = rep.orbit.values.iter().map(|v| v.to_string()).collect();
    assert_eq!(vals, vec!["-2", "2", "2"]);
    assert_eq!(rep.orbit.preperiod, Some(1));
    assert_eq!(rep.orbit.period, Some(1));

    let printed = [
        "x^2 - 2",
        "x^4 - 4*x^2 + 2",
        "x^8 - 8*x^6 + 20*x^4 - 16*x^2 + 2",
        "x^16 - 16*x^14 + 104*x^12 - 352*x^10 + 660*x^8 - 672*x^6 + 336*x^4 - 64*x^2 + 2",
    ];
    for (n, expected) in printed.iter().enumerate() {
        let f = iterate(q, n as u32 + 1, DEFAULT_MAX_BITS).unwrap();
        assert_eq!(&f.to_intpoly().to_string_in("x"), expected, "f^{}", n + 1);
    }
    // f^5 is printed with an ellipsis; check the displayed coefficients
    let f5 = iterate(q, 5, DEFAULT_MAX_BITS).unwrap();
    assert_eq!(f5.coeff(32), BigInt::from(1));
    assert_eq!(f5.coeff(30), BigInt::from(-32));
    assert_eq!(f5.coeff(4), BigInt::from(5440));
    assert_eq!(f5.coeff(2), BigInt::from(-256));
    assert_eq!(f5.coeff(0), BigInt::from(2));
    println!("[PASS] criterion 2: x^2 - 2 analysis and printed iterates reproduced exactly");
}

#[test]
fn criterion_03_split_example_b_minus1_c2() {
    let check = verify_split2(QuadParams::new(-1, 2), 5).unwrap();
    assert!(check.agrees);
    assert_eq!(check.actual_degrees, vec![1, 1, 2, 4, 4, 4, 8, 8]);
    assert!(check.predicted.entries().iter().all(|e| e.e == 1));
    let d8: Vec<String> = check
        .factors
        .iter()
        .filter(|g| g.degree() == Some(8))
        .map(|g| g.to_string_in("x"))
        .collect();
    assert!(d8.contains(&"x^8 + x^6 + x^5 + x^4 + x^3 + x + 1".to_string()));
    assert!(d8.contains(&"x^8 + x^6 + x^5 + x^3 + 1".to_string()));
    println!("[PASS] criterion 3: split2 -1 2 5 --verify matches the printed eight primes");
}

#[test]
fn criterion_04_split_example_b_minus1_c1() {
    let shape = predict_split2(QuadParams::new(-1, 1), 5).unwrap();
    assert_eq!(
        shape.entries(),
        &[ShapeEntry {
            e: 1,
            f: 8,
            count: 4
        }]
    );
    let factors = factor2(QuadParams::new(-1, 1), 5, 1).unwrap();
    let names: Vec<String> = factors
        .iter()
        .map(|(g, _)| g.to_string_in("x"))
        .collect();
    let expected = [
        "x^8 + x^6 + x^5 + x^2 + 1",
        "x^8 + x^6 + x^5 + x + 1",
        "x^8 + x^5 + x^3 + x + 1",
        "x^8 + x^5 + x^4 + x^3 + x^2 + x + 1",
    ];
    assert_eq!(names.len(), 4);
    for e in expected {
        assert!(names.contains(&e.to_string()), "missing {}", e);
    }
    println!("[PASS] criterion 4: split2 -1 1 5 yields the four printed degree-8 primes");
}

#[test]
fn criterion_05_split_prediction_grid() {
    let start = Instant::now();
    let mut runs = 0u64;
    for b in (-9i64..=9).step_by(2) {
        for c in -9i64..=9 {
            for n in 1..=7u32 {
                let check = verify_split2(QuadParams::new(b, c), n).unwrap();
                assert!(check.agrees, "mismatch at b={} c={} n={}", b, c, n);
                runs += 1;
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 60.0, "took {:.1}s, limit 60s", secs);
    println!(
        "[PASS] criterion 5: splitting prediction verified on {} (b, c, n) cases ({:.1}s)",
        runs, secs
    );
}

#[test]
fn criterion_06_gf2_identity_suite() {
    let start = Instant::now();
    let checks = ff_identities(10).unwrap();
    for check in &checks {
        assert!(check.holds, "failed: {}", check.name);
    }
    // the three named families of identities are all present
    assert!(checks.iter().any(|c| c.name.contains("G^11 = G^10 * F^10")));
    assert!(checks.iter().any(|c| c.name.contains("F^8 = product of 16")));
    assert!(checks.iter().any(|c| c.name.contains("G^16 = x^65536 + x")));
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 30.0, "took {:.1}s, limit 30s", secs);
    println!(
        "[PASS] criterion 6: all {} GF(2) identities hold ({:.1}s)",
        checks.len(),
        secs
    );
}

#[test]
fn criterion_07_eisenstein_propagation() {
    let shift = MonicIntPoly::from_coeffs(vec![BigInt::from(1)]); // x + 1
    let mut eisenstein_cases = 0u64;
    let mut unit_cases = 0u64;
    for b in -12i64..=12 {
        for c in -12i64..=12 {
            let q = QuadParams::new(b, c);
            match classify_2(q) {
                TwoClass::EisensteinRamified => {
                    for n in 1..=6u32 {
                        let f = iterate(q, n, DEFAULT_MAX_BITS).unwrap();
                        assert!(
                            is_two_eisenstein(&f),
                            "f^{} of b={} c={} not 2-Eisenstein",
                            n,
                            b,
                            c
                        );
                    }
                    eisenstein_cases += 1;
                }
                TwoClass::UnitRamified => {
                    for n in 1..=6u32 {
                        let f = iterate(q, n, DEFAULT_MAX_BITS).unwrap();
                        let g = if n % 2 == 0 { f } else { f.compose(&shift) };
                        assert!(
                            is_two_eisenstein(&g),
                            "unit-ramified alternation fails at b={} c={} n={}",
                            b,
                            c,
                            n
                        );
                    }
                    unit_cases += 1;
                }
                _ => {}
            }
        }
    }
    println!(
        "[PASS] criterion 7: 2-Eisenstein propagation on {} Eisenstein and {} unit-ramified parameters",
        eisenstein_cases, unit_cases
    );
}

#[test]
fn criterion_08_non_maximality_propagates() {
    let mut checked = 0u64;
    for b in -12i64..=12 {
        for c in -12i64..=12 {
            let q = QuadParams::new(b, c);
            if is_perfect_square(&q.disc()) {
                continue;
            }
            let fs: Vec<MonicIntPoly> = (1..=3u32)
                .map(|n| iterate(q, n, DEFAULT_MAX_BITS).unwrap())
                .collect();
            for p in ORACLE_PRIMES {
                let verdicts: Vec<bool> = fs
                    .iter()
                    .map(|f| dedekind_p_maximal(f, p).unwrap().p_maximal)
                    .collect();
                for n in 0..verdicts.len() - 1 {
                    if !verdicts[n] {
                        assert!(
                            !verdicts[n + 1],
                            "b={} c={} p={}: f^{} fails but f^{} recovers",
                            b,
                            c,
                            p,
                            n + 1,
                            n + 2
                        );
                        checked += 1;
                    }
                }
            }
        }
    }
    println!(
        "[PASS] criterion 8: non-maximality propagated up the tower in {} failing cases",
        checked
    );
}

#[test]
fn criterion_09_pcf_family_scan() {
    let start = Instant::now();
    let budget = FactorBudget::default();
    for family in [Family::FA, Family::GA, Family::HA] {
        let scan = family_scan(family, -50, 50, &budget).unwrap();
        assert_eq!(scan.unknowns, 0, "family {} has unknowns", family.name());
        for row in &scan.rows {
            assert_ne!(
                row.crosscheck_ok,
                Some(false),
                "family {} a={} disagrees with the analyzer/oracle",
                family.name(),
                row.a
            );
            // orbit structure per family: fixed point, 2-cycle, or strictly
            // preperiodic to a fixed point
            let fp = FamilyParam { family, a: row.a };
            let q = fp.quad();
            if is_perfect_square(&q.disc()) {
                continue;
            }
            let orbit = critical_orbit(q, 8, DEFAULT_MAX_BITS);
            let a = BigInt::from(row.a);
            match family {
                Family::FA => {
                    assert_eq!((orbit.preperiod, orbit.period), (Some(0), Some(1)));
                    assert_eq!(orbit.values[0].num(), &-&a);
                    assert!(orbit.values[0].is_integer());
                }
                Family::GA => {
                    assert_eq!((orbit.preperiod, orbit.period), (Some(0), Some(2)));
                    assert_eq!(orbit.values[0].num(), &(-&a - 1));
                    assert_eq!(orbit.values[1].num(), &-&a);
                }
                Family::HA => {
                    assert_eq!((orbit.preperiod, orbit.period), (Some(1), Some(1)));
                    assert_eq!(orbit.values[0].num(), &(-&a - 2));
                    assert_eq!(orbit.values[1].num(), &(-&a + 2));
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 120.0, "took {:.1}s, limit 120s", secs);
    println!(
        "[PASS] criterion 9: family scans over a in [-50, 50] agree with the analyzer and oracles ({:.1}s)",
        secs
    );
}

#[test]
fn criterion_10_identity_audit() {
    for b in -12i64..=12 {
        for c in -12i64..=12 {
            let q = QuadParams::new(b, c);
            let disc = q.disc();
            let orbit = critical_orbit(q, 1, DEFAULT_MAX_BITS);
            let c1 = &orbit.values[0];
            // f(-b/2) = -Disc/4
            assert!(c1.exp2() <= 2);
            let lhs = c1.num() << (2 - c1.exp2()) as usize;
            assert_eq!(lhs, -&disc, "b={} c={}", b, c);
            // A_1 = ± odd part of Disc
            if !disc.is_zero() {
                let mut d = disc.abs();
                while (&d % BigInt::from(2)).is_zero() {
                    d /= 2;
                }
                assert_eq!(c1.odd_part().abs(), d, "b={} c={}", b, c);
            }
            // the rescaled orbit quantities share odd parts but not 2-parts
            if is_perfect_square(&disc) {
                continue;
            }
            for n in 1..=3u32 {
                if let Some(obs) = scaling_observation(q, n) {
                    assert!(obs.odd_parts_equal);
                    assert_eq!(obs.two_adic_gap, 1i64 << n, "b={} c={} n={}", b, c, n);
                }
            }
        }
    }
    println!(
        "[PASS] criterion 10: orbit/discriminant identities hold; the 4-power rescalings differ only in their 2-part (gap 2^n)"
    );
}
