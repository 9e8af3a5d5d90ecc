//! The three post-critically finite quadratic families with closed-form
//! dynamical-monogenicity certificates, and the integer squarefree engine
//! (trial division, Miller–Rabin, Pollard–Brent rho) they require.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::intpoly::{iterate, IntPolyError, MonicIntPoly, QuadParams, DEFAULT_MAX_BITS};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PcfError {
    #[error("squarefree test of zero is undefined")]
    ZeroInput,
    #[error(transparent)]
    Iterate(#[from] IntPolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorBudget {
    pub trial_limit: u64,
    pub rho_iterations: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            trial_limit: 1_000_000,
            rho_iterations: 200_000,
        }
    }
}

/// Deterministic Miller–Rabin for inputs below 3.3·10^24 (witnesses 2..=37);
/// the same fixed witness set is used probabilistically above that.
pub fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for small in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let s = BigUint::from(small);
        if n == &s {
            return true;
        }
        if (n % &s).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - BigUint::one();
    let r = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> r;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 0..r.saturating_sub(1) {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigUint, budget: u64) -> Option<BigUint> {
    // Brent's variant, deterministic constants
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    for c in 1u64..=8 {
        let cb = BigUint::from(c);
        let mut y = BigUint::from(2u32);
        let mut steps = 0u64;
        let mut r = 1u64;
        let mut q = BigUint::one();
        let mut x;
        let mut ys;
        'outer: loop {
            x = y.clone();
            for _ in 0..r {
                y = (&y * &y + &cb) % n;
            }
            let mut k = 0u64;
            while k < r {
                ys = y.clone();
                let m = 128.min(r - k);
                for _ in 0..m {
                    y = (&y * &y + &cb) % n;
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = &q * diff % n;
                    steps += 1;
                }
                let mut g = q.gcd(n);
                if !g.is_one() {
                    if g == *n {
                        // redo the last block one gcd at a time
                        let mut yy = ys.clone();
                        for _ in 0..m {
                            yy = (&yy * &yy + &cb) % n;
                            let diff = if x > yy { &x - &yy } else { &yy - &x };
                            g = diff.gcd(n);
                            if !g.is_one() {
                                break;
                            }
                        }
                        if g.is_one() || g == *n {
                            break 'outer; // retry with another constant
                        }
                    }
                    if !g.is_one() && g != *n {
                        return Some(g);
                    }
                }
                if steps > budget {
                    return None;
                }
                k += m;
            }
            r *= 2;
        }
    }
    None
}

/// A complete or partial factorization of |n|: the prime powers found plus an
/// optional unfactored composite cofactor. The product always reproduces |n|.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeVerdict {
    pub n: BigInt,
    /// None is an honest UNKNOWN (budget exhausted).
    pub squarefree: Option<bool>,
    pub prime_factors: Vec<(BigUint, u32)>,
    pub unfactored_cofactor: Option<BigUint>,
}

fn perfect_power_base(n: &BigUint) -> Option<(BigUint, u32)> {
    let bits = n.bits();
    for k in 2..=bits.max(2) as u32 {
        let root = n.nth_root(k);
        if root.pow(k) == *n {
            return Some((root, k));
        }
        if root < BigUint::from(2u32) {
            break;
        }
    }
    None
}

/// Decide whether |n| is squarefree by full factorization within the budget.
pub fn squarefree(n: &BigInt, budget: &FactorBudget) -> Result<SquarefreeVerdict, PcfError> {
    if n.is_zero() {
        return Err(PcfError::ZeroInput);
    }
    let mut remaining = n.abs().to_biguint().unwrap();
    let mut primes: Vec<(BigUint, u32)> = Vec::new();
    let push = |p: BigUint, e: u32, primes: &mut Vec<(BigUint, u32)>| {
        if let Some(entry) = primes.iter_mut().find(|(q, _)| *q == p) {
            entry.1 += e;
        } else {
            primes.push((p, e));
        }
    };
    // trial division
    let mut d = 2u64;
    while d <= budget.trial_limit {
        let db = BigUint::from(d);
        if &db * &db > remaining {
            break;
        }
        if (&remaining % &db).is_zero() {
            let mut e = 0u32;
            while (&remaining % &db).is_zero() {
                remaining /= &db;
                e += 1;
            }
            push(db, e, &mut primes);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    // recursive splitting of the cofactor
    let mut stack = Vec::new();
    let mut cofactor: Option<BigUint> = None;
    if !remaining.is_one() {
        stack.push((remaining.clone(), 1u32));
    }
    while let Some((m, mult)) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            push(m, mult, &mut primes);
            continue;
        }
        if let Some((base, k)) = perfect_power_base(&m) {
            stack.push((base, mult * k));
            continue;
        }
        match pollard_rho(&m, budget.rho_iterations) {
            Some(f) => {
                let q = &m / &f;
                stack.push((f, mult));
                stack.push((q, mult));
            }
            None => {
                // unsplit composite: combine into a single cofactor
                let prev = cofactor.take().unwrap_or_else(BigUint::one);
                cofactor = Some(prev * m.pow(mult));
            }
        }
    }
    primes.sort();
    let squarefree = if primes.iter().any(|(_, e)| *e >= 2) {
        Some(false)
    } else if cofactor.is_none() {
        Some(true)
    } else {
        None
    };
    Ok(SquarefreeVerdict {
        n: n.clone(),
        squarefree,
        prime_factors: primes,
        unfactored_cofactor: cofactor,
    })
}

/// Primes p with p² dividing |n|, when decidable.
pub fn square_divisor_primes(n: &BigInt, budget: &FactorBudget) -> Result<Option<Vec<BigUint>>, PcfError> {
    let v = squarefree(n, budget)?;
    match v.squarefree {
        Some(true) => Ok(Some(vec![])),
        Some(false) => Ok(Some(
            v.prime_factors
                .into_iter()
                .filter(|(_, e)| *e >= 2)
                .map(|(p, _)| p)
                .collect(),
        )),
        None => {
            // offenders among the factored part may still be reportable, but
            // the full answer is unknown
            Ok(None)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// (x+a)² − a, critical value fixed.
    FA,
    /// (x+a)² − a − 1, critical orbit a 2-cycle.
    GA,
    /// (x+a)² − a − 2, critical orbit preperiodic to a fixed point.
    HA,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::FA => "f",
            Family::GA => "g",
            Family::HA => "h",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "f" | "F" | "fa" | "f_a" => Some(Family::FA),
            "g" | "G" | "ga" | "g_a" => Some(Family::GA),
            "h" | "H" | "ha" | "h_a" => Some(Family::HA),
            _ => None,
        }
    }

    /// The base power map of the specialization x ↦ x − a.
    pub fn base_poly(&self) -> MonicIntPoly {
        let c = match self {
            Family::FA => 0i64,
            Family::GA => -1,
            Family::HA => -2,
        };
        QuadParams::new(0, c).poly()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyParam {
    pub family: Family,
    pub a: i64,
}

impl FamilyParam {
    pub fn quad(&self) -> QuadParams {
        let a = self.a;
        let c = match self.family {
            Family::FA => a * a - a,
            Family::GA => a * a - a - 1,
            Family::HA => a * a - a - 2,
        };
        QuadParams::new(2 * a, c)
    }

    /// D/4 = a, a+1, a+2 per family.
    pub fn quarter_disc(&self) -> i64 {
        match self.family {
            Family::FA => self.a,
            Family::GA => self.a + 1,
            Family::HA => self.a + 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyVerdict {
    pub param: FamilyParam,
    pub monogenic_all_n: Option<bool>,
    pub reasons: Vec<String>,
}

/// The closed-form certificate: congruence on D/4 plus the squarefree
/// hypotheses of the family.
pub fn family_verdict(fp: &FamilyParam, budget: &FactorBudget) -> Result<FamilyVerdict, PcfError> {
    let d4 = fp.quarter_disc();
    let mut reasons = Vec::new();
    let congruent = d4.rem_euclid(4) == 2 || d4.rem_euclid(4) == 3;
    if !congruent {
        reasons.push(format!("D/4 = {} is {} mod 4, not 2 or 3", d4, d4.rem_euclid(4)));
        return Ok(FamilyVerdict {
            param: *fp,
            monogenic_all_n: Some(false),
            reasons,
        });
    }
    reasons.push(format!("D/4 = {} ≡ {} mod 4", d4, d4.rem_euclid(4)));
    let required: Vec<(i64, &str)> = match fp.family {
        Family::FA => vec![(fp.a, "a")],
        Family::GA => vec![(fp.a, "a"), (d4, "D/4")],
        Family::HA => vec![(fp.a - 2, "a-2"), (d4, "D/4")],
    };
    let mut unknown = false;
    for (value, label) in required {
        let v = squarefree(&BigInt::from(value), budget)?;
        match v.squarefree {
            Some(true) => reasons.push(format!("{} = {} squarefree", label, value)),
            Some(false) => {
                reasons.push(format!("{} = {} not squarefree", label, value));
                return Ok(FamilyVerdict {
                    param: *fp,
                    monogenic_all_n: Some(false),
                    reasons,
                });
            }
            None => {
                reasons.push(format!("{} = {}: squarefree test exceeded budget", label, value));
                unknown = true;
            }
        }
    }
    Ok(FamilyVerdict {
        param: *fp,
        monogenic_all_n: if unknown { None } else { Some(true) },
        reasons,
    })
}

#[derive(Debug, Clone)]
pub struct FamilyScanRow {
    pub a: i64,
    pub verdict: FamilyVerdict,
    /// Agreement with the general analyzer and the Dedekind oracle; None when
    /// the member is reducible (square discriminant) or the check was skipped.
    pub crosscheck_ok: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct FamilyScan {
    pub family: Family,
    pub rows: Vec<FamilyScanRow>,
    pub positives: usize,
    pub negatives: usize,
    pub unknowns: usize,
}

/// Scan a parameter range, cross-checking each decided verdict against the
/// general analyzer (depth 4) and the Dedekind oracle (n ≤ 3).
pub fn family_scan(
    family: Family,
    a_min: i64,
    a_max: i64,
    budget: &FactorBudget,
) -> Result<FamilyScan, PcfError> {
    assert!(a_min <= a_max);
    let mut rows = Vec::new();
    let (mut pos, mut neg, mut unk) = (0usize, 0usize, 0usize);
    for a in a_min..=a_max {
        let fp = FamilyParam { family, a };
        let verdict = family_verdict(&fp, budget)?;
        match verdict.monogenic_all_n {
            Some(true) => pos += 1,
            Some(false) => neg += 1,
            None => unk += 1,
        }
        let crosscheck_ok = crosscheck_family_member(&fp, &verdict, budget);
        rows.push(FamilyScanRow {
            a,
            verdict,
            crosscheck_ok,
        });
    }
    Ok(FamilyScan {
        family,
        rows,
        positives: pos,
        negatives: neg,
        unknowns: unk,
    })
}

fn crosscheck_family_member(
    fp: &FamilyParam,
    verdict: &FamilyVerdict,
    budget: &FactorBudget,
) -> Option<bool> {
    use crate::analyzer::{report, Verdict};
    use crate::dedekind::dedekind_p_maximal;
    let q = fp.quad();
    if crate::intpoly::is_perfect_square(&q.disc()) {
        // reducible member: no tower to compare against
        return None;
    }
    let expected = verdict.monogenic_all_n?;
    let rep = report(q, 4, budget, DEFAULT_MAX_BITS).ok()?;
    let analyzer_agrees = match (&rep.verdict, expected) {
        (Verdict::DynamicallyMonogenicAllN, true) => true,
        (Verdict::NotMonogenicAt { .. }, false) => true,
        (Verdict::MonogenicToN(_), true) => true,
        _ => false,
    };
    if !analyzer_agrees {
        return Some(false);
    }
    // Dedekind confirms positives prime-by-prime at desk scale
    if expected {
        for n in 1..=3u32 {
            let f = iterate(q, n, DEFAULT_MAX_BITS).ok()?;
            for p in [2u64, 3, 5, 7, 11, 13] {
                match dedekind_p_maximal(&f, p) {
                    Ok(v) if v.p_maximal => {}
                    _ => return Some(false),
                }
            }
        }
    }
    Some(true)
}

/// The specialization identity: familyⁿ(x − a) = baseⁿ(x) − a, with base
/// x², x² − 1, x² − 2 per family. Returns both sides (asserted equal).
pub fn specialization_map(fp: &FamilyParam, n: u32) -> Result<(MonicIntPoly, MonicIntPoly), PcfError> {
    let q = fp.quad();
    let fam_n = iterate(q, n, DEFAULT_MAX_BITS)?;
    let shift = MonicIntPoly::from_coeffs(vec![BigInt::from(-fp.a)]); // x - a
    let lhs = fam_n.compose(&shift);
    let base_c = match fp.family {
        Family::FA => 0,
        Family::GA => -1,
        Family::HA => -2,
    };
    let base_n = iterate(QuadParams::new(0, base_c), n, DEFAULT_MAX_BITS)?;
    let mut coeffs = base_n.coeffs().to_vec();
    if coeffs.is_empty() {
        coeffs.push(BigInt::zero());
    }
    coeffs[0] -= BigInt::from(fp.a);
    let rhs = MonicIntPoly::from_coeffs(coeffs);
    assert_eq!(lhs, rhs, "specialization identity failed for {:?}, n={}", fp, n);
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_small_cases() {
        let b = FactorBudget::default();
        assert_eq!(squarefree(&BigInt::from(1), &b).unwrap().squarefree, Some(true));
        assert_eq!(squarefree(&BigInt::from(2), &b).unwrap().squarefree, Some(true));
        let v12 = squarefree(&BigInt::from(12), &b).unwrap();
        assert_eq!(v12.squarefree, Some(false));
        assert_eq!(
            v12.prime_factors,
            vec![(BigUint::from(2u32), 2), (BigUint::from(3u32), 1)]
        );
        assert_eq!(squarefree(&BigInt::from(-12), &b).unwrap().squarefree, Some(false));
        assert!(matches!(squarefree(&BigInt::zero(), &b), Err(PcfError::ZeroInput)));
    }

    #[test]
    fn squarefree_certificate_reproduces_input() {
        let b = FactorBudget::default();
        for n in [4i64, 360, -97, 1_000_003, 9_699_690, 1_234_567_891] {
            let v = squarefree(&BigInt::from(n), &b).unwrap();
            let mut prod = BigUint::one();
            for (p, e) in &v.prime_factors {
                assert!(is_prime(p));
                prod *= p.pow(*e);
            }
            if let Some(c) = &v.unfactored_cofactor {
                prod *= c;
            }
            assert_eq!(prod, BigInt::from(n).abs().to_biguint().unwrap());
        }
    }

    #[test]
    fn squarefree_semiprime_beyond_trial_division() {
        // 1_000_003 * 1_000_033 has both factors above the trial cut... use a
        // smaller budget to force rho
        let b = FactorBudget {
            trial_limit: 1000,
            rho_iterations: 500_000,
        };
        let n = BigInt::from(1_000_003i64) * BigInt::from(1_000_033i64);
        let v = squarefree(&n, &b).unwrap();
        assert_eq!(v.squarefree, Some(true));
        assert_eq!(v.prime_factors.len(), 2);
    }

    #[test]
    fn squarefree_detects_large_square() {
        let b = FactorBudget {
            trial_limit: 1000,
            rho_iterations: 100_000,
        };
        let p = BigInt::from(1_000_003i64);
        let v = squarefree(&(&p * &p), &b).unwrap();
        assert_eq!(v.squarefree, Some(false));
    }

    #[test]
    fn miller_rabin_agrees_with_sieve() {
        let mut sieve = vec![true; 2000];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..2000 {
            if sieve[i] {
                let mut j = i * i;
                while j < 2000 {
                    sieve[j] = false;
                    j += i;
                }
            }
        }
        for n in 0..2000usize {
            assert_eq!(is_prime(&BigUint::from(n)), sieve[n], "n = {}", n);
        }
    }

    #[test]
    fn family_h_a0_is_x2_minus_2_and_monogenic() {
        let fp = FamilyParam { family: Family::HA, a: 0 };
        assert_eq!(fp.quad(), QuadParams::new(0, -2));
        let v = family_verdict(&fp, &FactorBudget::default()).unwrap();
        assert_eq!(v.monogenic_all_n, Some(true));
    }

    #[test]
    fn family_f_congruence_failures() {
        let b = FactorBudget::default();
        let v1 = family_verdict(&FamilyParam { family: Family::FA, a: 1 }, &b).unwrap();
        assert_eq!(v1.monogenic_all_n, Some(false));
        for a in 1..=4i64 {
            let v = family_verdict(&FamilyParam { family: Family::FA, a }, &b).unwrap();
            let expected = a == 2 || a == 3;
            assert_eq!(v.monogenic_all_n, Some(expected), "a = {}", a);
        }
    }

    #[test]
    fn family_h_examples() {
        let b = FactorBudget::default();
        let cases = [(0i64, true), (2, false), (-4, true)];
        for (a, expect) in cases {
            let v = family_verdict(&FamilyParam { family: Family::HA, a }, &b).unwrap();
            assert_eq!(v.monogenic_all_n, Some(expect), "a = {}", a);
        }
    }

    #[test]
    fn specialization_identity_examples() {
        specialization_map(&FamilyParam { family: Family::FA, a: 1 }, 2).unwrap();
        specialization_map(&FamilyParam { family: Family::HA, a: 0 }, 3).unwrap();
        specialization_map(&FamilyParam { family: Family::GA, a: 2 }, 2).unwrap();
        for a in -10..=10i64 {
            for family in [Family::FA, Family::GA, Family::HA] {
                for n in 1..=4u32 {
                    specialization_map(&FamilyParam { family, a }, n).unwrap();
                }
            }
        }
    }
}
