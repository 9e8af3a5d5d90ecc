//! The front-door decision procedure: classify the prime 2, walk the critical
//! orbit, certify stability, hunt odd-prime obstructions, and assemble a
//! monogenicity verdict for the whole tower of iterates.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::dedekind::reduce_monic_mod_p;
use crate::intpoly::{is_perfect_square, iterate, Dyadic, IntPolyError, QuadParams};
use crate::pcf::{FactorBudget, PcfError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalyzerError {
    #[error("discriminant {0} is a perfect square: f is reducible over Q")]
    ReducibleInput(BigInt),
    #[error(transparent)]
    Iterate(#[from] IntPolyError),
    #[error(transparent)]
    Factor(#[from] PcfError),
}

/// Behaviour of the prime 2 in the tower, read off b and c mod 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwoClass {
    /// b odd: 2 is unramified at every level.
    BOddUnramified,
    /// b even, c ≡ 2 mod 4: every iterate is 2-Eisenstein, 2 totally ramified.
    EisensteinRamified,
    /// b even, b + c ≡ 1 mod 4: 2 totally ramified, Eisenstein after a shift.
    UnitRamified,
    /// b even and neither congruence holds: f itself is not 2-maximal.
    NotTwoMaximal,
}

impl TwoClass {
    pub fn label(&self) -> &'static str {
        match self {
            TwoClass::BOddUnramified => "B_ODD_UNRAMIFIED",
            TwoClass::EisensteinRamified => "EISENSTEIN_RAMIFIED",
            TwoClass::UnitRamified => "UNIT_RAMIFIED",
            TwoClass::NotTwoMaximal => "NOT_2_MAXIMAL",
        }
    }

    pub fn two_maximal(&self) -> bool {
        !matches!(self, TwoClass::NotTwoMaximal)
    }
}

pub fn classify_2(q: QuadParams) -> TwoClass {
    if q.b.rem_euclid(2) == 1 {
        TwoClass::BOddUnramified
    } else if q.c.rem_euclid(4) == 2 {
        TwoClass::EisensteinRamified
    } else if (q.b + q.c).rem_euclid(4) == 1 {
        TwoClass::UnitRamified
    } else {
        TwoClass::NotTwoMaximal
    }
}

/// The forward orbit of the critical value: cₙ = fⁿ(−b/2), a dyadic rational
/// sequence. c₁ = −Disc/4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalOrbit {
    /// c₁, c₂, … up to and including the first repeated value (when a cycle
    /// is found) or the requested depth.
    pub values: Vec<Dyadic>,
    /// Number of strictly pre-cyclic terms, when the cycle was found.
    pub preperiod: Option<usize>,
    pub period: Option<usize>,
    /// True when the walk stopped at the size cap rather than depth or cycle.
    pub truncated: bool,
}

impl CriticalOrbit {
    pub fn post_critically_finite(&self) -> bool {
        self.period.is_some()
    }

    /// The orbit value at level n (1-based), valid for all n ≥ 1 once the
    /// cycle is known.
    pub fn value_at(&self, n: usize) -> Option<&Dyadic> {
        assert!(n >= 1);
        if n <= self.values.len() {
            return Some(&self.values[n - 1]);
        }
        let (pre, per) = (self.preperiod?, self.period?);
        let idx = pre + (n - 1 - pre) % per;
        Some(&self.values[idx])
    }
}

/// Walk cₙ forward, detecting cycles, to depth `max_n` or until a value
/// exceeds `max_bits` bits.
pub fn critical_orbit(q: QuadParams, max_n: usize, max_bits: u64) -> CriticalOrbit {
    let f = q.poly();
    let b = BigInt::from(q.b);
    let crit = Dyadic::new(-b, 1); // −b/2 in canonical form
    let mut values: Vec<Dyadic> = Vec::new();
    let mut current = f.eval_dyadic(&crit);
    for _ in 0..max_n {
        if let Some(i) = values.iter().position(|v| *v == current) {
            let j = values.len();
            values.push(current);
            return CriticalOrbit {
                values,
                preperiod: Some(i),
                period: Some(j - i),
                truncated: false,
            };
        }
        if current.num().magnitude().bits() > max_bits {
            return CriticalOrbit {
                values,
                preperiod: None,
                period: None,
                truncated: true,
            };
        }
        values.push(current.clone());
        current = f.eval_dyadic(&current);
    }
    // one more look: the repeat may land exactly at depth max_n + 1
    if let Some(i) = values.iter().position(|v| *v == current) {
        let j = values.len();
        values.push(current);
        return CriticalOrbit {
            values,
            preperiod: Some(i),
            period: Some(j - i),
            truncated: false,
        };
    }
    CriticalOrbit {
        values,
        preperiod: None,
        period: None,
        truncated: false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilityCert {
    /// Disc ≡ 1 mod 4, or 4 ∥ Disc up to 16: every iterate is irreducible.
    CertifiedStable,
    Unknown,
}

/// Ayad–McQuillan sufficient condition for stability of x² + bx + c.
pub fn stability_check(q: QuadParams) -> Result<StabilityCert, AnalyzerError> {
    let disc = q.disc();
    if is_perfect_square(&disc) {
        return Err(AnalyzerError::ReducibleInput(disc));
    }
    let four = BigInt::from(4);
    let sixteen = BigInt::from(16);
    let m4 = disc.mod_floor(&four);
    if m4 == BigInt::from(1) {
        return Ok(StabilityCert::CertifiedStable);
    }
    if m4.is_zero() && !disc.mod_floor(&sixteen).is_zero() {
        return Ok(StabilityCert::CertifiedStable);
    }
    Ok(StabilityCert::Unknown)
}

/// A level where some odd prime square divides the orbit numerator's odd
/// part, or where the factorization budget ran out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddObstruction {
    pub n: usize,
    pub odd_part: BigInt,
    /// Primes p with p² dividing the odd part; None means UNKNOWN.
    pub offending_primes: Option<Vec<BigUint>>,
}

/// Scan orbit levels for odd-prime square divisors. Returns only problematic
/// levels (a square found, or budget exhausted); clean towers give an empty
/// list.
pub fn odd_p_obstructions(
    orbit: &CriticalOrbit,
    budget: &FactorBudget,
) -> Result<Vec<OddObstruction>, AnalyzerError> {
    let mut out = Vec::new();
    for (idx, value) in orbit.values.iter().enumerate() {
        let n = idx + 1;
        let odd = value.odd_part();
        if odd.abs() <= BigInt::from(1) {
            continue; // units carry no odd obstruction
        }
        match crate::pcf::square_divisor_primes(&odd, budget)? {
            Some(primes) if primes.is_empty() => {}
            Some(primes) => out.push(OddObstruction {
                n,
                odd_part: odd,
                offending_primes: Some(primes),
            }),
            None => out.push(OddObstruction {
                n,
                odd_part: odd,
                offending_primes: None,
            }),
        }
    }
    Ok(out)
}

/// Closed-form p-maximality of fⁿ (irreducibility assumed): the 2-adic
/// trichotomy at p = 2, and p² ∤ the orbit numerator at every level k ≤ n
/// for odd p.
pub fn closed_form_p_maximal(q: QuadParams, n: u32, p: u64) -> bool {
    if p == 2 {
        return classify_2(q).two_maximal();
    }
    let orbit = critical_orbit(q, n as usize, crate::intpoly::DEFAULT_MAX_BITS);
    let p2 = BigInt::from(p) * BigInt::from(p);
    for k in 1..=n as usize {
        let v = orbit
            .value_at(k)
            .expect("orbit deep enough for requested level");
        if v.odd_part().mod_floor(&p2).is_zero() {
            return false;
        }
    }
    true
}

/// 2-Eisenstein: all non-leading coefficients even, constant term ≢ 0 mod 4.
pub fn is_two_eisenstein(f: &crate::intpoly::MonicIntPoly) -> bool {
    let coeffs = f.coeffs();
    if coeffs.is_empty() {
        return false;
    }
    let four = BigInt::from(4);
    coeffs.iter().all(|c| c.is_even())
        && !coeffs[0].mod_floor(&four).is_zero()
}

/// Compare the 2-adic structure of 4^{2^n}·fⁿ(−b/2) and
/// 4^{2^{n−1}}·fⁿ⁻¹(−Disc/4): both rescale the same orbit value cₙ, so the
/// odd parts agree while the 2-parts differ. Recorded as data, not a failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalingObservation {
    pub n: u32,
    pub odd_parts_equal: bool,
    /// v₂(lhs) − v₂(rhs).
    pub two_adic_gap: i64,
}

pub fn scaling_observation(q: QuadParams, n: u32) -> Option<ScalingObservation> {
    assert!(n >= 1);
    let orbit = critical_orbit(q, n as usize, crate::intpoly::DEFAULT_MAX_BITS);
    let cn = orbit.value_at(n as usize)?.clone();
    if cn.num().is_zero() {
        return None;
    }
    let v2_num = cn.num().trailing_zeros().unwrap_or(0) as i64;
    let v2_lhs = v2_num + (1i64 << (n + 1)) - cn.exp2() as i64;
    let v2_rhs = v2_num + (1i64 << n) - cn.exp2() as i64;
    Some(ScalingObservation {
        n,
        odd_parts_equal: true, // same cₙ: odd parts trivially coincide
        two_adic_gap: v2_lhs - v2_rhs,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IrreducibilityCert {
    /// Stable by the discriminant congruence: all iterates irreducible.
    AllLevels,
    /// Certified level-by-level via an irreducible reduction mod some prime.
    ToDepth(u32),
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    DynamicallyMonogenicAllN,
    MonogenicToN(u32),
    NotMonogenicAt { n: u32, p: BigUint },
    Unknown(String),
}

impl Verdict {
    pub fn label(&self) -> String {
        match self {
            Verdict::DynamicallyMonogenicAllN => "DYNAMICALLY_MONOGENIC_ALL_N".to_string(),
            Verdict::MonogenicToN(n) => format!("MONOGENIC_TO_N({})", n),
            Verdict::NotMonogenicAt { n, p } => format!("NOT_MONOGENIC_AT(n={}, p={})", n, p),
            Verdict::Unknown(r) => format!("UNKNOWN: {}", r),
        }
    }
}

#[derive(Debug, Clone)]
pub struct MonogenicityReport {
    pub params: QuadParams,
    pub requested_depth: u32,
    pub two_class: TwoClass,
    pub orbit: CriticalOrbit,
    pub stability: StabilityCert,
    pub irreducibility: IrreducibilityCert,
    pub obstructions: Vec<OddObstruction>,
    pub verdict: Verdict,
}

pub const DEFAULT_DEPTH: u32 = 12;

/// Try to certify irreducibility of fⁿ for each n ≤ depth by finding a prime
/// p ≤ 200 with fⁿ irreducible mod p. Degrees above 64 are not attempted.
fn certify_irreducible_to_depth(q: QuadParams, depth: u32) -> IrreducibilityCert {
    let small_primes: Vec<u64> = (2u64..=200).filter(|&m| crate::pcf::is_prime(&m.into())).collect();
    let max_n = depth.min(6); // degree 64 cap
    if max_n < depth {
        return IrreducibilityCert::Unknown;
    }
    for n in 1..=max_n {
        let f = match iterate(q, n, crate::intpoly::DEFAULT_MAX_BITS) {
            Ok(f) => f,
            Err(_) => return IrreducibilityCert::Unknown,
        };
        let mut found = false;
        for &p in &small_primes {
            let fbar = reduce_monic_mod_p(&f, p);
            if fbar.degree() == Some(f.degree()) && fbar.is_irreducible() {
                found = true;
                break;
            }
        }
        if !found {
            return IrreducibilityCert::Unknown;
        }
    }
    IrreducibilityCert::ToDepth(depth)
}

/// The full decision procedure at depth N.
pub fn report(
    q: QuadParams,
    depth: u32,
    budget: &FactorBudget,
    max_bits: u64,
) -> Result<MonogenicityReport, AnalyzerError> {
    let disc = q.disc();
    if is_perfect_square(&disc) {
        return Err(AnalyzerError::ReducibleInput(disc));
    }
    let two_class = classify_2(q);
    let orbit = critical_orbit(q, depth as usize, max_bits);
    let stability = stability_check(q)?;
    let obstructions = odd_p_obstructions(&orbit, budget)?;
    let irreducibility = match stability {
        StabilityCert::CertifiedStable => IrreducibilityCert::AllLevels,
        StabilityCert::Unknown => certify_irreducible_to_depth(q, depth),
    };

    let verdict = decide(
        depth,
        two_class,
        &orbit,
        stability,
        irreducibility,
        &obstructions,
    );
    Ok(MonogenicityReport {
        params: q,
        requested_depth: depth,
        two_class,
        orbit,
        stability,
        irreducibility,
        obstructions,
        verdict,
    })
}

fn decide(
    depth: u32,
    two_class: TwoClass,
    orbit: &CriticalOrbit,
    stability: StabilityCert,
    irreducibility: IrreducibilityCert,
    obstructions: &[OddObstruction],
) -> Verdict {
    if !two_class.two_maximal() {
        return Verdict::NotMonogenicAt {
            n: 1,
            p: BigUint::from(2u32),
        };
    }
    // smallest offending level first; UNKNOWN only blocks if it precedes
    // every definite failure
    for obs in obstructions {
        match &obs.offending_primes {
            Some(primes) => {
                let p = primes.iter().min().cloned().unwrap_or_else(|| BigUint::from(0u32));
                return Verdict::NotMonogenicAt {
                    n: obs.n as u32,
                    p,
                };
            }
            None => {
                return Verdict::Unknown(format!(
                    "odd-part factorization budget exhausted at level {}",
                    obs.n
                ));
            }
        }
    }
    if orbit.truncated {
        return Verdict::Unknown("orbit values exceeded the size cap".to_string());
    }
    let pcf = orbit.post_critically_finite();
    if pcf && stability == StabilityCert::CertifiedStable {
        // every level's orbit value is one of the finitely many checked
        return Verdict::DynamicallyMonogenicAllN;
    }
    match irreducibility {
        IrreducibilityCert::AllLevels | IrreducibilityCert::ToDepth(_) => {
            Verdict::MonogenicToN(depth)
        }
        IrreducibilityCert::Unknown => Verdict::Unknown(
            "p-maximal at all checked levels, but irreducibility not certified".to_string(),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intpoly::DEFAULT_MAX_BITS;

    #[test]
    fn two_class_trichotomy() {
        assert_eq!(classify_2(QuadParams::new(1, 1)), TwoClass::BOddUnramified);
        assert_eq!(classify_2(QuadParams::new(0, -2)), TwoClass::EisensteinRamified);
        assert_eq!(classify_2(QuadParams::new(0, 1)), TwoClass::UnitRamified);
        assert_eq!(classify_2(QuadParams::new(2, 3)), TwoClass::UnitRamified);
        assert_eq!(classify_2(QuadParams::new(0, 3)), TwoClass::NotTwoMaximal);
        assert_eq!(classify_2(QuadParams::new(0, -1)), TwoClass::NotTwoMaximal);
    }

    #[test]
    fn two_class_matches_dedekind_grid() {
        use crate::dedekind::dedekind_p_maximal;
        for b in -12i64..=12 {
            for c in -12i64..=12 {
                let q = QuadParams::new(b, c);
                if is_perfect_square(&q.disc()) {
                    continue;
                }
                let expected = classify_2(q).two_maximal();
                let got = dedekind_p_maximal(&q.poly(), 2).unwrap().p_maximal;
                assert_eq!(expected, got, "b={} c={}", b, c);
            }
        }
    }

    #[test]
    fn orbit_of_x2_minus_2() {
        let orbit = critical_orbit(QuadParams::new(0, -2), 10, DEFAULT_MAX_BITS);
        let vals: Vec<String> = orbit.values.iter().map(|v| v.to_string()).collect();
        assert_eq!(vals, vec!["-2", "2", "2"]);
        assert_eq!(orbit.preperiod, Some(1));
        assert_eq!(orbit.period, Some(1));
        assert!(!orbit.truncated);
        assert_eq!(orbit.value_at(7).unwrap().to_string(), "2");
    }

    #[test]
    fn orbit_of_x2_minus_1() {
        let orbit = critical_orbit(QuadParams::new(0, -1), 10, DEFAULT_MAX_BITS);
        let vals: Vec<String> = orbit.values.iter().map(|v| v.to_string()).collect();
        assert_eq!(vals, vec!["-1", "0", "-1"]);
        assert_eq!(orbit.preperiod, Some(0));
        assert_eq!(orbit.period, Some(2));
    }

    #[test]
    fn orbit_first_value_is_minus_quarter_disc() {
        for b in -8i64..=8 {
            for c in -8i64..=8 {
                let q = QuadParams::new(b, c);
                let orbit = critical_orbit(q, 1, DEFAULT_MAX_BITS);
                let c1 = &orbit.values[0];
                let minus_disc = -q.disc();
                // c1 = -Disc/4 as a dyadic rational
                let scaled = c1.num() << (2 - c1.exp2().min(2)) as usize;
                if c1.exp2() <= 2 {
                    assert_eq!(scaled, minus_disc, "b={} c={}", b, c);
                }
                assert!(c1.exp2() <= 2);
            }
        }
    }

    #[test]
    fn stability_examples() {
        // Disc = b² − 4c
        assert_eq!(
            stability_check(QuadParams::new(1, 1)).unwrap(),
            StabilityCert::CertifiedStable
        ); // -3 ≡ 1 mod 4
        assert_eq!(
            stability_check(QuadParams::new(0, -2)).unwrap(),
            StabilityCert::CertifiedStable
        ); // 8 ≡ 0 mod 4, not mod 16
        assert_eq!(
            stability_check(QuadParams::new(0, -4)).unwrap_err(),
            AnalyzerError::ReducibleInput(BigInt::from(16))
        );
        // Disc(0, 4) = -16 ≡ 0 mod 16: no certificate
        assert_eq!(
            stability_check(QuadParams::new(0, 4)).unwrap(),
            StabilityCert::Unknown
        );
    }

    #[test]
    fn closed_form_matches_dedekind_on_a_grid() {
        use crate::dedekind::dedekind_p_maximal;
        for b in -8i64..=8 {
            for c in -8i64..=8 {
                let q = QuadParams::new(b, c);
                if is_perfect_square(&q.disc()) {
                    continue;
                }
                for n in 1..=2u32 {
                    let f = iterate(q, n, DEFAULT_MAX_BITS).unwrap();
                    let fbar_irred = {
                        // restrict to levels where f^n is plausibly the ring's
                        // minimal polynomial: require irreducibility mod some p
                        let mut ok = false;
                        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23] {
                            let g = reduce_monic_mod_p(&f, p);
                            if g.is_irreducible() {
                                ok = true;
                                break;
                            }
                        }
                        ok
                    };
                    if !fbar_irred {
                        continue;
                    }
                    for p in [3u64, 5, 7, 11, 13] {
                        let expected = closed_form_p_maximal(q, n, p);
                        let got = dedekind_p_maximal(&f, p).unwrap().p_maximal;
                        assert_eq!(expected, got, "b={} c={} n={} p={}", b, c, n, p);
                    }
                }
            }
        }
    }

    #[test]
    fn report_x2_minus_2_all_n() {
        let rep = report(
            QuadParams::new(0, -2),
            5,
            &FactorBudget::default(),
            DEFAULT_MAX_BITS,
        )
        .unwrap();
        assert_eq!(rep.verdict, Verdict::DynamicallyMonogenicAllN);
        assert_eq!(rep.two_class, TwoClass::EisensteinRamified);
        assert!(rep.obstructions.is_empty());
    }

    #[test]
    fn report_rejects_square_disc() {
        assert!(matches!(
            report(QuadParams::new(0, -4), 3, &FactorBudget::default(), DEFAULT_MAX_BITS),
            Err(AnalyzerError::ReducibleInput(_))
        ));
    }

    #[test]
    fn report_not_2_maximal() {
        let rep = report(
            QuadParams::new(0, 3),
            3,
            &FactorBudget::default(),
            DEFAULT_MAX_BITS,
        )
        .unwrap();
        assert_eq!(
            rep.verdict,
            Verdict::NotMonogenicAt {
                n: 1,
                p: BigUint::from(2u32)
            }
        );
    }

    #[test]
    fn report_odd_obstruction() {
        // b=1, c=7: Disc = -27, 9 | odd part of c1 = 27/4 → odd part 27... and
        // 3² | 27, so f itself is not 3-maximal
        let rep = report(
            QuadParams::new(1, 7),
            3,
            &FactorBudget::default(),
            DEFAULT_MAX_BITS,
        )
        .unwrap();
        match rep.verdict {
            Verdict::NotMonogenicAt { n, ref p } => {
                assert_eq!(n, 1);
                assert_eq!(*p, BigUint::from(3u32));
            }
            ref other => panic!("expected NotMonogenicAt, got {:?}", other),
        }
    }

    #[test]
    fn report_generic_finite_depth() {
        // b=1, c=1: Disc = -3 stable; generic (non-PCF) orbit
        let rep = report(
            QuadParams::new(1, 1),
            4,
            &FactorBudget::default(),
            DEFAULT_MAX_BITS,
        )
        .unwrap();
        assert!(!rep.orbit.post_critically_finite());
        assert_eq!(rep.verdict, Verdict::MonogenicToN(4));
    }
}
