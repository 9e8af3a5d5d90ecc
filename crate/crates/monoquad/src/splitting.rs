//! Splitting of the prime 2 in the tower: closed-form shape prediction,
//! direct verification by factoring fⁿ over GF(2), and the F/G identities
//! the prediction rests on.

use rand::SeedableRng;
use thiserror::Error;

use crate::analyzer::{classify_2, TwoClass};
use crate::ffpoly::{gf2_iterate, GF2Poly, Gf2Error};
use crate::intpoly::QuadParams;
use crate::orenewton::FACTOR_SEED;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SplitError {
    #[error("f is not 2-maximal: the shape formula does not apply")]
    NotTwoMaximal,
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
}

/// One block of the splitting shape: `count` primes with ramification index
/// `e` and residue degree `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShapeEntry {
    pub e: u64,
    pub f: usize,
    pub count: usize,
}

/// A normalized multiset of (e, f) pairs; entries merged and sorted by (f, e).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingShape {
    entries: Vec<ShapeEntry>,
}

impl SplittingShape {
    pub fn from_entries(raw: Vec<ShapeEntry>) -> Self {
        let mut entries: Vec<ShapeEntry> = Vec::new();
        for entry in raw {
            if entry.count == 0 {
                continue;
            }
            if let Some(existing) = entries
                .iter_mut()
                .find(|x| x.e == entry.e && x.f == entry.f)
            {
                existing.count += entry.count;
            } else {
                entries.push(entry);
            }
        }
        entries.sort_by_key(|x| (x.f, x.e));
        SplittingShape { entries }
    }

    pub fn entries(&self) -> &[ShapeEntry] {
        &self.entries
    }

    /// Σ e·f·count — must equal the field degree.
    pub fn total_degree(&self) -> u64 {
        self.entries
            .iter()
            .map(|x| x.e * x.f as u64 * x.count as u64)
            .sum()
    }

    /// Residue degrees with multiplicity, sorted; meaningful in the
    /// unramified case where it matches the factor degrees mod 2.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for x in &self.entries {
            for _ in 0..x.count {
                out.push(x.f);
            }
        }
        out.sort_unstable();
        out
    }
}

impl std::fmt::Display for SplittingShape {
    fn fmt(&self, fmt: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|x| format!("{} x (e={}, f={})", x.count, x.e, x.f))
            .collect();
        write!(fmt, "{{{}}}", parts.join(", "))
    }
}

/// Smallest m with n < 2^m (so 2^{m-1} ≤ n), for n ≥ 1.
fn m_for_strict(n: u32) -> u32 {
    let mut m = 0u32;
    while (1u64 << m) <= n as u64 {
        m += 1;
    }
    m
}

/// Smallest m with n ≤ 2^m, for n ≥ 1.
fn m_for_weak(n: u32) -> u32 {
    let mut m = 0u32;
    while (1u64 << m) < n as u64 {
        m += 1;
    }
    m
}

/// Closed-form splitting shape of 2 in Q[x]/(fⁿ), assuming f is 2-maximal
/// and fⁿ irreducible.
pub fn predict_split2(q: QuadParams, n: u32) -> Result<SplittingShape, SplitError> {
    assert!(n >= 1);
    let class = classify_2(q);
    let c_odd = q.c.rem_euclid(2) == 1;
    match class {
        TwoClass::NotTwoMaximal => Err(SplitError::NotTwoMaximal),
        TwoClass::EisensteinRamified | TwoClass::UnitRamified => {
            // totally ramified at every level
            Ok(SplittingShape::from_entries(vec![ShapeEntry {
                e: 1u64 << n,
                f: 1,
                count: 1,
            }]))
        }
        TwoClass::BOddUnramified if c_odd => {
            // f̄ⁿ = Fⁿ: 2^{n-m} primes of degree 2^m
            let m = m_for_strict(n);
            Ok(SplittingShape::from_entries(vec![ShapeEntry {
                e: 1,
                f: 1usize << m,
                count: 1usize << (n - m),
            }]))
        }
        TwoClass::BOddUnramified => {
            // f̄ⁿ = Gⁿ = G·F·F²·…·Fⁿ⁻¹ (all distinct irreducible factors)
            if n == 1 {
                return Ok(SplittingShape::from_entries(vec![ShapeEntry {
                    e: 1,
                    f: 1,
                    count: 2,
                }]));
            }
            let m = m_for_weak(n);
            let mut entries = vec![ShapeEntry { e: 1, f: 1, count: 2 }];
            for r in 1..m {
                let count = (1usize << ((1u64 << r) - r as u64))
                    - (1usize << ((1u64 << (r - 1)) - r as u64));
                entries.push(ShapeEntry {
                    e: 1,
                    f: 1usize << r,
                    count,
                });
            }
            let mut top = 0usize;
            for j in (1u64 << (m - 1))..n as u64 {
                top += 1usize << (j - m as u64);
            }
            if top > 0 {
                entries.push(ShapeEntry {
                    e: 1,
                    f: 1usize << m,
                    count: top,
                });
            }
            Ok(SplittingShape::from_entries(entries))
        }
    }
}

/// Factor fⁿ mod 2 and compare the factor degrees with the prediction.
#[derive(Debug, Clone)]
pub struct SplitCheck {
    pub n: u32,
    pub predicted: SplittingShape,
    pub factors: Vec<GF2Poly>,
    pub actual_degrees: Vec<usize>,
    pub agrees: bool,
}

/// Direct verification in the unramified case (b odd): fⁿ mod 2 must be
/// squarefree with factor degrees matching the predicted residue degrees.
pub fn verify_split2(q: QuadParams, n: u32) -> Result<SplitCheck, SplitError> {
    verify_split2_seeded(q, n, FACTOR_SEED)
}

/// Reduce fⁿ mod 2 (any parity of b) and factor it with the given seed.
pub fn factor2(q: QuadParams, n: u32, seed: u64) -> Result<Vec<(GF2Poly, u32)>, SplitError> {
    let fbar = GF2Poly::from_coeff_bits(&[
        q.c.rem_euclid(2) == 1,
        q.b.rem_euclid(2) == 1,
        true,
    ]);
    let fn_bar = gf2_iterate(&fbar, n)?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut factors = fn_bar.factor(&mut rng);
    factors.sort_by_key(|(g, _)| (g.degree(), g.to_string_in("x")));
    Ok(factors)
}

pub fn verify_split2_seeded(q: QuadParams, n: u32, seed: u64) -> Result<SplitCheck, SplitError> {
    assert!(q.b.rem_euclid(2) == 1, "verification requires b odd");
    let predicted = predict_split2(q, n)?;
    let fbar = GF2Poly::from_coeff_bits(&[q.c.rem_euclid(2) == 1, true, true]);
    let fn_bar = gf2_iterate(&fbar, n)?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let raw = fn_bar.factor(&mut rng);
    let squarefree = raw.iter().all(|(_, e)| *e == 1);
    let mut factors: Vec<GF2Poly> = raw.into_iter().map(|(g, _)| g).collect();
    factors.sort_by_key(|g| (g.degree(), g.to_string_in("x")));
    let mut actual_degrees: Vec<usize> =
        factors.iter().map(|g| g.degree().unwrap_or(0)).collect();
    actual_degrees.sort_unstable();
    let agrees = squarefree && actual_degrees == predicted.degree_multiset();
    Ok(SplitCheck {
        n,
        predicted,
        factors,
        actual_degrees,
        agrees,
    })
}

#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
}

/// The F/G identities over GF(2) underlying the shape formulas:
/// Gⁿ⁺¹ = Gⁿ·Fⁿ, Fⁿ + 1 = Gⁿ, G^{2^m} = x^{2^{2^m}} + x, pairwise coprimality
/// of the Fⁱ, and the factor count of Fⁿ.
pub fn ff_identities(n_max: u32) -> Result<Vec<IdentityCheck>, SplitError> {
    let f = GF2Poly::f_quadratic();
    let g = GF2Poly::g_quadratic();
    let mut checks = Vec::new();

    let mut f_iter: Vec<GF2Poly> = Vec::new(); // F^1..F^{n_max+1}
    let mut g_iter: Vec<GF2Poly> = Vec::new();
    for n in 1..=n_max + 1 {
        f_iter.push(gf2_iterate(&f, n)?);
        g_iter.push(gf2_iterate(&g, n)?);
    }

    for n in 1..=n_max {
        let lhs = &g_iter[n as usize]; // G^{n+1}
        let rhs = g_iter[n as usize - 1].mul(&f_iter[n as usize - 1]);
        checks.push(IdentityCheck {
            name: format!("G^{} = G^{} * F^{}", n + 1, n, n),
            holds: *lhs == rhs,
        });
    }

    for n in 1..=n_max {
        let lhs = f_iter[n as usize - 1].add(&GF2Poly::one());
        checks.push(IdentityCheck {
            name: format!("F^{} + 1 = G^{}", n, n),
            holds: lhs == g_iter[n as usize - 1],
        });
    }

    for m in 0..=4u32 {
        let n = 1u32 << m;
        let gn = if n <= n_max + 1 {
            g_iter[n as usize - 1].clone()
        } else {
            gf2_iterate(&g, n)?
        };
        let deg = 1usize << (1usize << m);
        let artin = GF2Poly::monomial(deg).add(&GF2Poly::x());
        checks.push(IdentityCheck {
            name: format!("G^{} = x^{} + x", n, deg),
            holds: gn == artin,
        });
    }

    let pair_max = n_max.min(8);
    let mut coprime = true;
    for i in 1..=pair_max {
        for j in (i + 1)..=pair_max {
            let d = f_iter[i as usize - 1].gcd(&f_iter[j as usize - 1]);
            if !d.is_one() {
                coprime = false;
            }
        }
    }
    checks.push(IdentityCheck {
        name: format!("F^i, F^j coprime for i < j <= {}", pair_max),
        holds: coprime,
    });

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(FACTOR_SEED);
    for n in 1..=n_max.min(8) {
        let m = m_for_strict(n);
        let factors = f_iter[n as usize - 1].factor(&mut rng);
        let distinct = factors.iter().all(|(_, e)| *e == 1);
        let right_count = factors.len() == 1usize << (n - m);
        let right_degree = factors
            .iter()
            .all(|(p, _)| p.degree() == Some(1usize << m) && p.is_irreducible());
        checks.push(IdentityCheck {
            name: format!(
                "F^{} = product of {} distinct irreducibles of degree {}",
                n,
                1usize << (n - m),
                1usize << m
            ),
            holds: distinct && right_count && right_degree,
        });
    }

    Ok(checks)
}

/// One row of the coefficient-pattern experiment on the factors of F^{2^{m-1}}.
#[derive(Debug, Clone)]
pub struct PatternRow {
    pub m: u32,
    pub factor_count: usize,
    /// Every factor has a_{2^m−1} = 0 and a_{2^m−1−2^i} = 1 for 0 ≤ i < m.
    pub pattern_holds_for_all_factors: bool,
    /// The factor set equals the set of ALL irreducibles of degree 2^m
    /// satisfying the pattern.
    pub factors_exhaust_pattern: bool,
}

fn matches_pattern(p: &GF2Poly, m: u32) -> bool {
    let d = 1usize << m;
    if p.degree() != Some(d) {
        return false;
    }
    if p.bit(d - 1) {
        return false;
    }
    for i in 0..m {
        if !p.bit(d - 1 - (1usize << i)) {
            return false;
        }
    }
    true
}

/// Empirical survey: which irreducible factors of F^{2^{m-1}} obey the
/// subdiagonal coefficient pattern, and whether they exhaust it.
pub fn pattern_experiment(m_max: u32) -> Result<Vec<PatternRow>, SplitError> {
    assert!(m_max <= 4, "degree-16 enumeration is the intended ceiling");
    let f = GF2Poly::f_quadratic();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(FACTOR_SEED);
    let mut rows = Vec::new();
    for m in 1..=m_max {
        let n = 1u32 << (m - 1);
        let fn_bar = gf2_iterate(&f, n)?;
        let factors: Vec<GF2Poly> = fn_bar.factor(&mut rng).into_iter().map(|(p, _)| p).collect();
        let pattern_holds_for_all_factors = factors.iter().all(|p| matches_pattern(p, m));
        let d = 1usize << m;
        // enumerate all monic degree-2^m polynomials obeying the pattern with
        // nonzero constant term, keep the irreducible ones
        let mut support: Vec<usize> = vec![d, 0];
        support.extend((0..m).map(|i| d - 1 - (1usize << i)));
        support.sort_unstable();
        support.dedup();
        let fixed = GF2Poly::from_support(&support);
        let free_positions: Vec<usize> = (1..d - 1)
            .filter(|&idx| (0..m).all(|i| idx != d - 1 - (1usize << i)))
            .collect();
        let mut pattern_irreducibles: Vec<GF2Poly> = Vec::new();
        for mask in 0u64..(1u64 << free_positions.len()) {
            let mut cand = fixed.clone();
            for (bit, &pos) in free_positions.iter().enumerate() {
                if (mask >> bit) & 1 == 1 {
                    cand = cand.add(&GF2Poly::monomial(pos));
                }
            }
            if cand.is_irreducible() {
                pattern_irreducibles.push(cand);
            }
        }
        let key = |p: &GF2Poly| p.to_string_in("x");
        let mut lhs: Vec<String> = factors
            .iter()
            .filter(|p| matches_pattern(p, m))
            .map(key)
            .collect();
        lhs.sort();
        let mut rhs: Vec<String> = pattern_irreducibles.iter().map(key).collect();
        rhs.sort();
        let all: Vec<String> = {
            let mut v: Vec<String> = factors.iter().map(key).collect();
            v.sort();
            v
        };
        let factors_exhaust_pattern = pattern_holds_for_all_factors && all == rhs;
        let _ = lhs;
        rows.push(PatternRow {
            m,
            factor_count: factors.len(),
            pattern_holds_for_all_factors,
            factors_exhaust_pattern,
        });
    }
    Ok(rows)
}
