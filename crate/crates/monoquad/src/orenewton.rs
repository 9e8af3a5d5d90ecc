//! First-level Ore/Montes engine over ℚ: φ-adic developments, principal
//! φ-polygons, residual polynomials, the φ-index, and the three-dissection
//! factorization shape when every residual polynomial is separable.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::dedekind::{lift_to_int, reduce_mod_p, reduce_monic_mod_p};
use crate::ffpoly::{FqField, FqPoly};
use crate::intpoly::{IntPoly, MonicIntPoly};
use crate::splitting::{ShapeEntry, SplittingShape};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OreError {
    #[error("phi is not irreducible modulo {p}")]
    PhiNotIrreducibleModP { p: u64 },
}

/// v_p of an integer; None encodes ∞ for zero input.
fn vp_int(n: &BigInt, p: u64) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let pb = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&n, &pb);
        if !r.is_zero() {
            return Some(v);
        }
        n = q;
        v += 1;
    }
}

/// v_p of a polynomial: the minimum over its coefficient valuations.
fn vp_poly(a: &IntPoly, p: u64) -> Option<u64> {
    a.coeffs().iter().filter_map(|c| vp_int(c, p)).min()
}

/// The φ-adic development f = Σ aᵢ·φⁱ with deg aᵢ < deg φ.
#[derive(Debug, Clone)]
pub struct PhiDevelopment {
    pub p: u64,
    pub phi: MonicIntPoly,
    /// aᵢ, lowest index first.
    pub terms: Vec<IntPoly>,
    /// vₚ(aᵢ); None is ∞ (the zero polynomial).
    pub valuations: Vec<Option<u64>>,
}

pub fn develop(f: &MonicIntPoly, phi: &MonicIntPoly, p: u64) -> Result<PhiDevelopment, OreError> {
    let phibar = reduce_monic_mod_p(phi, p);
    if !(phibar.degree() == Some(phi.degree()) && phibar.is_irreducible()) {
        return Err(OreError::PhiNotIrreducibleModP { p });
    }
    let phip = phi.to_intpoly();
    let mut rest = f.to_intpoly();
    let mut terms = Vec::new();
    while !rest.is_zero() {
        let (q, r) = rest.divrem_monic(&phip);
        terms.push(r);
        rest = q;
    }
    let valuations = terms.iter().map(|a| vp_poly(a, p)).collect();
    Ok(PhiDevelopment {
        p,
        phi: phi.clone(),
        terms,
        valuations,
    })
}

impl PhiDevelopment {
    /// Re-expand Σ aᵢ·φⁱ; used by tests to confirm the development is exact.
    pub fn reconstruct(&self) -> IntPoly {
        let phip = self.phi.to_intpoly();
        let mut acc = IntPoly::zero();
        for a in self.terms.iter().rev() {
            acc = acc.mul(&phip).add(a);
        }
        acc
    }
}

/// A side of the principal φ-polygon, slope −h/e in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonSide {
    pub start: (usize, u64),
    pub end: (usize, u64),
    pub h: u64,
    pub e: u64,
}

impl PolygonSide {
    pub fn length(&self) -> usize {
        self.end.0 - self.start.0
    }

    pub fn degree(&self) -> usize {
        self.length() / self.e as usize
    }
}

/// The principal φ-polygon: negative-slope part of the lower convex hull of
/// the points (i, vₚ(aᵢ)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub points: Vec<(usize, u64)>,
    pub sides: Vec<PolygonSide>,
}

pub fn principal_polygon(dev: &PhiDevelopment) -> NewtonPolygon {
    let points: Vec<(usize, u64)> = dev
        .valuations
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.map(|v| (i, v)))
        .collect();
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &(x, y) in &points {
        let pt = (x as i64, y as i64);
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (b.0 - a.0) * (pt.1 - a.1) - (b.1 - a.1) * (pt.0 - a.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let mut sides = Vec::new();
    for w in hull.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b.1 >= a.1 {
            break; // slopes increase; non-negative slope ends the principal part
        }
        let dy = (a.1 - b.1) as u64;
        let dx = (b.0 - a.0) as u64;
        let g = num_integer::Integer::gcd(&dy, &dx);
        sides.push(PolygonSide {
            start: (a.0 as usize, a.1 as u64),
            end: (b.0 as usize, b.1 as u64),
            h: dy / g,
            e: dx / g,
        });
    }
    NewtonPolygon { points, sides }
}

/// Count of lattice points (i, y) with i ≥ 1, y ≥ 1, lying on or below the
/// principal polygon and strictly left of its terminal abscissa.
pub fn ind_phi(polygon: &NewtonPolygon) -> u64 {
    let mut total: u64 = 0;
    for side in &polygon.sides {
        let (xs, ys) = (side.start.0 as i64, side.start.1 as i64);
        let xe = side.end.0 as i64;
        let (h, e) = (side.h as i64, side.e as i64);
        for i in xs.max(1)..xe {
            // height of the side at abscissa i: ys - h (i - xs) / e
            let floor = (ys * e - h * (i - xs)).div_euclid(e);
            if floor >= 1 {
                total += floor as u64;
            }
        }
    }
    total
}

/// The residual polynomial R_S(y) over k_{p,φ} attached to a polygon side.
#[derive(Debug, Clone)]
pub struct ResidualPoly {
    pub side: PolygonSide,
    pub poly: FqPoly,
}

pub fn residual_polynomial(dev: &PhiDevelopment, side: &PolygonSide) -> ResidualPoly {
    let field = FqField::new(reduce_monic_mod_p(&dev.phi, dev.p));
    let (s, ys) = (side.start.0, side.start.1 as i64);
    let (h, e) = (side.h as i64, side.e as i64);
    let d = side.degree();
    let mut coeffs = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let i = s + j * e as usize;
        let c = match dev.valuations[i] {
            None => field.zero(),
            Some(v) => {
                let on_side = (v as i64) * e == ys * e - h * ((i - s) as i64);
                if on_side {
                    let divided = dev.terms[i].div_exact_scalar(&BigInt::from(dev.p).pow(v as u32));
                    field.elem(reduce_mod_p(&divided, dev.p))
                } else {
                    field.zero()
                }
            }
        };
        coeffs.push(c);
    }
    ResidualPoly {
        side: side.clone(),
        poly: FqPoly::new(field, coeffs),
    }
}

/// Per-φ data collected by `ore_analyze`.
#[derive(Debug, Clone)]
pub struct PhiAnalysis {
    pub phi: MonicIntPoly,
    pub multiplicity: u32,
    pub polygon: NewtonPolygon,
    pub residuals: Vec<ResidualPoly>,
    pub all_separable: bool,
    pub ind: u64,
}

#[derive(Debug, Clone)]
pub struct OreReport {
    pub p: u64,
    pub per_phi: Vec<PhiAnalysis>,
    /// Σ ind_φᵢ(f); a lower bound on v_p of the index, exact when `exact`.
    pub index_lower_bound: u64,
    pub exact: bool,
    pub p_maximal: bool,
    pub shape: Option<SplittingShape>,
    pub shape_unknown_reason: Option<String>,
}

/// First-level Ore analysis of a monic polynomial the caller certifies to be
/// irreducible over ℚ.
pub fn ore_analyze(f: &MonicIntPoly, p: u64) -> OreReport {
    let fbar = reduce_monic_mod_p(f, p);
    let mut rng = ChaCha8Rng::seed_from_u64(FACTOR_SEED);
    let factors = fbar.factor(&mut rng);
    let mut per_phi = Vec::new();
    let mut index_lower_bound = 0u64;
    let mut exact = true;
    let mut entries: Vec<ShapeEntry> = Vec::new();
    for (phibar, mult) in factors {
        let phi = MonicIntPoly::from_intpoly(&lift_to_int(&phibar));
        let dev = develop(f, &phi, p).expect("lift of an irreducible factor");
        let polygon = principal_polygon(&dev);
        let ind = ind_phi(&polygon);
        index_lower_bound += ind;
        let mut residuals = Vec::new();
        let mut all_separable = true;
        if polygon.sides.is_empty() {
            // f = φ exactly: a single unramified prime of full residue degree
            entries.push(ShapeEntry {
                e: 1,
                f: phi.degree(),
                count: 1,
            });
        }
        for side in &polygon.sides {
            let res = residual_polynomial(&dev, side);
            let separable = res.poly.is_separable();
            if separable {
                for (dg, count) in res.poly.irreducible_degree_counts() {
                    entries.push(ShapeEntry {
                        e: side.e,
                        f: dg * phi.degree(),
                        count,
                    });
                }
            } else {
                all_separable = false;
                exact = false;
            }
            residuals.push(res);
        }
        per_phi.push(PhiAnalysis {
            phi,
            multiplicity: mult,
            polygon,
            residuals,
            all_separable,
            ind,
        });
    }
    let (shape, shape_unknown_reason) = if exact {
        (Some(SplittingShape::from_entries(entries)), None)
    } else {
        (None, Some("requires further dissection".to_string()))
    };
    OreReport {
        p,
        per_phi,
        index_lower_bound,
        exact,
        p_maximal: index_lower_bound == 0,
        shape,
        shape_unknown_reason,
    }
}

// fixed seed: the mod-p factorization inside ore_analyze must be reproducible
/// Fixed seed for the randomized factorization steps: results are reproducible.
pub const FACTOR_SEED: u64 = 0x6d6f_6e6f_7175_6164;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dedekind::dedekind_p_maximal;
    use crate::intpoly::{is_perfect_square, QuadParams};
    use num_bigint::BigInt;
    use num_traits::Zero;

    fn monic(non_leading: &[i64]) -> MonicIntPoly {
        MonicIntPoly::from_coeffs(non_leading.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn develop_quadratic_shift() {
        // f = x^2 + bx + c at φ = x + bt, 2t ≡ 1 mod p^2:
        // terms (b²t² − b²t + c, b − 2bt, 1)
        let (b, c, p) = (3i64, 9i64, 3u64);
        let t = 5i64; // 2·5 = 10 ≡ 1 mod 9
        let f = monic(&[c, b]);
        let phi = monic(&[b * t]);
        let dev = develop(&f, &phi, p).unwrap();
        assert_eq!(dev.terms.len(), 3);
        assert_eq!(dev.terms[0].coeff(0), BigInt::from(b * b * t * t - b * b * t + c));
        assert_eq!(dev.terms[1].coeff(0), BigInt::from(b - 2 * b * t));
        assert_eq!(dev.terms[2].coeff(0), BigInt::from(1));
        assert_eq!(dev.reconstruct(), f.to_intpoly());
    }

    #[test]
    fn develop_f_equals_phi() {
        let f = monic(&[1, 1]);
        let dev = develop(&f, &f, 2).unwrap();
        assert!(dev.terms[0].is_zero());
        assert_eq!(dev.terms[1].coeff(0), BigInt::from(1));
        assert_eq!(dev.valuations, vec![None, Some(0)]);
    }

    #[test]
    fn develop_quartic_at_x() {
        let f = monic(&[2, 0, -4, 0]); // x^4 - 4x^2 + 2
        let dev = develop(&f, &MonicIntPoly::x(), 2).unwrap();
        assert_eq!(dev.valuations, vec![Some(1), None, Some(2), None, Some(0)]);
    }

    #[test]
    fn develop_rejects_reducible_phi() {
        let f = monic(&[2, 0]);
        let phi = monic(&[1, 0]); // x^2 + 1 = (x+1)^2 mod 2
        assert!(matches!(
            develop(&f, &phi, 2),
            Err(OreError::PhiNotIrreducibleModP { p: 2 })
        ));
    }

    #[test]
    fn polygon_x2_minus_2() {
        let dev = develop(&monic(&[-2, 0]), &MonicIntPoly::x(), 2).unwrap();
        let poly = principal_polygon(&dev);
        assert_eq!(poly.sides.len(), 1);
        let s = &poly.sides[0];
        assert_eq!((s.start, s.end), (((0, 1)), ((2, 0))));
        assert_eq!((s.h, s.e), (1, 2));
        assert_eq!(ind_phi(&poly), 0);
    }

    #[test]
    fn polygon_quartic_eisenstein_like() {
        let dev = develop(&monic(&[2, 0, -4, 0]), &MonicIntPoly::x(), 2).unwrap();
        let poly = principal_polygon(&dev);
        assert_eq!(poly.sides.len(), 1);
        let s = &poly.sides[0];
        assert_eq!((s.start, s.end), ((0, 1), (4, 0)));
        assert_eq!((s.h, s.e), (1, 4));
        assert_eq!(ind_phi(&poly), 0);
    }

    #[test]
    fn empty_principal_polygon_when_unit_constant_term() {
        // v_p(a_0) = 0: no negative-slope side below height zero... the hull
        // from (0,0) onward has no descending side.
        let dev = develop(&monic(&[1, 1]), &MonicIntPoly::x(), 3).unwrap();
        let poly = principal_polygon(&dev);
        assert!(poly.sides.is_empty());
        assert_eq!(ind_phi(&poly), 0);
    }

    #[test]
    fn nonmaximal_quadratic_has_positive_index() {
        // a0 ≡ a1 ≡ 0 mod p²: ind ≥ 1
        let dev = develop(&monic(&[9, 9]), &MonicIntPoly::x(), 3).unwrap();
        let poly = principal_polygon(&dev);
        assert!(ind_phi(&poly) >= 1);
    }

    #[test]
    fn residual_poly_x2_minus_2() {
        let dev = develop(&monic(&[-2, 0]), &MonicIntPoly::x(), 2).unwrap();
        let poly = principal_polygon(&dev);
        let r = residual_polynomial(&dev, &poly.sides[0]);
        // R(y) = y + 1 over GF(2)
        assert_eq!(r.poly.degree(), Some(1));
        assert!(!r.poly.coeff(0).is_zero());
        assert!(!r.poly.coeff(1).is_zero());
        assert!(r.poly.is_separable());
    }

    #[test]
    fn residual_poly_collinear_side() {
        // x^4 + 2x^2 + 4 at φ = x, p = 2: (0,2), (2,1), (4,0) are collinear,
        // one side of slope -1/2 and degree 2, R(y) = y² + y + 1
        let dev = develop(&monic(&[4, 0, 2, 0]), &MonicIntPoly::x(), 2).unwrap();
        let poly = principal_polygon(&dev);
        assert_eq!(poly.sides.len(), 1);
        let side = &poly.sides[0];
        assert_eq!((side.h, side.e), (1, 2));
        assert_eq!(side.degree(), 2);
        let r = residual_polynomial(&dev, side);
        assert_eq!(r.poly.degree(), Some(2));
        assert!(!r.poly.coeff(0).is_zero());
        assert!(!r.poly.coeff(1).is_zero());
        assert!(r.poly.is_separable());
    }

    #[test]
    fn residual_poly_two_sides() {
        // x^4 + 2x^2 + 8 at φ = x, p = 2: hull (0,3)→(2,1)→(4,0), two sides
        let dev = develop(&monic(&[8, 0, 2, 0]), &MonicIntPoly::x(), 2).unwrap();
        let poly = principal_polygon(&dev);
        assert_eq!(poly.sides.len(), 2);
        for side in &poly.sides {
            let r = residual_polynomial(&dev, side);
            assert_eq!(r.poly.degree(), Some(side.degree() as usize));
        }
    }

    #[test]
    fn ore_x2_minus_2_at_2() {
        let report = ore_analyze(&monic(&[-2, 0]), 2);
        assert!(report.p_maximal);
        let shape = report.shape.unwrap();
        assert_eq!(shape.degree_multiset(), vec![1]);
        assert_eq!(shape.entries()[0].e, 2);
    }

    #[test]
    fn ore_x2_3x_9_at_3() {
        let report = ore_analyze(&monic(&[9, 3]), 3);
        assert!(!report.p_maximal);
        assert!(report.index_lower_bound >= 1);
    }

    #[test]
    fn ore_unramified_quadratic_at_5() {
        let report = ore_analyze(&monic(&[1, -1]), 5);
        assert!(report.p_maximal);
        let shape = report.shape.unwrap();
        let total: usize = shape
            .entries()
            .iter()
            .map(|en| en.e as usize * en.f * en.count)
            .sum();
        assert_eq!(total, 2);
        assert!(shape.entries().iter().all(|en| en.e == 1));
    }

    #[test]
    fn reconstruction_random_cases() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let primes = [2u64, 3, 5, 7, 13];
        let mut done = 0;
        while done < 500 {
            let p = primes[rng.gen_range(0..primes.len())];
            let deg = rng.gen_range(2..=6usize);
            let coeffs: Vec<BigInt> = (0..deg).map(|_| BigInt::from(rng.gen_range(-50i64..=50))).collect();
            let f = MonicIntPoly::from_coeffs(coeffs);
            let fbar = reduce_monic_mod_p(&f, p);
            let mut frng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
            let factors = fbar.factor(&mut frng);
            if factors.is_empty() {
                continue;
            }
            let phibar = &factors[0].0;
            let phi = MonicIntPoly::from_intpoly(&lift_to_int(phibar));
            let dev = develop(&f, &phi, p).unwrap();
            assert_eq!(dev.reconstruct(), f.to_intpoly());
            for (a, _) in dev.terms.iter().zip(&dev.valuations) {
                assert!(a.degree().map_or(true, |d| d < phi.degree()));
            }
            done += 1;
        }
    }

    #[test]
    fn no_index_at_squarefree_primes() {
        // v_p(Disc f) ≤ 1 implies ind_φ = 0 for every φ
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let primes = [2u64, 3, 5, 7];
        for _ in 0..200 {
            let p = primes[rng.gen_range(0..primes.len())];
            let deg = rng.gen_range(2..=5usize);
            let coeffs: Vec<BigInt> = (0..deg).map(|_| BigInt::from(rng.gen_range(-30i64..=30))).collect();
            let f = MonicIntPoly::from_coeffs(coeffs);
            let disc = crate::intpoly::discriminant(&f);
            if disc.is_zero() {
                continue;
            }
            let p2 = BigInt::from(p * p);
            if (&disc % &p2).is_zero() {
                continue;
            }
            let report = ore_analyze(&f, p);
            assert_eq!(report.index_lower_bound, 0, "f = {:?}, p = {}", f, p);
        }
    }

    #[test]
    fn quadratic_agreement_with_dedekind_and_lemma_3_1() {
        for p in [3u64, 5, 7, 11, 13] {
            for b in -20i64..=20 {
                for c in -20i64..=20 {
                    let q = QuadParams::new(b, c);
                    if is_perfect_square(&q.disc()) {
                        continue;
                    }
                    let f = q.poly();
                    let ore = ore_analyze(&f, p);
                    let lemma = !(q.disc() % BigInt::from(p * p)).is_zero();
                    let ded = dedekind_p_maximal(&f, p).unwrap().p_maximal;
                    assert_eq!(ore.p_maximal, lemma, "Lemma 3.1 at b={} c={} p={}", b, c, p);
                    assert_eq!(ore.p_maximal, ded, "Dedekind at b={} c={} p={}", b, c, p);
                }
            }
        }
    }

    #[test]
    fn quadratic_agreement_at_2() {
        // Lemma 3.2 over ℚ (h = 1): 2-maximal iff 2∤b or c² − bc + c ≢ 0 mod 4
        for b in -20i64..=20 {
            for c in -20i64..=20 {
                let q = QuadParams::new(b, c);
                if is_perfect_square(&q.disc()) {
                    continue;
                }
                let f = q.poly();
                let ore = ore_analyze(&f, 2);
                let lemma = b % 2 != 0 || (c * c - b * c + c).rem_euclid(4) != 0;
                let ded = dedekind_p_maximal(&f, 2).unwrap().p_maximal;
                assert_eq!(ore.p_maximal, lemma, "Lemma 3.2 at b={} c={}", b, c);
                assert_eq!(ore.p_maximal, ded, "Dedekind at b={} c={}", b, c);
            }
        }
    }

    #[test]
    fn shape_degrees_sum_when_exact() {
        for (b, c, p) in [(0i64, -2i64, 2u64), (1, 1, 3), (-1, 2, 7), (3, -5, 5)] {
            let q = QuadParams::new(b, c);
            for n in 1..=3u32 {
                let f = crate::intpoly::iterate(q, n, crate::intpoly::DEFAULT_MAX_BITS).unwrap();
                let report = ore_analyze(&f, p);
                if let Some(shape) = report.shape {
                    let total: usize = shape
                        .entries()
                        .iter()
                        .map(|en| en.e as usize * en.f * en.count)
                        .sum();
                    assert_eq!(total, f.degree());
                }
            }
        }
    }
}
