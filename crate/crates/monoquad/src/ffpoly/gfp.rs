//! Dense polynomials over GF(p) for word-sized primes p, with full
//! factorization: squarefree decomposition, distinct-degree splitting, and
//! Cantor–Zassenhaus equal-degree splitting (trace-map variant at p = 2).

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FfError {
    #[error("division by zero in GF({p})[x]")]
    DivisionByZero { p: u64 },
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod_scalar(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    powmod_scalar(a, p - 2, p)
}

/// Polynomial over GF(p), coefficients in [0, p) lowest degree first,
/// leading coefficient nonzero unless the polynomial is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GFpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl GFpPoly {
    pub fn new(p: u64, coeffs: Vec<i128>) -> Self {
        let reduced = coeffs
            .into_iter()
            .map(|c| c.rem_euclid(p as i128) as u64)
            .collect();
        GFpPoly::from_reduced(p, reduced)
    }

    pub fn from_reduced(p: u64, mut coeffs: Vec<u64>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < p));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        GFpPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        GFpPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        GFpPoly { p, coeffs: vec![1] }
    }

    pub fn x(p: u64) -> Self {
        GFpPoly {
            p,
            coeffs: vec![0, 1],
        }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        GFpPoly::from_reduced(p, vec![c % p])
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn add(&self, other: &GFpPoly) -> GFpPoly {
        assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push((self.coeff(i) + other.coeff(i)) % self.p);
        }
        GFpPoly::from_reduced(self.p, out)
    }

    pub fn sub(&self, other: &GFpPoly) -> GFpPoly {
        assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push((self.coeff(i) + self.p - other.coeff(i)) % self.p);
        }
        GFpPoly::from_reduced(self.p, out)
    }

    pub fn mul(&self, other: &GFpPoly) -> GFpPoly {
        assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return GFpPoly::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = ((out[i + j] as u128 + a as u128 * b as u128) % self.p as u128) as u64;
            }
        }
        GFpPoly::from_reduced(self.p, out)
    }

    pub fn mul_scalar(&self, k: u64) -> GFpPoly {
        let k = k % self.p;
        GFpPoly::from_reduced(
            self.p,
            self.coeffs.iter().map(|&c| mulmod(c, k, self.p)).collect(),
        )
    }

    pub fn monic(&self) -> GFpPoly {
        let l = self.leading();
        if l == 0 || l == 1 {
            self.clone()
        } else {
            self.mul_scalar(invmod(l, self.p))
        }
    }

    pub fn divrem(&self, divisor: &GFpPoly) -> (GFpPoly, GFpPoly) {
        assert_eq!(self.p, divisor.p);
        let d = divisor.degree().expect("division by zero polynomial");
        let inv_l = invmod(divisor.leading(), self.p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (GFpPoly::zero(self.p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - d];
        for i in (d..rem.len()).rev() {
            let q = mulmod(rem[i], inv_l, self.p);
            if q != 0 {
                for (j, &b) in divisor.coeffs.iter().enumerate() {
                    let sub = mulmod(q, b, self.p);
                    rem[i - d + j] = (rem[i - d + j] + self.p - sub) % self.p;
                }
            }
            quot[i - d] = q;
        }
        rem.truncate(d);
        (
            GFpPoly::from_reduced(self.p, quot),
            GFpPoly::from_reduced(self.p, rem),
        )
    }

    pub fn rem(&self, divisor: &GFpPoly) -> GFpPoly {
        self.divrem(divisor).1
    }

    pub fn div_exact(&self, divisor: &GFpPoly) -> GFpPoly {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &GFpPoly) -> GFpPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> GFpPoly {
        if self.coeffs.len() <= 1 {
            return GFpPoly::zero(self.p);
        }
        GFpPoly::from_reduced(
            self.p,
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| mulmod(c, ((i + 1) as u64) % self.p, self.p))
                .collect(),
        )
    }

    pub fn eval(&self, x: u64) -> u64 {
        let x = x % self.p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mulmod(acc, x, self.p) + c) % self.p;
        }
        acc
    }

    pub fn pow_mod(&self, exp: &BigUint, modulus: &GFpPoly) -> GFpPoly {
        let mut base = self.rem(modulus);
        let mut acc = GFpPoly::one(self.p);
        let mut e = exp.clone();
        let two = BigUint::from(2u32);
        while !e.is_zero() {
            if (&e % &two).is_one() {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    fn pow_mod_u64(&self, exp: u64, modulus: &GFpPoly) -> GFpPoly {
        self.pow_mod(&BigUint::from(exp), modulus)
    }

    /// p-th root of a polynomial lying in GF(p)[x^p]; over the prime field the
    /// coefficient map is the identity.
    fn pth_root(&self) -> GFpPoly {
        let p = self.p as usize;
        let mut out = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i % p == 0 {
                out.push(c);
            } else {
                assert_eq!(c, 0, "polynomial is not a p-th power");
            }
        }
        GFpPoly::from_reduced(self.p, out)
    }

    /// Squarefree decomposition of a nonzero polynomial: pairs (gᵢ, eᵢ) with
    /// gᵢ monic squarefree, pairwise coprime, and Π gᵢ^eᵢ = self / lc.
    pub fn squarefree_decomposition(&self) -> Vec<(GFpPoly, u32)> {
        assert!(!self.is_zero());
        let mut result: Vec<(GFpPoly, u32)> = Vec::new();
        let mut f = self.monic();
        let mut e: u32 = 1;
        while !f.is_one() {
            let fp = f.derivative();
            if fp.is_zero() {
                f = f.pth_root();
                e *= self.p as u32;
                continue;
            }
            let mut t = f.gcd(&fp);
            let mut w = f.div_exact(&t);
            let mut i: u32 = 1;
            while !w.is_one() {
                let y = w.gcd(&t);
                let z = w.div_exact(&y);
                if !z.is_one() {
                    result.push((z, i * e));
                }
                t = t.div_exact(&y);
                w = y;
                i += 1;
            }
            if t.is_one() {
                break;
            }
            f = t.pth_root();
            e *= self.p as u32;
        }
        result.sort();
        result
    }

    /// Distinct-degree splitting of a monic squarefree polynomial: pairs
    /// (d, product of all monic irreducible factors of degree d).
    pub fn distinct_degree_split(&self) -> Vec<(usize, GFpPoly)> {
        let mut f = self.monic();
        let mut out = Vec::new();
        let x = GFpPoly::x(self.p);
        let mut h = x.rem(&f);
        let mut d = 0usize;
        while f.degree().unwrap_or(0) > 0 {
            d += 1;
            if 2 * d > f.degree().unwrap() {
                out.push((f.degree().unwrap(), f.clone()));
                break;
            }
            h = h.pow_mod_u64(self.p, &f);
            let g = h.sub(&x).gcd(&f);
            if !g.is_one() {
                out.push((d, g.clone()));
                f = f.div_exact(&g);
                h = h.rem(&f);
            }
        }
        out
    }

    fn random_poly<R: Rng>(p: u64, deg_below: usize, rng: &mut R) -> GFpPoly {
        let coeffs: Vec<u64> = (0..deg_below).map(|_| rng.gen_range(0..p)).collect();
        GFpPoly::from_reduced(p, coeffs)
    }

    /// Equal-degree splitting: self is a monic squarefree product of
    /// irreducibles all of degree d.
    pub fn equal_degree_split<R: Rng>(&self, d: usize, rng: &mut R) -> Vec<GFpPoly> {
        let n = self.degree().expect("nonzero polynomial");
        if n == d {
            return vec![self.clone()];
        }
        loop {
            let a = GFpPoly::random_poly(self.p, n, rng);
            if a.is_constant() {
                continue;
            }
            let g0 = a.gcd(self);
            if !g0.is_one() && g0.degree() != Some(n) {
                let rest = self.div_exact(&g0);
                let mut out = g0.equal_degree_split(d, rng);
                out.extend(rest.equal_degree_split(d, rng));
                return out;
            }
            let b = if self.p == 2 {
                // trace map a + a^2 + ... + a^(2^(d-1)) mod self
                let mut acc = a.rem(self);
                let mut term = a.rem(self);
                for _ in 1..d {
                    term = term.mul(&term).rem(self);
                    acc = acc.add(&term);
                }
                acc
            } else {
                let exp = (BigUint::from(self.p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
                let one = GFpPoly::one(self.p);
                a.pow_mod(&exp, self).sub(&one)
            };
            let g = b.gcd(self);
            if !g.is_one() && g.degree() != Some(n) {
                let rest = self.div_exact(&g);
                let mut out = g.equal_degree_split(d, rng);
                out.extend(rest.equal_degree_split(d, rng));
                return out;
            }
        }
    }

    /// Full factorization into monic irreducibles with exponents, sorted by
    /// (degree, coefficient order). The unit leading coefficient is dropped.
    pub fn factor<R: Rng>(&self, rng: &mut R) -> Vec<(GFpPoly, u32)> {
        assert!(!self.is_zero());
        if self.is_constant() {
            return vec![];
        }
        let mut out = Vec::new();
        for (g, e) in self.squarefree_decomposition() {
            for (d, prod) in g.distinct_degree_split() {
                for irr in prod.equal_degree_split(d, rng) {
                    out.push((irr, e));
                }
            }
        }
        out.sort();
        out
    }

    /// Rabin irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(n) => n,
        };
        if n == 1 {
            return true;
        }
        let f = self.monic();
        let x = GFpPoly::x(self.p).rem(&f);
        // x^(p^k) mod f for k = 1..n, keeping the values we need
        let mut frob = x.clone();
        let mut powers = vec![x.clone()]; // powers[k] = x^(p^k), powers[0] = x
        for _ in 0..n {
            frob = frob.pow_mod_u64(self.p, &f);
            powers.push(frob.clone());
        }
        if powers[n] != x {
            return false;
        }
        let mut m = n;
        let mut prime_divs = Vec::new();
        let mut q = 2usize;
        while q * q <= m {
            if m % q == 0 {
                prime_divs.push(q);
                while m % q == 0 {
                    m /= q;
                }
            }
            q += 1;
        }
        if m > 1 {
            prime_divs.push(m);
        }
        for r in prime_divs {
            let g = powers[n / r].sub(&x).gcd(&f);
            if !g.is_one() {
                return false;
            }
        }
        true
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let term = match i {
                0 => format!("{}", c),
                1 => {
                    if c == 1 {
                        var.to_string()
                    } else {
                        format!("{}*{}", c, var)
                    }
                }
                _ => {
                    if c == 1 {
                        format!("{}^{}", var, i)
                    } else {
                        format!("{}*{}^{}", c, var, i)
                    }
                }
            };
            parts.push(term);
        }
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn poly(p: u64, c: &[i128]) -> GFpPoly {
        GFpPoly::new(p, c.to_vec())
    }

    #[test]
    fn factor_unique_irreducible_quadratic_gf2() {
        let f = poly(2, &[1, 1, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(f.factor(&mut rng), vec![(poly(2, &[1, 1, 1]), 1)]);
    }

    #[test]
    fn x4_x_1_irreducible_gf2() {
        let f = poly(2, &[1, 1, 0, 0, 1]);
        assert!(f.is_irreducible());
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(f.factor(&mut rng).len(), 1);
    }

    #[test]
    fn is_irreducible_examples() {
        assert!(poly(2, &[1, 1, 1]).is_irreducible());
        assert!(!poly(2, &[1, 0, 1]).is_irreducible()); // (x+1)^2
        // x^8 + x^6 + x^5 + x^3 + 1
        assert!(poly(2, &[1, 0, 0, 1, 0, 1, 1, 0, 1]).is_irreducible());
    }

    #[test]
    fn squarefree_decomposition_char_p() {
        // (x+1)^3 * x over GF(3): derivative subtleties at e = p
        let f = poly(3, &[0, 1]).mul(&poly(3, &[1, 1]).mul(&poly(3, &[1, 1])).mul(&poly(3, &[1, 1])));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![(poly(3, &[0, 1]), 1), (poly(3, &[1, 1]), 3)]);
    }

    #[test]
    fn factor_remultiplies_random_grid() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for &p in &[2u64, 3, 5, 7, 13] {
            for _ in 0..200 {
                let deg = rng.gen_range(1..=16);
                let mut coeffs: Vec<u64> = (0..=deg).map(|_| rng.gen_range(0..p)).collect();
                if *coeffs.last().unwrap() == 0 {
                    *coeffs.last_mut().unwrap() = 1;
                }
                let f = GFpPoly::from_reduced(p, coeffs);
                let factors = f.factor(&mut rng);
                let mut prod = GFpPoly::constant(p, f.leading());
                for (g, e) in &factors {
                    assert!(g.is_irreducible(), "non-irreducible factor {:?} of {:?}", g, f);
                    for _ in 0..*e {
                        prod = prod.mul(g);
                    }
                }
                assert_eq!(prod, f, "factorization does not remultiply for {:?}", f);
            }
        }
    }

    #[test]
    fn factor_is_deterministic_per_seed() {
        let f = poly(5, &[2, 0, 1, 3, 0, 0, 4, 1]);
        let a = f.factor(&mut ChaCha8Rng::seed_from_u64(7));
        let b = f.factor(&mut ChaCha8Rng::seed_from_u64(7));
        assert_eq!(a, b);
    }

    #[test]
    fn deep_squarefree_power_gf2() {
        // x^8 = (x)^8 over GF(2): repeated p-th root descent
        let mut f = GFpPoly::one(2);
        let x = GFpPoly::x(2);
        for _ in 0..8 {
            f = f.mul(&x);
        }
        assert_eq!(f.squarefree_decomposition(), vec![(x.clone(), 8)]);
    }
}
