//! Bit-packed polynomials over GF(2): bit i of the backing words is the
//! coefficient of x^i. Fast enough to iterate and factor polynomials of
//! degree in the tens of thousands.

use rand::Rng;
use thiserror::Error;

/// Degree cap for GF(2) self-composition.
pub const GF2_DEGREE_CAP: usize = 1 << 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("GF(2) degree cap exceeded: {degree} > {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GF2Poly {
    words: Vec<u64>,
}

impl GF2Poly {
    pub fn zero() -> Self {
        GF2Poly { words: vec![] }
    }

    pub fn one() -> Self {
        GF2Poly { words: vec![1] }
    }

    pub fn x() -> Self {
        GF2Poly { words: vec![2] }
    }

    /// x^2 + x + 1, the unique irreducible quadratic.
    pub fn f_quadratic() -> Self {
        GF2Poly { words: vec![0b111] }
    }

    /// x^2 + x.
    pub fn g_quadratic() -> Self {
        GF2Poly { words: vec![0b110] }
    }

    pub fn from_coeff_bits(bits: &[bool]) -> Self {
        let mut words = vec![0u64; (bits.len() + 63) / 64];
        for (i, &b) in bits.iter().enumerate() {
            if b {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        let mut p = GF2Poly { words };
        p.trim();
        p
    }

    /// Exponents of the nonzero terms, e.g. [0, 1, 2] for x^2 + x + 1.
    pub fn from_support(support: &[usize]) -> Self {
        let mut p = GF2Poly::zero();
        for &i in support {
            p.set_bit(i);
        }
        p
    }

    pub fn monomial(deg: usize) -> Self {
        let mut p = GF2Poly::zero();
        p.set_bit(deg);
        p
    }

    fn set_bit(&mut self, i: usize) {
        let w = i / 64;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] ^= 1 << (i % 64);
        self.trim();
    }

    pub fn bit(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .map_or(false, |w| (w >> (i % 64)) & 1 == 1)
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + (63 - last.leading_zeros() as usize))
    }

    pub fn add(&self, other: &GF2Poly) -> GF2Poly {
        let n = self.words.len().max(other.words.len());
        let mut out = vec![0u64; n];
        for (i, w) in out.iter_mut().enumerate() {
            *w = self.words.get(i).copied().unwrap_or(0) ^ other.words.get(i).copied().unwrap_or(0);
        }
        let mut p = GF2Poly { words: out };
        p.trim();
        p
    }

    fn shl(&self, k: usize) -> GF2Poly {
        if self.is_zero() {
            return GF2Poly::zero();
        }
        let word_shift = k / 64;
        let bit_shift = k % 64;
        let mut out = vec![0u64; self.words.len() + word_shift + 1];
        for (i, &w) in self.words.iter().enumerate() {
            out[i + word_shift] |= w << bit_shift;
            if bit_shift > 0 {
                out[i + word_shift + 1] |= w >> (64 - bit_shift);
            }
        }
        let mut p = GF2Poly { words: out };
        p.trim();
        p
    }

    pub fn mul(&self, other: &GF2Poly) -> GF2Poly {
        if self.is_zero() || other.is_zero() {
            return GF2Poly::zero();
        }
        let (short, long) = if self.words.len() <= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = GF2Poly::zero();
        for (wi, &w) in short.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                acc = acc.add(&long.shl(wi * 64 + b));
                bits &= bits - 1;
            }
        }
        acc
    }

    /// Squaring by bit spreading; linear in the word count.
    pub fn square(&self) -> GF2Poly {
        fn spread(x: u32) -> u64 {
            let mut y = x as u64;
            y = (y | (y << 16)) & 0x0000_FFFF_0000_FFFF;
            y = (y | (y << 8)) & 0x00FF_00FF_00FF_00FF;
            y = (y | (y << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
            y = (y | (y << 2)) & 0x3333_3333_3333_3333;
            y = (y | (y << 1)) & 0x5555_5555_5555_5555;
            y
        }
        let mut out = Vec::with_capacity(self.words.len() * 2);
        for &w in &self.words {
            out.push(spread(w as u32));
            out.push(spread((w >> 32) as u32));
        }
        let mut p = GF2Poly { words: out };
        p.trim();
        p
    }

    pub fn divrem(&self, divisor: &GF2Poly) -> (GF2Poly, GF2Poly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = GF2Poly::zero();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let shift = dr - dd;
            rem = rem.add(&divisor.shl(shift));
            quot.set_bit(shift);
        }
        (quot, rem)
    }

    pub fn rem(&self, divisor: &GF2Poly) -> GF2Poly {
        self.divrem(divisor).1
    }

    pub fn div_exact(&self, divisor: &GF2Poly) -> GF2Poly {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "inexact GF(2) division");
        q
    }

    pub fn gcd(&self, other: &GF2Poly) -> GF2Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// self(g), by Horner over the coefficient bits.
    pub fn compose(&self, g: &GF2Poly) -> GF2Poly {
        let d = match self.degree() {
            None => return GF2Poly::zero(),
            Some(d) => d,
        };
        let mut acc = GF2Poly::one();
        for i in (0..d).rev() {
            acc = acc.mul(g);
            if self.bit(i) {
                acc = acc.add(&GF2Poly::one());
            }
        }
        acc
    }

    pub fn derivative(&self) -> GF2Poly {
        let mut bits = Vec::new();
        if let Some(d) = self.degree() {
            for i in 0..d {
                bits.push(self.bit(i + 1) && i % 2 == 0);
            }
        }
        GF2Poly::from_coeff_bits(&bits)
    }

    /// Square root of a polynomial lying in GF(2)[x^2].
    fn sqrt(&self) -> GF2Poly {
        let d = self.degree().unwrap_or(0);
        let mut bits = vec![false; d / 2 + 1];
        for (i, b) in bits.iter_mut().enumerate() {
            *b = self.bit(2 * i);
            assert!(!self.bit(2 * i + 1), "polynomial is not a square");
        }
        GF2Poly::from_coeff_bits(&bits)
    }

    pub fn squarefree_decomposition(&self) -> Vec<(GF2Poly, u32)> {
        assert!(!self.is_zero());
        let mut result: Vec<(GF2Poly, u32)> = Vec::new();
        let mut f = self.clone();
        let mut e: u32 = 1;
        while !f.is_one() {
            let fp = f.derivative();
            if fp.is_zero() {
                f = f.sqrt();
                e *= 2;
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
            f = t.sqrt();
            e *= 2;
        }
        result.sort_by_key(|(g, e)| (g.degree(), g.words.clone(), *e));
        result
    }

    /// Distinct-degree splitting of a squarefree polynomial.
    pub fn distinct_degree_split(&self) -> Vec<(usize, GF2Poly)> {
        let mut f = self.clone();
        let mut out = Vec::new();
        let x = GF2Poly::x();
        let mut h = x.rem(&f);
        let mut d = 0usize;
        while f.degree().unwrap_or(0) > 0 {
            d += 1;
            if 2 * d > f.degree().unwrap() {
                out.push((f.degree().unwrap(), f.clone()));
                break;
            }
            h = h.square().rem(&f);
            let g = h.add(&x).gcd(&f);
            if !g.is_one() {
                out.push((d, g.clone()));
                f = f.div_exact(&g);
                h = h.rem(&f);
            }
        }
        out
    }

    /// Equal-degree splitting via the characteristic-2 trace map.
    pub fn equal_degree_split<R: Rng>(&self, d: usize, rng: &mut R) -> Vec<GF2Poly> {
        let n = self.degree().expect("nonzero polynomial");
        if n == d {
            return vec![self.clone()];
        }
        loop {
            let bits: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
            let a = GF2Poly::from_coeff_bits(&bits);
            if a.is_zero() || a.is_one() {
                continue;
            }
            let mut trace = a.rem(self);
            let mut term = trace.clone();
            for _ in 1..d {
                term = term.square().rem(self);
                trace = trace.add(&term);
            }
            let g = trace.gcd(self);
            if !g.is_one() && g.degree() != Some(n) {
                let rest = self.div_exact(&g);
                let mut out = g.equal_degree_split(d, rng);
                out.extend(rest.equal_degree_split(d, rng));
                return out;
            }
        }
    }

    /// Full factorization, sorted by (degree, coefficient bits).
    pub fn factor<R: Rng>(&self, rng: &mut R) -> Vec<(GF2Poly, u32)> {
        assert!(!self.is_zero());
        if self.is_one() {
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
        out.sort_by_key(|(g, e)| (g.degree(), g.words.clone(), *e));
        out
    }

    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(n) => n,
        };
        if n == 1 {
            return true;
        }
        let x = GF2Poly::x().rem(self);
        let mut powers = vec![x.clone()];
        let mut frob = x.clone();
        for _ in 0..n {
            frob = frob.square().rem(self);
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
        prime_divs
            .into_iter()
            .all(|r| powers[n / r].add(&x).gcd(self).is_one())
    }

    pub fn to_string_in(&self, var: &str) -> String {
        let d = match self.degree() {
            None => return "0".to_string(),
            Some(d) => d,
        };
        let mut parts = Vec::new();
        for i in (0..=d).rev() {
            if self.bit(i) {
                parts.push(match i {
                    0 => "1".to_string(),
                    1 => var.to_string(),
                    _ => format!("{}^{}", var, i),
                });
            }
        }
        parts.join(" + ")
    }
}

/// n-fold self-composition of P in GF(2)[x]. Quadratics take the fast path
/// through the linearity of squaring.
pub fn gf2_iterate(poly: &GF2Poly, n: u32) -> Result<GF2Poly, Gf2Error> {
    let mut acc = GF2Poly::x();
    for _ in 0..n {
        acc = if poly.degree() == Some(2) {
            let mut next = acc.square();
            if poly.bit(1) {
                next = next.add(&acc);
            }
            if poly.bit(0) {
                next = next.add(&GF2Poly::one());
            }
            next
        } else {
            poly.compose(&acc)
        };
        if let Some(d) = acc.degree() {
            if d > GF2_DEGREE_CAP {
                return Err(Gf2Error::DegreeCapExceeded {
                    degree: d,
                    cap: GF2_DEGREE_CAP,
                });
            }
        }
    }
    Ok(acc)
}
