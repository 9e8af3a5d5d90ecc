//! Exact arithmetic for integer polynomials: composition and iteration of
//! monic quadratics, resultants/discriminants via the subresultant PRS, and
//! evaluation at dyadic rationals.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntPolyError {
    #[error("coefficient exceeds {max_bits} bits ({bits} bits) during iteration")]
    CoefficientBlowup { bits: u64, max_bits: u64 },
}

/// Parameters of a monic quadratic x^2 + bx + c.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadParams {
    pub b: i64,
    pub c: i64,
}

impl QuadParams {
    pub fn new(b: i64, c: i64) -> Self {
        QuadParams { b, c }
    }

    /// b^2 - 4c.
    pub fn disc(&self) -> BigInt {
        let b = BigInt::from(self.b);
        let c = BigInt::from(self.c);
        &b * &b - 4 * c
    }

    pub fn poly(&self) -> MonicIntPoly {
        MonicIntPoly::from_coeffs(vec![BigInt::from(self.c), BigInt::from(self.b)])
    }
}

/// General dense integer polynomial, lowest degree first, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Division by a monic divisor; exact over the integers.
    pub fn divrem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        let d = divisor.degree().expect("divisor must be nonzero");
        assert!(divisor.leading().is_one(), "divisor must be monic");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (IntPoly::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let q = rem[i].clone();
            if !q.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[i - d + j] -= &q * b;
                }
            }
            quot[i - d] = q;
        }
        rem.truncate(d);
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// Exact division by an integer; panics if not exact.
    pub fn div_exact_scalar(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let (q, r) = num_integer::Integer::div_rem(c, k);
                    assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        )
    }

    /// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
    fn prem(&self, b: &IntPoly) -> IntPoly {
        let da = self.degree().expect("nonzero dividend");
        let db = b.degree().expect("nonzero divisor");
        assert!(da >= db);
        let lb = b.leading();
        let mut r = self.clone();
        let mut e = (da - db + 1) as u32;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading();
            let mut shifted = vec![BigInt::zero(); dr - db];
            shifted.extend(b.coeffs.iter().map(|c| c * &lr));
            r = r.scale(&lb).sub(&IntPoly::new(shifted));
            e -= 1;
        }
        // pad so that exactly lc(b)^(delta+1) has been applied
        if e > 0 && !r.is_zero() {
            r = r.scale(&lb.pow(e));
        }
        r
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let term = match i {
                0 => format!("{}", c),
                _ => {
                    let pow = if i == 1 {
                        var.to_string()
                    } else {
                        format!("{}^{}", var, i)
                    };
                    if c.is_one() {
                        pow
                    } else if (-c).is_one() {
                        format!("-{}", pow)
                    } else {
                        format!("{}*{}", c, pow)
                    }
                }
            };
            parts.push(term);
        }
        let mut s = String::new();
        for (k, t) in parts.iter().enumerate() {
            if k == 0 {
                s.push_str(t);
            } else if let Some(stripped) = t.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(stripped);
            } else {
                s.push_str(" + ");
                s.push_str(t);
            }
        }
        s
    }
}

/// Resultant of two integer polynomials via the subresultant PRS.
pub fn resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
    let (da, db) = match (a.degree(), b.degree()) {
        (Some(da), Some(db)) => (da, db),
        _ => return BigInt::zero(),
    };
    if da == 0 && db == 0 {
        return BigInt::one();
    }
    if db == 0 {
        return b.leading().pow(da as u32);
    }
    if da == 0 {
        return a.leading().pow(db as u32);
    }
    let mut s = 1;
    let (mut big, mut small) = if da >= db {
        (a.clone(), b.clone())
    } else {
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        (b.clone(), a.clone())
    };
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let d_big = big.degree().unwrap();
        let d_small = small.degree().unwrap();
        let delta = d_big - d_small;
        if d_big % 2 == 1 && d_small % 2 == 1 {
            s = -s;
        }
        let r = big.prem(&small);
        if r.is_zero() {
            return BigInt::zero();
        }
        big = small;
        let divisor = &g * h.pow(delta as u32);
        small = r.div_exact_scalar(&divisor);
        g = big.leading();
        if delta > 0 {
            let num = g.pow(delta as u32);
            let (q, rem) = num_integer::Integer::div_rem(&num, &h.pow(delta as u32 - 1));
            assert!(rem.is_zero());
            h = q;
        }
        if small.degree() == Some(0) {
            let d_last = big.degree().unwrap();
            let num = small.leading().pow(d_last as u32);
            let (q, rem) = num_integer::Integer::div_rem(&num, &h.pow(d_last as u32 - 1));
            assert!(rem.is_zero());
            return BigInt::from(s) * q;
        }
    }
}

/// Dense monic polynomial over the integers. `coeffs` holds the non-leading
/// coefficients lowest degree first; the leading coefficient is an implicit 1,
/// so the degree equals `coeffs.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonicIntPoly {
    coeffs: Vec<BigInt>,
}

impl MonicIntPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        MonicIntPoly { coeffs }
    }

    /// The identity map x.
    pub fn x() -> Self {
        MonicIntPoly {
            coeffs: vec![BigInt::zero()],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Non-leading coefficients, lowest degree first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        if i == self.coeffs.len() {
            BigInt::one()
        } else {
            self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
        }
    }

    pub fn to_intpoly(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        c.push(BigInt::one());
        IntPoly::new(c)
    }

    pub fn from_intpoly(p: &IntPoly) -> Self {
        assert!(p.leading().is_one(), "polynomial is not monic");
        let mut c = p.coeffs().to_vec();
        c.pop();
        MonicIntPoly { coeffs: c }
    }

    /// f(g(x)).
    pub fn compose(&self, g: &MonicIntPoly) -> MonicIntPoly {
        let gp = g.to_intpoly();
        // Horner from the top, starting at the implicit leading 1.
        let mut result = IntPoly::constant(BigInt::one());
        for c in self.coeffs.iter().rev() {
            result = result.mul(&gp).add(&IntPoly::constant(c.clone()));
        }
        MonicIntPoly::from_intpoly(&result)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.to_intpoly().eval(x)
    }

    /// Exact evaluation at a dyadic rational.
    pub fn eval_dyadic(&self, t: &Dyadic) -> Dyadic {
        let mut acc = Dyadic::one();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(t).add(&Dyadic::from_bigint(c.clone()));
        }
        acc
    }

    pub fn max_coeff_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }
}

/// fⁿ for f = x² + bx + c; f⁰ is the identity map x.
pub fn iterate(q: QuadParams, n: u32, max_bits: u64) -> Result<MonicIntPoly, IntPolyError> {
    let f = q.poly();
    let mut acc = MonicIntPoly::x();
    for _ in 0..n {
        acc = f.compose(&acc);
        let bits = acc.max_coeff_bits();
        if bits > max_bits {
            return Err(IntPolyError::CoefficientBlowup { bits, max_bits });
        }
    }
    Ok(acc)
}

pub const DEFAULT_MAX_BITS: u64 = 1_000_000;

/// Disc(f) = (-1)^(d(d-1)/2) Res(f, f').
pub fn discriminant(f: &MonicIntPoly) -> BigInt {
    let d = f.degree();
    assert!(d >= 1);
    let fp = f.to_intpoly();
    let res = resultant(&fp, &fp.derivative());
    if (d * (d - 1) / 2) % 2 == 1 {
        -res
    } else {
        res
    }
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let s = n.sqrt();
    &s * &s == *n
}

/// Exact rational of the form num / 2^exp2, kept canonical: exp2 = 0 or num odd.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigInt,
    exp2: u32,
}

impl Dyadic {
    pub fn new(num: BigInt, exp2: u32) -> Self {
        let mut d = Dyadic { num, exp2 };
        d.canonicalize();
        d
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Dyadic { num: n, exp2: 0 }
    }

    pub fn from_i64(n: i64) -> Self {
        Dyadic::from_bigint(BigInt::from(n))
    }

    pub fn zero() -> Self {
        Dyadic::from_i64(0)
    }

    pub fn one() -> Self {
        Dyadic::from_i64(1)
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.exp2 = 0;
            return;
        }
        while self.exp2 > 0 && num_integer::Integer::is_even(&self.num) {
            self.num /= 2;
            self.exp2 -= 1;
        }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn exp2(&self) -> u32 {
        self.exp2
    }

    pub fn is_integer(&self) -> bool {
        self.exp2 == 0
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        let e = self.exp2.max(other.exp2);
        let a = &self.num << (e - self.exp2);
        let b = &other.num << (e - other.exp2);
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        let e = self.exp2.max(other.exp2);
        let a = &self.num << (e - self.exp2);
        let b = &other.num << (e - other.exp2);
        Dyadic::new(a - b, e)
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic::new(&self.num * &other.num, self.exp2 + other.exp2)
    }

    /// The numerator with its full 2-part removed (sign kept). Zero maps to zero.
    pub fn odd_part(&self) -> BigInt {
        if self.num.is_zero() {
            return BigInt::zero();
        }
        let mut n = self.num.clone();
        while num_integer::Integer::is_even(&n) {
            n /= 2;
        }
        n
    }
}

impl std::fmt::Display for Dyadic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.exp2 == 0 {
            write!(f, "{}", self.num)
        } else if self.exp2 <= 16 {
            write!(f, "{}/{}", self.num, 1u64 << self.exp2)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp2)
        }
    }
}
