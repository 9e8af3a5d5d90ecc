//! Dedekind's criterion: an independent p-maximality oracle used to validate
//! the closed-form criteria and the Newton-polygon engine at desk scale.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::ffpoly::GFpPoly;
use crate::intpoly::{IntPoly, MonicIntPoly};

/// The oracle is for desk-scale verification only.
pub const DEDEKIND_DEGREE_CAP: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DedekindError {
    #[error("degree {degree} exceeds the oracle cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DedekindVerdict {
    pub p: u64,
    pub p_maximal: bool,
    /// The gcd polynomial over GF(p); nonconstant exactly when not maximal.
    pub witness: Option<GFpPoly>,
}

/// Reduce an integer polynomial mod p.
pub fn reduce_mod_p(f: &IntPoly, p: u64) -> GFpPoly {
    let pb = BigInt::from(p);
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| {
            let mut r = c % &pb;
            if r.is_negative() {
                r += &pb;
            }
            r.to_u64().unwrap()
        })
        .collect();
    GFpPoly::from_reduced(p, coeffs)
}

pub fn reduce_monic_mod_p(f: &MonicIntPoly, p: u64) -> GFpPoly {
    reduce_mod_p(&f.to_intpoly(), p)
}

/// Lift with coefficients in [0, p).
pub fn lift_to_int(g: &GFpPoly) -> IntPoly {
    IntPoly::new(g.coeffs().iter().map(|&c| BigInt::from(c)).collect())
}

/// Dedekind's criterion for a monic polynomial the caller certifies to be
/// irreducible over ℚ: factor f̄ = Π ḡᵢ^eᵢ mod p, take ḡ* = Π ḡᵢ and h̄* = f̄/ḡ*,
/// lift both, form T = (g*·h* − f)/p, and report maximality iff
/// gcd(T̄, ḡ*, h̄*) = 1 in GF(p)[x].
pub fn dedekind_p_maximal(f: &MonicIntPoly, p: u64) -> Result<DedekindVerdict, DedekindError> {
    let degree = f.degree();
    if degree > DEDEKIND_DEGREE_CAP {
        return Err(DedekindError::DegreeCapExceeded {
            degree,
            cap: DEDEKIND_DEGREE_CAP,
        });
    }
    let fbar = reduce_monic_mod_p(f, p);
    // radical of f̄: product of the distinct squarefree parts
    let mut gstar_bar = GFpPoly::one(p);
    for (g, _) in fbar.squarefree_decomposition() {
        gstar_bar = gstar_bar.mul(&g);
    }
    let hstar_bar = fbar.div_exact(&gstar_bar);
    let gstar = lift_to_int(&gstar_bar);
    let hstar = lift_to_int(&hstar_bar);
    let t = gstar
        .mul(&hstar)
        .sub(&f.to_intpoly())
        .div_exact_scalar(&BigInt::from(p));
    let tbar = reduce_mod_p(&t, p);
    let witness = tbar.gcd(&gstar_bar).gcd(&hstar_bar);
    let p_maximal = witness.is_one();
    Ok(DedekindVerdict {
        p,
        p_maximal,
        witness: if p_maximal { None } else { Some(witness) },
    })
}
