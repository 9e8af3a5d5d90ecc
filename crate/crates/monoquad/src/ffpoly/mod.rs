//! Polynomial arithmetic and factorization over prime fields GF(p), a
//! bit-packed specialization for GF(2), and arithmetic in the residue
//! extensions GF(p)[x]/(φ).

mod fq;
mod gf2;
mod gfp;

pub use fq::{FqElem, FqField, FqPoly};
pub use gf2::{gf2_iterate, Gf2Error, GF2Poly, GF2_DEGREE_CAP};
pub use gfp::{FfError, GFpPoly};
