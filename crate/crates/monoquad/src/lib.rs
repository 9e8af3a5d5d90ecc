//! Monogenicity and prime splitting for towers generated by iterated monic
//! integer quadratics f(x) = x² + bx + c.
//!
//! The library decides whether the iterates fⁿ are monogenic (p-maximal for
//! every prime p), predicts how the prime 2 splits in the resulting tower of
//! number fields, and certifies dynamical monogenicity for post-critically
//! finite parameters. Every closed-form criterion is verifiable against two
//! independent oracles: Dedekind's criterion and a first-level Ore/Montes
//! Newton-polygon engine.
//!
//! See the crate examples for one runnable program per major capability, and
//! the `monoquad` binary for the command-line surface.

pub mod analyzer;
pub mod dedekind;
pub mod ffpoly;
pub mod intpoly;
pub mod orenewton;
pub mod pcf;
pub mod report;
pub mod splitting;

pub use intpoly::{Dyadic, MonicIntPoly, QuadParams};
