//! Numerical laboratory for approximation experiments with the Hurwitz and
//! Lerch zeta-functions and Dirichlet L-functions on the edge of the
//! half-plane of absolute convergence.
//!
//! The crate provides, roughly bottom-up:
//!
//! * a multiprecision complex type with conservative error tracking
//!   ([`PrecisionComplex`]) on top of `astro-float`, plus a fast `f64`
//!   evaluation tier for contour scans and Monte-Carlo sampling;
//! * Euler–Maclaurin evaluation of ζ(s,α), Lerch zeta, Dirichlet character
//!   tables and L-functions, and the character decomposition of ζ(s,p/q);
//! * truncated-Laplace-transform fitting of analytic targets on compact sets;
//! * unimodular weight systems on primes (interval partitions matching target
//!   coefficients, additive-constant targeting, and the joint log-L pipeline)
//!   and on shifted integers n+α (a recursive phase-steering construction
//!   honouring all multiplicative relations among the n+α);
//! * integer-relation detection (PSLQ), exact number-field certification,
//!   and an incremental valuation-based engine for Cassels sets;
//! * Kronecker/Weyl shift search and seeded density measurements;
//! * argument-principle zero counting and explicit integral lower bounds.
//!
//! Everything in this crate is `no_std` (with `alloc`); IO, file formats and
//! the command line live in the companion `zetalab` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

// pub mod analytic;
// pub mod cassels;
// pub mod chars;
pub mod ctx;
// pub mod dioph;
pub mod error;
// pub mod hurwitz_weights;
// pub mod laplace;
// pub mod lfunc;
// pub mod numfield;
pub mod pcplx;
pub mod primes;
// pub mod prime_weights;
pub mod region;
// pub mod relations;
// pub mod report;
pub mod rng;
// pub mod weights;
pub mod zeta;

pub use ctx::EvalContext;
pub use error::Error;
pub use pcplx::{PrecisionComplex, Real};
pub use region::CompactRegion;

/// Convenient alias for the fast evaluation tier.
pub type C64 = num_complex::Complex64;
