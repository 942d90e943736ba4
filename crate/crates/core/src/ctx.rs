//! Evaluation context: working precision, rounding mode and the shared
//! constants cache required by `astro-float` transcendental functions.

use astro_float::{BigFloat, Consts, RoundingMode};

use crate::pcplx::Real;

/// Owns the precision setting and the lazily cached constants (π, ln 2, …).
///
/// Every multiprecision operation in this crate threads a `&mut EvalContext`
/// explicitly. Contexts are cheap to create; independent contexts make the
/// operations safe to call from independent threads. All results are
/// deterministic for a fixed precision because the rounding mode is pinned
/// to round-to-even.
pub struct EvalContext {
    prec: usize,
    rm: RoundingMode,
    cc: Consts,
    /// Cached Euler–Maclaurin coefficients B_{2j}/(2j)! (index j−1).
    pub(crate) em_coeffs: alloc::vec::Vec<Real>,
}

impl EvalContext {
    /// A context computing with `prec` bits of mantissa.
    ///
    /// Precision is clamped below 1024 bits so that `f64` error bounds
    /// (smallest positive subnormal ≈ 5e-324) remain meaningful.
    pub fn new(prec: usize) -> Self {
        let prec = prec.clamp(64, 1024);
        EvalContext {
            prec,
            rm: RoundingMode::ToEven,
            cc: Consts::new().expect("constants cache"),
            em_coeffs: alloc::vec::Vec::new(),
        }
    }

    /// A context with the same rounding discipline at twice the precision,
    /// used by the self-verification paths.
    pub fn doubled(&self) -> Self {
        EvalContext::new(self.prec * 2)
    }

    #[inline]
    pub fn prec(&self) -> usize {
        self.prec
    }

    #[inline]
    pub(crate) fn rm(&self) -> RoundingMode {
        self.rm
    }

    #[inline]
    pub(crate) fn consts(&mut self) -> &mut Consts {
        &mut self.cc
    }

    /// π at the working precision.
    pub fn pi(&mut self) -> Real {
        let v = self.cc.pi(self.prec, self.rm);
        Real::from_raw(v)
    }

    /// 2π at the working precision.
    pub fn two_pi(&mut self) -> Real {
        let two = BigFloat::from_u64(2, self.prec);
        Real::from_raw(self.cc.pi(self.prec, self.rm).mul(&two, self.prec, self.rm))
    }

    /// ln 2 at the working precision.
    pub fn ln2(&mut self) -> Real {
        Real::from_raw(self.cc.ln_2(self.prec, self.rm))
    }
}
