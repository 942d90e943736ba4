//! Multiprecision real and complex values with conservative error tracking.
//!
//! [`Real`] is a thin newtype over `astro_float::BigFloat`; every operation
//! takes the [`EvalContext`] that pins precision and rounding, so results are
//! reproducible bit-for-bit for a fixed configuration.
//!
//! [`PrecisionComplex`] carries an absolute error bound `err_abs` alongside
//! the value. The bound is propagated *conservatively*: each operation
//! derives an upper estimate of the result error from upper estimates of the
//! operand magnitudes, adds the local rounding contribution, and inflates the
//! `f64` bound arithmetic itself so that the stored bound can only
//! overestimate the true error. When a bound cannot be maintained (division
//! by a value not separated from zero at the current error level) it becomes
//! `+inf` rather than silently wrong.

use alloc::vec::Vec;
use astro_float::{BigFloat, Sign};
use core::cmp::Ordering;

use crate::ctx::EvalContext;
use crate::C64;

/// Upward slop for f64 arithmetic on error bounds.
#[inline]
fn up(x: f64) -> f64 {
    x * (1.0 + 1e-9)
}

/// Multiprecision real number.
#[derive(Debug, Clone, PartialEq)]
pub struct Real(BigFloat);

impl Real {
    #[inline]
    pub(crate) fn from_raw(v: BigFloat) -> Self {
        Real(v)
    }

    #[inline]
    pub(crate) fn raw(&self) -> &BigFloat {
        &self.0
    }

    pub fn zero(ctx: &EvalContext) -> Self {
        Real(BigFloat::from_u64(0, ctx.prec()))
    }

    pub fn one(ctx: &EvalContext) -> Self {
        Real(BigFloat::from_u64(1, ctx.prec()))
    }

    pub fn from_f64(f: f64, ctx: &EvalContext) -> Self {
        Real(BigFloat::from_f64(f, ctx.prec()))
    }

    pub fn from_u64(u: u64, ctx: &EvalContext) -> Self {
        Real(BigFloat::from_u64(u, ctx.prec()))
    }

    pub fn from_i64(i: i64, ctx: &EvalContext) -> Self {
        Real(BigFloat::from_i64(i, ctx.prec()))
    }

    /// Exact rational n/d rounded once to the working precision.
    pub fn from_ratio(n: i64, d: u64, ctx: &mut EvalContext) -> Self {
        let num = BigFloat::from_i64(n, ctx.prec());
        let den = BigFloat::from_u64(d, ctx.prec());
        Real(num.div(&den, ctx.prec(), ctx.rm()))
    }

    /// Parses a decimal string at the working precision.
    pub fn parse_decimal(s: &str, ctx: &mut EvalContext) -> Option<Self> {
        let p = ctx.prec();
        let rm = ctx.rm();
        let v = BigFloat::parse(s, astro_float::Radix::Dec, p, rm, ctx.consts());
        if v.is_nan() {
            None
        } else {
            Some(Real(v))
        }
    }

    /// Raw mantissa words (little-endian), sign and exponent of a finite
    /// nonzero value; `None` for zero/NaN/Inf. The value equals
    /// `±0.mantissa · 2^exponent`.
    pub fn raw_parts(&self) -> Option<(Vec<u64>, bool, i32)> {
        if self.0.is_zero() || self.0.is_nan() || self.0.is_inf() {
            return None;
        }
        let (words, _n, sign, e, _inexact) = self.0.as_raw_parts()?;
        Some((words.to_vec(), sign == Sign::Neg, e))
    }

    /// Rebuilds a value from `raw_parts` output.
    pub fn from_parts(words: &[u64], negative: bool, exponent: i32) -> Self {
        let s = if negative { Sign::Neg } else { Sign::Pos };
        Real(BigFloat::from_words(words, s, exponent))
    }

    pub fn add(&self, o: &Real, ctx: &EvalContext) -> Real {
        Real(self.0.add(&o.0, ctx.prec(), ctx.rm()))
    }

    pub fn sub(&self, o: &Real, ctx: &EvalContext) -> Real {
        Real(self.0.sub(&o.0, ctx.prec(), ctx.rm()))
    }

    pub fn mul(&self, o: &Real, ctx: &EvalContext) -> Real {
        Real(self.0.mul(&o.0, ctx.prec(), ctx.rm()))
    }

    pub fn div(&self, o: &Real, ctx: &EvalContext) -> Real {
        Real(self.0.div(&o.0, ctx.prec(), ctx.rm()))
    }

    pub fn neg(&self) -> Real {
        Real(self.0.neg())
    }

    pub fn abs(&self) -> Real {
        Real(self.0.abs())
    }

    pub fn sqrt(&self, ctx: &EvalContext) -> Real {
        Real(self.0.sqrt(ctx.prec(), ctx.rm()))
    }

    pub fn cbrt(&self, ctx: &EvalContext) -> Real {
        Real(self.0.cbrt(ctx.prec(), ctx.rm()))
    }

    pub fn exp(&self, ctx: &mut EvalContext) -> Real {
        let p = ctx.prec();
        let rm = ctx.rm();
        Real(self.0.exp(p, rm, ctx.consts()))
    }

    pub fn ln(&self, ctx: &mut EvalContext) -> Real {
        let p = ctx.prec();
        let rm = ctx.rm();
        Real(self.0.ln(p, rm, ctx.consts()))
    }

    pub fn sin(&self, ctx: &mut EvalContext) -> Real {
        let p = ctx.prec();
        let rm = ctx.rm();
        Real(self.0.sin(p, rm, ctx.consts()))
    }

    pub fn cos(&self, ctx: &mut EvalContext) -> Real {
        let p = ctx.prec();
        let rm = ctx.rm();
        Real(self.0.cos(p, rm, ctx.consts()))
    }

    pub fn atan(&self, ctx: &mut EvalContext) -> Real {
        let p = ctx.prec();
        let rm = ctx.rm();
        Real(self.0.atan(p, rm, ctx.consts()))
    }

    /// Principal-value `atan2(y, x)` in (−π, π]; `atan2(0, 0)` is defined
    /// as 0 (the degenerate bracket convention of the weight recursion).
    pub fn atan2(y: &Real, x: &Real, ctx: &mut EvalContext) -> Real {
        let pi = ctx.pi();
        if x.is_zero() && y.is_zero() {
            return Real::zero(ctx);
        }
        if x.is_zero() {
            let half = Real::from_ratio(1, 2, ctx);
            let hp = pi.mul(&half, ctx);
            return if y.is_negative() { hp.neg() } else { hp };
        }
        let base = y.div(x, ctx).atan(ctx);
        if x.is_negative() {
            if y.is_negative() {
                base.sub(&pi, ctx)
            } else {
                base.add(&pi, ctx)
            }
        } else {
            base
        }
    }

    /// Real power `self^e`; requires `self > 0`.
    pub fn pow(&self, e: &Real, ctx: &mut EvalContext) -> Real {
        let p = ctx.prec();
        let rm = ctx.rm();
        Real(self.0.pow(&e.0, p, rm, ctx.consts()))
    }

    /// Integer power by binary exponentiation (valid for any sign of base).
    pub fn powi(&self, n: i64, ctx: &mut EvalContext) -> Real {
        if n == 0 {
            return Real::one(ctx);
        }
        let mut base = if n < 0 {
            Real::one(ctx).div(self, ctx)
        } else {
            self.clone()
        };
        let mut e = n.unsigned_abs();
        let mut acc = Real::one(ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, ctx);
            }
            base = base.mul(&base, ctx);
            e >>= 1;
        }
        acc
    }

    pub fn floor(&self) -> Real {
        Real(self.0.floor())
    }

    pub fn ceil(&self) -> Real {
        Real(self.0.ceil())
    }

    pub fn fract(&self) -> Real {
        Real(self.0.fract())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative() && !self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive() && !self.0.is_zero()
    }

    pub fn is_nan(&self) -> bool {
        self.0.is_nan()
    }

    /// Total order on finite values; NaN sorts last.
    pub fn cmp_total(&self, o: &Real) -> Ordering {
        match self.0.cmp(&o.0) {
            Some(c) => c.cmp(&0),
            None => {
                if self.0.is_nan() && o.0.is_nan() {
                    Ordering::Equal
                } else if self.0.is_nan() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }

    pub fn max(a: &Real, b: &Real) -> Real {
        if a.cmp_total(b) == Ordering::Less {
            b.clone()
        } else {
            a.clone()
        }
    }

    /// Nearest-integer rounding (half away from zero), returned as i64
    /// (saturating).
    pub fn round_to_i64(&self, ctx: &EvalContext) -> i64 {
        let neg = self.is_negative();
        let half = Real(BigFloat::from_f64(if neg { -0.5 } else { 0.5 }, 64));
        let shifted = self.add(&half, ctx);
        let fl = if neg { shifted.ceil() } else { shifted.floor() };
        let f = fl.to_f64();
        if f >= i64::MAX as f64 {
            i64::MAX
        } else if f <= i64::MIN as f64 {
            i64::MIN
        } else {
            // floor() is exact; f64 of an integer ≤ 2^53 is exact too.
            f as i64
        }
    }

    /// Nearest f64 (round toward nearest, accurate to ~2^-53 relative).
    pub fn to_f64(&self) -> f64 {
        if self.0.is_nan() {
            return f64::NAN;
        }
        if self.0.is_inf_pos() {
            return f64::INFINITY;
        }
        if self.0.is_inf_neg() {
            return f64::NEG_INFINITY;
        }
        if self.0.is_zero() {
            return 0.0;
        }
        let (words, _n, sign, e, _inexact) = self.0.as_raw_parts().expect("finite value");
        let top = *words.last().expect("nonempty mantissa") as f64;
        let lo = if words.len() >= 2 {
            words[words.len() - 2] as f64
        } else {
            0.0
        };
        let m = top + lo / 18446744073709551616.0;
        let v = libm::scalbn(m, e - 64);
        if sign == Sign::Neg {
            -v
        } else {
            v
        }
    }

    /// Upper bound on |self| as f64.
    pub fn abs_upper(&self) -> f64 {
        up(libm::fabs(self.to_f64())) + f64::MIN_POSITIVE
    }

    #[inline]
    pub fn inexact(&self) -> bool {
        self.0.inexact()
    }
}

/// Complex number with attached absolute error bound.
///
/// Invariants: `err_abs` is finite (or +inf as an explicit "bound lost"
/// marker) and nonnegative; arithmetic only ever grows the true-error
/// envelope it represents.
#[derive(Debug, Clone)]
pub struct PrecisionComplex {
    pub re: Real,
    pub im: Real,
    err: f64,
    prec_bits: usize,
}

impl PrecisionComplex {
    pub fn new(re: Real, im: Real, err: f64, ctx: &EvalContext) -> Self {
        debug_assert!(err >= 0.0);
        PrecisionComplex {
            re,
            im,
            err,
            prec_bits: ctx.prec(),
        }
    }

    pub fn zero(ctx: &EvalContext) -> Self {
        Self::new(Real::zero(ctx), Real::zero(ctx), 0.0, ctx)
    }

    pub fn one(ctx: &EvalContext) -> Self {
        Self::new(Real::one(ctx), Real::zero(ctx), 0.0, ctx)
    }

    /// Exact lift of a pair of f64 components.
    pub fn from_f64s(re: f64, im: f64, ctx: &EvalContext) -> Self {
        Self::new(Real::from_f64(re, ctx), Real::from_f64(im, ctx), 0.0, ctx)
    }

    pub fn from_real(re: Real, ctx: &EvalContext) -> Self {
        Self::new(re, Real::zero(ctx), 0.0, ctx)
    }

    /// Lift of a real that was itself produced by rounded arithmetic;
    /// seeds the bound with a one-ulp error.
    pub fn from_real_rounded(re: Real, ctx: &EvalContext) -> Self {
        let e = if re.inexact() {
            re.abs_upper() * libm::scalbn(1.0, 2 - (ctx.prec() as i32)) + f64::MIN_POSITIVE
        } else {
            0.0
        };
        Self::new(re, Real::zero(ctx), e, ctx)
    }

    #[inline]
    pub fn err_abs(&self) -> f64 {
        self.err
    }

    #[inline]
    pub fn prec_bits(&self) -> usize {
        self.prec_bits
    }

    /// Replaces the error bound (used when an analytic remainder is folded in).
    pub fn with_err(mut self, err: f64) -> Self {
        debug_assert!(err >= 0.0);
        self.err = err;
        self
    }

    pub fn add_err(mut self, extra: f64) -> Self {
        self.err = up(self.err + extra);
        self
    }

    pub fn to_c64(&self) -> C64 {
        C64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// Upper bound on |value| (error included).
    pub fn abs_upper(&self) -> f64 {
        let m = libm::hypot(self.re.to_f64(), self.im.to_f64());
        up(up(m) + self.err)
    }

    /// Lower bound on |value| (error subtracted), clamped at 0.
    pub fn abs_lower(&self) -> f64 {
        let m = libm::hypot(self.re.to_f64(), self.im.to_f64());
        let l = m * (1.0 - 1e-9) - self.err;
        if l > 0.0 {
            l
        } else {
            0.0
        }
    }

    /// Modulus as a `Real` (no error tracking; pair with `abs_lower`/`abs_upper`).
    pub fn modulus(&self, ctx: &mut EvalContext) -> Real {
        let rr = self.re.mul(&self.re, ctx);
        let ii = self.im.mul(&self.im, ctx);
        rr.add(&ii, ctx).sqrt(ctx)
    }

    /// Principal argument in (−π, π]; arg(0) := 0.
    pub fn arg(&self, ctx: &mut EvalContext) -> Real {
        Real::atan2(&self.im, &self.re, ctx)
    }

    /// Local rounding contribution of one arithmetic operation.
    fn rnd(&self) -> f64 {
        let m = libm::fabs(self.re.to_f64()) + libm::fabs(self.im.to_f64());
        up(m) * libm::scalbn(1.0, 2 - (self.prec_bits as i32)) + f64::MIN_POSITIVE
    }

    pub fn neg(&self) -> Self {
        PrecisionComplex {
            re: self.re.neg(),
            im: self.im.neg(),
            err: self.err,
            prec_bits: self.prec_bits,
        }
    }

    pub fn conj(&self) -> Self {
        PrecisionComplex {
            re: self.re.clone(),
            im: self.im.neg(),
            err: self.err,
            prec_bits: self.prec_bits,
        }
    }

    pub fn add(&self, o: &Self, ctx: &mut EvalContext) -> Self {
        let v = PrecisionComplex {
            re: self.re.add(&o.re, ctx),
            im: self.im.add(&o.im, ctx),
            err: 0.0,
            prec_bits: ctx.prec(),
        };
        let e = up(self.err + o.err) + v.rnd();
        v.with_err(e)
    }

    pub fn sub(&self, o: &Self, ctx: &mut EvalContext) -> Self {
        let v = PrecisionComplex {
            re: self.re.sub(&o.re, ctx),
            im: self.im.sub(&o.im, ctx),
            err: 0.0,
            prec_bits: ctx.prec(),
        };
        let e = up(self.err + o.err) + v.rnd();
        v.with_err(e)
    }

    pub fn mul(&self, o: &Self, ctx: &mut EvalContext) -> Self {
        let ac = self.re.mul(&o.re, ctx);
        let bd = self.im.mul(&o.im, ctx);
        let ad = self.re.mul(&o.im, ctx);
        let bc = self.im.mul(&o.re, ctx);
        let v = PrecisionComplex {
            re: ac.sub(&bd, ctx),
            im: ad.add(&bc, ctx),
            err: 0.0,
            prec_bits: ctx.prec(),
        };
        let u1 = self.abs_upper();
        let u2 = o.abs_upper();
        // |Δ(z1 z2)| ≤ |z1| e2 + |z2| e1 + e1 e2, plus rounding of the four
        // products and two sums (absorbed into rnd with margin).
        let e = up(u1 * o.err + u2 * self.err + self.err * o.err) + 4.0 * v.rnd();
        v.with_err(e)
    }

    pub fn mul_real(&self, r: &Real, ctx: &mut EvalContext) -> Self {
        let v = PrecisionComplex {
            re: self.re.mul(r, ctx),
            im: self.im.mul(r, ctx),
            err: 0.0,
            prec_bits: ctx.prec(),
        };
        let e = up(r.abs_upper() * self.err) + v.rnd();
        v.with_err(e)
    }

    pub fn div_real(&self, r: &Real, ctx: &mut EvalContext) -> Self {
        let v = PrecisionComplex {
            re: self.re.div(r, ctx),
            im: self.im.div(r, ctx),
            err: 0.0,
            prec_bits: ctx.prec(),
        };
        let low = r.abs_upper() * (1.0 - 1e-9); // |r| exact; slop only
        if low <= 0.0 {
            return v.with_err(f64::INFINITY);
        }
        let e = up(self.err / low) + v.rnd();
        v.with_err(e)
    }

    /// self + (integer) shift on the real part.
    pub fn add_real(&self, r: &Real, ctx: &mut EvalContext) -> Self {
        let v = PrecisionComplex {
            re: self.re.add(r, ctx),
            im: self.im.clone(),
            err: 0.0,
            prec_bits: ctx.prec(),
        };
        let e = up(self.err) + v.rnd();
        v.with_err(e)
    }

    pub fn recip(&self, ctx: &mut EvalContext) -> Self {
        let one = PrecisionComplex::one(ctx);
        one.div(self, ctx)
    }

    pub fn div(&self, o: &Self, ctx: &mut EvalContext) -> Self {
        let denom_low = o.abs_lower();
        let cc = o.re.mul(&o.re, ctx);
        let dd = o.im.mul(&o.im, ctx);
        let n2 = cc.add(&dd, ctx);
        let ac = self.re.mul(&o.re, ctx);
        let bd = self.im.mul(&o.im, ctx);
        let bc = self.im.mul(&o.re, ctx);
        let ad = self.re.mul(&o.im, ctx);
        let v = PrecisionComplex {
            re: ac.add(&bd, ctx).div(&n2, ctx),
            im: bc.sub(&ad, ctx).div(&n2, ctx),
            err: 0.0,
            prec_bits: ctx.prec(),
        };
        if denom_low <= 0.0 {
            return v.with_err(f64::INFINITY);
        }
        // |Δ(a/b)| ≤ (e1 + |a/b| e2) / (|b| − e2)
        let w = v.abs_upper();
        let e = up((self.err + w * o.err) / denom_low) + 6.0 * v.rnd();
        v.with_err(e)
    }

    /// exp(z) with error `≈ |exp(z)|·(e^{err} − 1)` plus rounding.
    pub fn exp(&self, ctx: &mut EvalContext) -> Self {
        let ex = self.re.exp(ctx);
        let c = self.im.cos(ctx);
        let s = self.im.sin(ctx);
        let v = PrecisionComplex {
            re: ex.mul(&c, ctx),
            im: ex.mul(&s, ctx),
            err: 0.0,
            prec_bits: ctx.prec(),
        };
        let mag = v.abs_upper();
        let grow = if self.err < 0.5 {
            up(self.err * (1.0 + self.err))
        } else {
            libm::expm1(self.err)
        };
        let e = up(mag * grow) + 4.0 * v.rnd();
        v.with_err(e)
    }

    /// Principal logarithm; requires |z| bounded away from 0 at the current
    /// error level, otherwise the bound degenerates to +inf.
    pub fn ln(&self, ctx: &mut EvalContext) -> Self {
        let low = self.abs_lower();
        let modulus = self.modulus(ctx);
        let v = PrecisionComplex {
            re: modulus.ln(ctx),
            im: self.arg(ctx),
            err: 0.0,
            prec_bits: ctx.prec(),
        };
        if low <= 0.0 {
            return v.with_err(f64::INFINITY);
        }
        // |Δ log z| ≤ 2·err/|z| covers modulus and argument; the factor 2
        // is generous for the two components combined.
        let e = up(2.0 * self.err / low) + 6.0 * v.rnd();
        v.with_err(e)
    }

    /// z^w = exp(w·ln z), principal branch.
    pub fn powc(&self, w: &Self, ctx: &mut EvalContext) -> Self {
        let l = self.ln(ctx);
        let wl = w.mul(&l, ctx);
        wl.exp(ctx)
    }

    /// Distance |self − o| as f64 plus both error bounds (upper estimate).
    pub fn dist_upper(&self, o: &Self, ctx: &mut EvalContext) -> f64 {
        let d = self.sub(o, ctx);
        d.abs_upper()
    }

    /// Distance between the stored centers, ignoring the error bounds.
    pub fn dist_center(&self, o: &Self, ctx: &mut EvalContext) -> f64 {
        let d = self.sub(o, ctx);
        libm::hypot(d.re.to_f64(), d.im.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_round_trips() {
        let ctx = EvalContext::new(128);
        for &x in &[0.0, 1.0, -1.0, 0.5, 1.75, -3.25e10, 1e-30, core::f64::consts::PI] {
            let r = Real::from_f64(x, &ctx);
            assert_eq!(r.to_f64(), x, "round-trip for {x}");
        }
    }

    #[test]
    fn atan2_quadrants() {
        let mut ctx = EvalContext::new(128);
        let one = Real::one(&ctx);
        let m1 = one.neg();
        let pi = ctx.pi().to_f64();
        let q1 = Real::atan2(&one, &one, &mut ctx).to_f64();
        let q2 = Real::atan2(&one, &m1, &mut ctx).to_f64();
        let q3 = Real::atan2(&m1, &m1, &mut ctx).to_f64();
        let q4 = Real::atan2(&m1, &one, &mut ctx).to_f64();
        assert!((q1 - pi / 4.0).abs() < 1e-15);
        assert!((q2 - 3.0 * pi / 4.0).abs() < 1e-15);
        assert!((q3 + 3.0 * pi / 4.0).abs() < 1e-15);
        assert!((q4 + pi / 4.0).abs() < 1e-15);
        let zero = Real::zero(&ctx);
        assert!(Real::atan2(&zero, &zero, &mut ctx).is_zero());
    }

    #[test]
    fn complex_exp_ln_round_trip() {
        let mut ctx = EvalContext::new(192);
        let z = PrecisionComplex::from_f64s(0.3, -1.2, &ctx);
        let w = z.exp(&mut ctx).ln(&mut ctx);
        let d = w.dist_upper(&z, &mut ctx);
        assert!(d < 1e-50, "round trip distance {d}");
        assert!(w.err_abs() < 1e-50);
        assert!(w.err_abs() > 0.0);
    }

    #[test]
    fn err_bound_is_conservative_for_div() {
        let mut ctx = EvalContext::new(128);
        let a = PrecisionComplex::from_f64s(1.0, 2.0, &ctx).add_err(1e-20);
        let tiny = PrecisionComplex::from_f64s(1e-21, 0.0, &ctx).add_err(1e-20);
        let q = a.div(&tiny, &mut ctx);
        assert!(q.err_abs().is_infinite());
    }

    #[test]
    fn round_to_i64_works() {
        let ctx = EvalContext::new(128);
        for &(x, want) in &[(2.49, 2i64), (2.51, 3), (-2.49, -2), (-2.51, -3), (7.0, 7)] {
            let r = Real::from_f64(x, &ctx);
            assert_eq!(r.round_to_i64(&ctx), want, "rounding {x}");
        }
    }
}
