use crate::arith;
use crate::context::Context;
use crate::error::{domain, Result};
use crate::kernel::guard_digits;
use crate::repr::MpFloat;

use super::{exact_value, finish, log2_estimate, one};

/// Error budget, in working ulps, of [`expm1_work`] at `t` digits.
fn expm1_budget(base: u64, t: usize) -> u64 {
    let k = (t as f64).sqrt().ceil() as u64;
    let terms = (t as f64 * (base as f64).log2() / k as f64).ceil() as u64 + 4;
    8 * (terms + 2 * k + 16)
}

/// `exp(x) - 1` for `|x|` below about 2, at the precision of `w`.
///
/// The argument is halved `k = ceil(sqrt(t))` times, the Taylor series of `expm1`
/// summed, and the result doubled back through `u <- u(2 + u)`.
pub(crate) fn expm1_work(w: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() {
        return Ok(MpFloat::zero());
    }
    let t = w.digits();
    let k = (t as f64).sqrt().ceil() as u32;
    let mut r = x.clone();
    let mut left = k;
    while left > 0 {
        let s = left.min(60);
        r = arith::div_small(w, &r, 1i64 << s)?;
        left -= s;
    }
    let mut sum = r.clone();
    let mut term = r.clone();
    let mut j = 2i64;
    loop {
        term = arith::div_small(w, &arith::mul(w, &term, &r)?, j)?;
        if term.is_zero() || term.exponent() < sum.exponent() - t as i64 - 1 {
            break;
        }
        sum = arith::add(w, &sum, &term)?;
        j += 1;
    }
    let mut u = sum;
    for _ in 0..k {
        let u2 = arith::mul(w, &u, &u)?;
        u = arith::add(w, &arith::mul_small(w, &u, 2)?, &u2)?;
    }
    Ok(u)
}

/// `exp(x) - 1` for `-1 < x < 1`.
pub fn expm1(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() {
        return Ok(MpFloat::zero());
    }
    if arith::compare_magnitude(x, &one()).is_ge() {
        return Err(domain("expm1 needs |x| < 1"));
    }
    let budget = expm1_budget(ctx.base(), ctx.digits() + 4);
    let w = ctx.work(super::working_digits(ctx, 16 * budget as u128));
    let z = expm1_work(&w, x)?;
    finish(ctx, &z, budget)
}

/// `exp(x)` at the precision of `w`, with a relative error of a few hundred
/// working ulps at most. The result may lie outside the user exponent range.
pub(crate) fn exp_work(w: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() {
        return Ok(one());
    }
    let base = w.base();
    let ln_b = (base as f64).ln();
    let xf = log2_estimate(w, x).exp2() * x.sign() as f64;
    let t = w.digits();
    let mut shift: i64 = 0;
    let mut y = x.clone();
    if xf.abs() >= ln_b / 2.0 {
        let kf = (xf / ln_b).round();
        if kf.abs() > 4.0e18 {
            return Ok(one().shifted(if kf > 0.0 { i64::MAX / 4 } else { -(i64::MAX / 4) }));
        }
        let k = kf as i64;
        let wide = w.work(t + 2 + guard_digits(base, k.unsigned_abs() as u128 + 1));
        let lnb = super::ln_int_work(&wide, base)?;
        let kl = arith::mul_small(&wide, &lnb, k)?;
        y = arith::sub(&wide, x, &kl)?;
        y = crate::repr::move_precision(w, &y, t)?;
        shift = k;
    }
    let n = arith::to_small_int(&w.work(t), &arith::int_trunc(w, &y)?).unwrap_or(0);
    let f = arith::frac(&w.work(t + 2), &y)?;
    let ef = arith::add(w, &one(), &expm1_work(w, &f)?)?;
    let z = if n == 0 {
        ef
    } else {
        let half = arith::div_small(w, &one(), 2)?;
        let sq = arith::add(w, &one(), &expm1_work(w, &half)?)?;
        let e = arith::mul(w, &sq, &sq)?;
        let en = super::pow_work(w, &e, n.unsigned_abs())?;
        let en = if n > 0 { en } else { arith::recip(w, &en)? };
        arith::mul(w, &en, &ef)?
    };
    Ok(z.shifted(shift))
}

pub(crate) fn exp_budget(ctx: &Context) -> u64 {
    expm1_budget(ctx.base(), ctx.digits() + 8) * 4 + 256
}

/// `exp(x)`. Overflow saturates as described for the context.
pub fn exp(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() {
        return exact_value(ctx, &one());
    }
    let budget = exp_budget(ctx);
    let w = ctx.work(super::working_digits(ctx, 16 * budget as u128));
    let z = exp_work(&w, x)?;
    finish(ctx, &z, budget)
}
