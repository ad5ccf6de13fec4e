use crate::arith;
use crate::context::{Context, MemoKey};
use crate::error::{domain, MpError, Result};
use crate::kernel::{guard_digits, Exact};
use crate::repr::{move_precision, MpFloat};

use super::{finish, finish_abs, negated_with, one, working_digits};

/// `atan(1/n)` by its Taylor series at the precision of `w`.
fn atan_recip_series(w: &Context, n: i64) -> Result<MpFloat> {
    let t = w.digits() as i64;
    let mut p = arith::div_small(w, &one(), n)?;
    let mut sum = p.clone();
    let n2 = n.checked_mul(n);
    let mut k = 1i64;
    loop {
        p = match n2 {
            Some(n2) => arith::div_small(w, &p, n2)?,
            None => arith::div_small(w, &arith::div_small(w, &p, n)?, n)?,
        };
        let term = arith::div_small(w, &p, 2 * k + 1)?;
        if term.is_zero() || term.exponent() < sum.exponent() - t - 1 {
            return Ok(sum);
        }
        sum = if k % 2 == 1 { arith::sub(w, &sum, &term)? } else { arith::add(w, &sum, &term)? };
        k += 1;
    }
}

/// `pi` at the precision of `w` from `16 atan(1/5) - 4 atan(1/239)`, cached.
pub(crate) fn pi_work(w: &Context) -> Result<MpFloat> {
    let t = w.digits();
    if let Some(v) = w.memo_get(MemoKey::Pi, t) {
        return Ok(v);
    }
    let wp = w.work(t + 2 + guard_digits(w.base(), 64));
    let a = arith::mul_small(&wp, &atan_recip_series(&wp, 5)?, 16)?;
    let b = arith::mul_small(&wp, &atan_recip_series(&wp, 239)?, 4)?;
    let pi = move_precision(w, &arith::sub(&wp, &a, &b)?, t)?;
    w.memo_put(MemoKey::Pi, t, &pi);
    Ok(pi)
}

/// `atan(1/n)` for an integer `n > 1`.
pub fn atan_recip_int(ctx: &Context, n: i64) -> Result<MpFloat> {
    if n <= 1 {
        return Err(domain("atan_recip_int needs n > 1"));
    }
    let w = ctx.work(working_digits(ctx, 1024));
    let z = atan_recip_series(&w, n)?;
    finish(ctx, &z, 16)
}

/// Extra digits allowed for reducing a large argument modulo `2 pi`.
fn reduction_cap(t: usize) -> i64 {
    4 * t as i64 + 1000
}

/// `(cos x, sin x)` at the precision of `w`, each with absolute error at most
/// `cis_error(w)` units of `B^(-t)`.
pub(crate) fn cis_work(w: &Context, x: &MpFloat) -> Result<(MpFloat, MpFloat)> {
    if x.is_zero() {
        return Ok((one(), MpFloat::zero()));
    }
    let t = w.digits();
    let ex = x.exponent().max(0);
    if ex > reduction_cap(t) {
        return Err(MpError::LossOfPrecision);
    }
    let mut r = x.clone();
    if needs_reduction(w, x) {
        let wp = w.work(t + ex as usize + 2);
        let two_pi = arith::mul_small(&wp, &pi_work(&wp)?, 2)?;
        let half = arith::div_small(&wp, &one(), 2)?;
        let q = arith::floor(&wp, &arith::add(&wp, &arith::div(&wp, x, &two_pi)?, &half)?)?;
        r = arith::sub(&wp, x, &arith::mul(&wp, &q, &two_pi)?)?;
    }
    let r = move_precision(w, &r, t)?;
    if r.is_zero() {
        return Ok((one(), MpFloat::zero()));
    }
    let k = (t as f64).sqrt().ceil() as u32;
    let mut a = r;
    let mut left = k;
    while left > 0 {
        let s = left.min(60);
        a = arith::div_small(w, &a, 1i64 << s)?;
        left -= s;
    }
    let a2 = arith::mul(w, &a, &a)?;
    let mut s = a.clone();
    let mut ts = a.clone();
    let mut tc = arith::div_small(w, &a2, 2)?.neg();
    let mut c1 = tc.clone();
    let mut j = 1i64;
    loop {
        ts = arith::div_small(w, &arith::mul(w, &ts, &a2)?, (2 * j) * (2 * j + 1))?.neg();
        tc = arith::div_small(w, &arith::mul(w, &tc, &a2)?, (2 * j + 1) * (2 * j + 2))?.neg();
        let small = |v: &MpFloat, sum: &MpFloat| v.is_zero() || v.exponent() < sum.exponent() - t as i64 - 1;
        let done = small(&ts, &s) && small(&tc, &c1);
        s = arith::add(w, &s, &ts)?;
        c1 = arith::add(w, &c1, &tc)?;
        if done {
            break;
        }
        j += 1;
    }
    for _ in 0..k {
        let cos = arith::add(w, &one(), &c1)?;
        s = arith::mul_small(w, &arith::mul(w, &s, &cos)?, 2)?;
        let c1p2 = arith::add_small(w, &c1, 2)?;
        c1 = arith::mul_small(w, &arith::mul(w, &c1, &c1p2)?, 2)?;
    }
    Ok((arith::add(w, &one(), &c1)?, s))
}

fn needs_reduction(ctx: &Context, x: &MpFloat) -> bool {
    arith::compare_small(ctx, &x.abs(), 3).is_gt()
}

/// Absolute error bound of [`cis_work`] in units of `B^(-t)`.
fn cis_error(base: u64, t: usize) -> u128 {
    let k = (t as f64).sqrt().ceil() as u128;
    let terms = (t as f64 * (base as f64).log2() / k as f64) as u128 + 4;
    256 * (k + terms + 8)
}

fn cis_digits(ctx: &Context) -> usize {
    let t = ctx.digits() + 8;
    working_digits(ctx, 64 * cis_error(ctx.base(), t))
}

fn abs_error(ctx: &Context, w: &Context) -> Exact {
    Exact::from_i128(cis_error(ctx.base(), w.digits()) as i128, ctx.base()).shifted(-(w.digits() as i64))
}

/// Cosine and sine together.
pub fn cis(ctx: &Context, x: &MpFloat) -> Result<(MpFloat, MpFloat)> {
    Ok((cos(ctx, x)?, sin(ctx, x)?))
}

pub fn sin(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() {
        return Ok(MpFloat::zero());
    }
    if x.sign() < 0 {
        return negated_with(ctx, |c| sin(c, &x.abs()));
    }
    if !needs_reduction(ctx, x) {
        let w = ctx.work(cis_digits(ctx));
        let (_, s) = cis_work(&w, x)?;
        return finish(ctx, &s, cis_error(ctx.base(), w.digits()) as u64);
    }
    let mut extra = 0;
    loop {
        let w = ctx.work(cis_digits(ctx) + extra);
        let (_, s) = cis_work(&w, x)?;
        let err = abs_error(ctx, &w);
        if settled(ctx, &s, &err) || extra > 4 * ctx.digits() {
            return finish_abs(ctx, &s, &err);
        }
        extra = extra * 2 + ctx.digits();
    }
}

pub fn cos(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() {
        return super::exact_value(ctx, &one());
    }
    let x = x.abs();
    let mut extra = 0;
    loop {
        let w = ctx.work(cis_digits(ctx) + extra);
        let (c, _) = cis_work(&w, &x)?;
        let err = abs_error(ctx, &w);
        if settled(ctx, &c, &err) || extra > 4 * ctx.digits() {
            return finish_abs(ctx, &c, &err);
        }
        extra = extra * 2 + ctx.digits();
    }
}

/// Whether an absolute error `err` is small against the last place of `v` rounded to
/// the target precision, so that a single rounding is reliable.
fn settled(ctx: &Context, v: &MpFloat, err: &Exact) -> bool {
    if v.is_zero() {
        return false;
    }
    let ulp_exp = v.exponent() - ctx.digits() as i64;
    err.top() < ulp_exp - 1
}

pub fn tan(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() {
        return Ok(MpFloat::zero());
    }
    let w = ctx.work(cis_digits(ctx) + ctx.digits());
    let (c, s) = cis_work(&w, x)?;
    if c.is_zero() {
        return Err(MpError::Pole);
    }
    let z = arith::div(&w, &s, &c)?;
    finish(ctx, &z, 64)
}

/// `atan x` at the precision of `w` for any `x`.
pub(crate) fn atan_work(w: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() {
        return Ok(MpFloat::zero());
    }
    if x.sign() < 0 {
        return Ok(atan_work(w, &x.abs())?.neg());
    }
    let t = w.digits();
    match arith::compare(x, &one()) {
        std::cmp::Ordering::Equal => return arith::div_small(w, &pi_work(w)?, 4),
        std::cmp::Ordering::Greater => {
            let inner = atan_work(w, &arith::recip(w, x)?)?;
            let hp = arith::div_small(w, &pi_work(w)?, 2)?;
            return arith::sub(w, &hp, &inner);
        }
        std::cmp::Ordering::Less => {}
    }
    let bits = t as f64 * (w.base() as f64).log2();
    let target = -(bits.sqrt().ceil());
    let mut y = move_precision(w, x, t)?;
    let mut q = 0u32;
    while super::log2_estimate(w, &y) > target && q < 10_000 {
        let s = super::root_work(w, &arith::add(w, &one(), &arith::mul(w, &y, &y)?)?, 2)?;
        y = arith::div(w, &y, &arith::add(w, &one(), &s)?)?;
        q += 1;
    }
    let y2 = arith::mul(w, &y, &y)?;
    let mut p = y.clone();
    let mut sum = y.clone();
    let mut k = 1i64;
    loop {
        p = arith::mul(w, &p, &y2)?;
        let term = arith::div_small(w, &p, 2 * k + 1)?;
        if term.is_zero() || term.exponent() < sum.exponent() - t as i64 - 1 {
            break;
        }
        sum = if k % 2 == 1 { arith::sub(w, &sum, &term)? } else { arith::add(w, &sum, &term)? };
        k += 1;
    }
    let mut left = q;
    while left > 0 {
        let s = left.min(60);
        sum = arith::mul_small(w, &sum, 1i64 << s)?;
        left -= s;
    }
    Ok(sum)
}

fn atan_digits(ctx: &Context) -> usize {
    let bits = (ctx.digits() + 8) as f64 * (ctx.base() as f64).log2();
    let q = bits.sqrt() as u128 + 8;
    working_digits(ctx, 64 * (16 * q + bits as u128 / q + 64))
}

const ATAN_ULPS: u64 = 1024;

pub fn atan(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() {
        return Ok(MpFloat::zero());
    }
    if x.sign() < 0 {
        return negated_with(ctx, |c| atan(c, &x.abs()));
    }
    let w = ctx.work(atan_digits(ctx));
    let z = atan_work(&w, x)?;
    finish(ctx, &z, ATAN_ULPS)
}

/// `atan(x / y)` in `(-pi/2, pi/2]`; `y = 0` gives `pi/2` with the sign of `x`.
pub fn atan2(ctx: &Context, x: &MpFloat, y: &MpFloat) -> Result<MpFloat> {
    if y.is_zero() {
        if x.is_zero() {
            return Err(domain("atan2 of (0, 0)"));
        }
        let w = ctx.work(atan_digits(ctx));
        let hp = arith::div_small(&w, &pi_work(&w)?, 2)?;
        let hp = if x.sign() < 0 { hp.neg() } else { hp };
        return finish(ctx, &hp, 4);
    }
    if x.is_zero() {
        return Ok(MpFloat::zero());
    }
    let w = ctx.work(atan_digits(ctx));
    let q = arith::div(&w, x, y)?;
    let z = atan_work(&w, &q)?;
    finish(ctx, &z, ATAN_ULPS + 4)
}

/// `asin x` for `|x| <= 1`.
pub fn asin(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() {
        return Ok(MpFloat::zero());
    }
    let c = arith::compare_magnitude(x, &one());
    if c.is_gt() {
        return Err(domain("asin needs |x| <= 1"));
    }
    if x.sign() < 0 {
        return negated_with(ctx, |cx| asin(cx, &x.abs()));
    }
    let w = ctx.work(atan_digits(ctx) + 2);
    if c.is_eq() {
        let hp = arith::div_small(&w, &pi_work(&w)?, 2)?;
        return finish(ctx, &hp, 4);
    }
    let wx = w.work(x.precision() * 2 + 4);
    let omx = arith::sub(&wx, &one(), x)?;
    let opx = arith::add(&wx, &one(), x)?;
    let d = super::root_work(&w, &arith::mul(&w, &omx, &opx)?, 2)?;
    let z = atan_work(&w, &arith::div(&w, x, &d)?)?;
    finish(ctx, &z, ATAN_ULPS + 64)
}
