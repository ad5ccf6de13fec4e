use std::f64::consts::PI;

use crate::arith::{self, Rational};
use crate::context::Context;
use crate::elem::{exp_work, finish, ln_int_work, ln_work, log2_estimate, one, pi_work};
use crate::error::{domain, MpError, Result};
use crate::kernel::{self, guard_digits, Dir, Exact};
use crate::nat;
use crate::repr::MpFloat;

use super::bernoulli::bernoulli_work;
use super::{ln_base, work_for};

/// Largest `|p/q|` handled by the rational route.
const RATIONAL_LIMIT: i64 = 100;

/// `Gamma(p/q)`.
///
/// The argument is shifted into `(0, 1)` with `Gamma(x + 1) = x Gamma(x)` and
/// `Gamma(x)` there comes from the series for the lower incomplete gamma function
/// `gamma(x, A) = A^x e^(-A) sum_k A^k / (x (x+1) ... (x+k))`, with `A` large enough
/// that the upper part is negligible. Work is done at twice the target precision.
pub fn gamma_rational(ctx: &Context, p: i64, q: i64) -> Result<MpFloat> {
    let r = Rational::new(p, q)?;
    let (p, q) = (r.num(), r.den());
    if q == 1 && p <= 0 {
        return Err(MpError::Pole);
    }
    if (p / q).unsigned_abs() >= RATIONAL_LIMIT as u64 {
        if q == 1 {
            return factorial_route(ctx, p);
        }
        return gamma_real(ctx, &exact_ratio(ctx, p, q)?);
    }
    if q == 1 {
        return factorial_route(ctx, p);
    }
    let b = ctx.base();
    let n = p.div_euclid(q);
    let f = p.rem_euclid(q);
    let w = work_for(ctx, 1 << 12).work(2 * ctx.digits() + guard_digits(b, 1 << 12) + 2);
    let g = gamma_unit(&w, f, q)?;
    let mut num = vec![1u64];
    let mut den = vec![1u64];
    for i in 0..n.unsigned_abs() as i64 {
        let v = if n > 0 { f + i * q } else { f - (i + 1) * q };
        num = nat::mul_small(&num, v.unsigned_abs(), b);
        den = nat::mul_small(&den, q as u64, b);
    }
    let neg = n < 0 && n % 2 != 0;
    let (top, bottom) = if n >= 0 { (num, den) } else { (den, num) };
    let ratio = kernel::round_ratio(&w, &Exact::from_nat(neg, top, 0), &Exact::from_nat(false, bottom, 0), Dir::Chop, w.digits())?;
    let z = arith::mul(&w, &g, &ratio)?;
    finish(ctx, &z, 256)
}

fn exact_ratio(ctx: &Context, p: i64, q: i64) -> Result<MpFloat> {
    let w = ctx.work(ctx.digits() + guard_digits(ctx.base(), 1 << 20));
    kernel::round_ratio(&w, &Exact::from_i128(p as i128, w.base()), &Exact::from_i128(q as i128, w.base()), Dir::Chop, w.digits())
}

/// `(n - 1)!` rounded under the context's rule.
fn factorial_route(ctx: &Context, n: i64) -> Result<MpFloat> {
    if n <= 0 {
        return Err(MpError::Pole);
    }
    if n > 20_000 {
        return gamma_real(ctx, &arith::from_i64(&ctx.work(ctx.digits() + 4), n)?);
    }
    let b = ctx.base();
    let mut f = vec![1u64];
    for i in 2..n as u64 {
        f = nat::mul_small(&f, i, b);
    }
    kernel::round_exact(ctx, &Exact::from_nat(false, f, 0), Dir::of(ctx.rounding_rule()), ctx.digits())
}

/// `Gamma(f/q)` for `0 < f < q`.
fn gamma_unit(w: &Context, f: i64, q: i64) -> Result<MpFloat> {
    let t = w.digits() as i64;
    let a = (w.digits() as f64 * ln_base(w)).ceil() as i64 + 2;
    let x = kernel::round_ratio(w, &Exact::from_i128(f as i128, w.base()), &Exact::from_i128(q as i128, w.base()), Dir::Chop, w.digits())?;
    let mut term = arith::recip(w, &x)?;
    let mut sum = term.clone();
    let mut k = 1i64;
    loop {
        let xk = arith::add_small(w, &x, k)?;
        term = arith::div(w, &arith::mul_small(w, &term, a)?, &xk)?;
        sum = arith::add(w, &sum, &term)?;
        if k > a && (term.is_zero() || term.exponent() < sum.exponent() - t - 1) {
            break;
        }
        k += 1;
    }
    let la = ln_int_work(w, a as u64)?;
    let e = arith::sub(w, &arith::mul(w, &x, &la)?, &arith::from_i64(w, a)?)?;
    arith::mul(w, &exp_work(w, &e)?, &sum)
}

/// `ln Gamma(x)` at the precision of `w`, for `x > 0`.
///
/// `x` is shifted up until Stirling's series converges to working precision, the
/// series is summed with Bernoulli coefficients and the logarithm of the shift
/// product is subtracted.
pub(crate) fn ln_gamma_work(w: &Context, x: &MpFloat) -> Result<MpFloat> {
    let t = w.digits() as i64;
    let l = w.digits() as f64 * ln_base(w);
    let z0 = (l / (2.0 * PI)).ceil() as i64 + 2;
    let xf = log2_estimate(w, x).exp2();
    let shift = if xf >= z0 as f64 { 0 } else { z0 - xf.floor() as i64 };
    let z = arith::add_small(w, x, shift)?;
    let mut prod = one();
    for i in 0..shift {
        prod = arith::mul(w, &prod, &arith::add_small(w, x, i)?)?;
    }
    let half = arith::div_small(w, &one(), 2)?;
    let lz = ln_work(w, &z)?;
    let two_pi = arith::mul_small(w, &pi_work(w)?, 2)?;
    let mut s = arith::mul(w, &arith::sub(w, &z, &half)?, &lz)?;
    s = arith::sub(w, &s, &z)?;
    s = arith::add(w, &s, &arith::div_small(w, &ln_work(w, &two_pi)?, 2)?)?;
    let m = (l / 2.0).ceil() as usize + 4;
    let bern = bernoulli_work(w, m)?;
    let z2 = arith::mul(w, &z, &z)?;
    let mut zp = z.clone();
    let mut last: Option<i64> = None;
    for (i, bk) in bern.iter().enumerate() {
        let k = i as i64 + 1;
        let term = arith::div(w, bk, &arith::mul_small(w, &zp, 2 * k * (2 * k - 1))?)?;
        if term.is_zero() || term.exponent() < s.exponent().min(1) - t - 1 {
            break;
        }
        if last.is_some_and(|e| term.exponent() > e) {
            break;
        }
        last = Some(term.exponent());
        s = arith::add(w, &s, &term)?;
        zp = arith::mul(w, &zp, &z2)?;
    }
    if shift > 0 {
        s = arith::sub(w, &s, &ln_work(w, &prod)?)?;
    }
    Ok(s)
}

/// `ln Gamma(x)` for `x > 0`, by Stirling's series.
pub fn ln_gamma(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.sign() <= 0 {
        return Err(domain("ln_gamma needs x > 0"));
    }
    if arith::is_integer(x) && (arith::compare_small(ctx, x, 1).is_eq() || arith::compare_small(ctx, x, 2).is_eq()) {
        return Ok(MpFloat::zero());
    }
    let mag = log2_estimate(ctx, x).exp2().max(2.0);
    let extra = guard_digits(ctx.base(), (mag * mag.ln()).min(1e30) as u128 + 2);
    let w = work_for(ctx, 1 << 12);
    let w = w.work(w.digits() + extra);
    let z = ln_gamma_work(&w, x)?;
    finish(ctx, &z, 256)
}

/// `Gamma(x)`. Arguments with `240 x` a small integer go through [`gamma_rational`],
/// others through `exp(ln_gamma(x))`, shifted upward first when `x < 0`.
pub fn gamma(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() || (x.sign() < 0 && arith::is_integer(x)) {
        return Err(MpError::Pole);
    }
    let b = ctx.base();
    let scaled = x.exact().mul_small(240, b);
    if scaled.is_integer() {
        if let Some(v) = nat::to_u128(&nat::shift_up(&scaled.mag, scaled.exp.max(0) as usize), b) {
            if v <= 24_000 {
                let s = if scaled.neg { -(v as i64) } else { v as i64 };
                return gamma_rational(ctx, s, 240);
            }
        }
    }
    gamma_real(ctx, x)
}

fn gamma_real(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    let b = ctx.base();
    let mag = log2_estimate(ctx, x).exp2().max(2.0);
    let extra = guard_digits(b, (mag * mag.ln()).min(1e30) as u128 + 2);
    let w = work_for(ctx, 1 << 12);
    let w = w.work(w.digits() + extra);
    if x.sign() > 0 {
        let lg = ln_gamma_work(&w, x)?;
        let z = exp_work(&w, &lg)?;
        return finish(ctx, &z, 1024);
    }
    let xf = mag;
    let m = xf.ceil() as i64 + 1;
    let y = arith::add_small(&w, x, m)?;
    let mut prod = one();
    for i in 0..m {
        prod = arith::mul(&w, &prod, &arith::add_small(&w, x, i)?)?;
    }
    let gy = exp_work(&w, &ln_gamma_work(&w, &y)?)?;
    let z = arith::div(&w, &gy, &prod)?;
    finish(ctx, &z, 1024)
}
