use crate::arith::{self, precision_ladder, Rational};
use crate::context::{Context, RoundingRule};
use crate::error::{domain, MpError, Result};
use crate::kernel::{self, Dir, Exact};
use crate::nat;
use crate::repr::{move_precision, MpFloat};

use super::{exact_value, finish, finish_interval, log2_estimate, negated_with, one, working_digits};

/// `x^n` by binary powering with the arithmetic of `w`.
pub(crate) fn pow_work(w: &Context, x: &MpFloat, n: u64) -> Result<MpFloat> {
    let mut result = one();
    let mut sq = x.clone();
    let mut k = n;
    let mut first = true;
    while k > 0 {
        if k & 1 == 1 {
            result = if first { sq.clone() } else { arith::mul(w, &result, &sq)? };
            first = false;
        }
        k >>= 1;
        if k > 0 {
            sq = arith::mul(w, &sq, &sq)?;
        }
    }
    if first {
        return Ok(one());
    }
    Ok(result)
}

/// Range check for `|x|^n` before computing it: `Some(true)` means it certainly
/// overflows, `Some(false)` certainly underflows.
fn power_out_of_range(ctx: &Context, x: &MpFloat, n: i64) -> Option<bool> {
    let lb = (ctx.base() as f64).log2();
    let l = log2_estimate(ctx, x) * n as f64 / lb;
    let m = ctx.max_exp() as f64;
    if l > m + 2.0 {
        Some(true)
    } else if l < -m - 2.0 {
        Some(false)
    } else {
        None
    }
}

/// `x^n` for integer `n`, with `0^0 = 1`. Directed rules give true bounds.
pub fn pow_int(ctx: &Context, x: &MpFloat, n: i64) -> Result<MpFloat> {
    if n == 0 {
        return exact_value(ctx, &one());
    }
    if x.is_zero() {
        return if n > 0 { Ok(MpFloat::zero()) } else { Err(MpError::DivisionByZero) };
    }
    if x.sign() < 0 && n % 2 != 0 {
        return negated_with(ctx, |c| pow_int(c, &x.abs(), n));
    }
    let x = x.abs();
    if n == 1 {
        return exact_value(ctx, &x);
    }
    match power_out_of_range(ctx, &x, n) {
        Some(true) => return kernel::finish_range(ctx, false, ctx.max_exp() + 1, vec![1]),
        Some(false) => return ctx.note_underflow(),
        None => {}
    }
    let m = n.unsigned_abs();
    let steps = 2 * (64 - m.leading_zeros() as u128) + 2;
    let tw = working_digits(ctx, 8 * steps);
    let lo_ctx = ctx.work(tw).with_rule(RoundingRule::Down);
    let hi_ctx = ctx.work(tw).with_rule(RoundingRule::Up);
    let (lo, hi) = if n > 0 {
        (pow_work(&lo_ctx, &x, m)?, pow_work(&hi_ctx, &x, m)?)
    } else {
        let plo = pow_work(&lo_ctx, &x, m)?;
        let phi = pow_work(&hi_ctx, &x, m)?;
        (arith::recip(&lo_ctx, &phi)?, arith::recip(&hi_ctx, &plo)?)
    };
    if lo == hi {
        return exact_value(ctx, &lo);
    }
    finish_interval(ctx, &lo, &hi, &lo)
}

pub fn sqrt(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    root(ctx, x, 2)
}

/// `x^(1/n)`. Exactly representable roots are returned exactly.
pub fn root(ctx: &Context, x: &MpFloat, n: i64) -> Result<MpFloat> {
    if n == 0 {
        return Err(domain("root of order zero"));
    }
    if x.is_zero() {
        return if n > 0 { Ok(MpFloat::zero()) } else { Err(domain("negative root of zero")) };
    }
    if n == 1 {
        return exact_value(ctx, x);
    }
    if n == -1 {
        return arith::recip(ctx, x);
    }
    if x.sign() < 0 {
        if n % 2 == 0 {
            return Err(domain("even root of a negative number"));
        }
        return negated_with(ctx, |c| root(c, &x.abs(), n));
    }
    let m = n.unsigned_abs();
    let tw = working_digits(ctx, 64 * m as u128 + 64);
    let w = ctx.work(tw);
    let z = root_work(&w, x, n)?;
    if let Some(c) = exact_root(ctx, x, n, &z)? {
        return Ok(c);
    }
    finish(ctx, &z, 16 * m + 16)
}

/// If the nearest `t`-digit neighbour of `z` is exactly `x^(1/n)`, return it.
fn exact_root(ctx: &Context, x: &MpFloat, n: i64, z: &MpFloat) -> Result<Option<MpFloat>> {
    let m = n.unsigned_abs();
    let t = ctx.digits();
    if m > 64 || (t as u64) * m > 40_000 {
        return Ok(None);
    }
    let c = kernel::round_exact(&ctx.work(t), &z.exact(), Dir::Nearest, t)?;
    let b = ctx.base();
    let ce = c.exact();
    let cm = Exact::from_nat(false, nat::pow_nat(&ce.mag, m, b), ce.exp * m as i64);
    let xe = x.exact();
    let ok = if n > 0 {
        cm == xe
    } else {
        cm.mul(&xe, b) == Exact::from_i128(1, b)
    };
    if ok {
        return Ok(Some(exact_value(ctx, &c)?));
    }
    Ok(None)
}

/// `x^(1/n)` for `x > 0` at the precision of `w` (error a few units of `w`).
pub(crate) fn root_work(w: &Context, x: &MpFloat, n: i64) -> Result<MpFloat> {
    let m = n.unsigned_abs() as i64;
    let tw = w.digits();
    let e = x.exponent();
    let q = e.div_euclid(m);
    let xr = x.shifted(-q * m);
    let l2 = log2_estimate(w, &xr);
    let y0 = (-(l2 / m as f64)).exp2();
    let mut y = arith::from_f64(&arith::seed_context(w), y0)?;
    for p in precision_ladder(w.base(), tw) {
        let wp = w.work(p);
        let xp = move_precision(&wp, &xr, p)?;
        let ym = pow_work(&wp, &y, m as u64)?;
        let r = arith::sub(&wp, &one(), &arith::mul(&wp, &xp, &ym)?)?;
        let d = arith::div_small(&wp, &arith::mul(&wp, &y, &r)?, m)?;
        y = arith::add(&wp, &y, &d)?;
    }
    if n < 0 {
        return Ok(y.shifted(-q));
    }
    let ym1 = pow_work(w, &y, (m - 1) as u64)?;
    let r = arith::mul(w, &move_precision(w, &xr, tw)?, &ym1)?;
    Ok(r.shifted(q))
}

/// `x^y = exp(y ln x)` for `x > 0` (and `x = 0` when `y > 0`).
pub fn pow(ctx: &Context, x: &MpFloat, y: &MpFloat) -> Result<MpFloat> {
    if y.is_zero() {
        return exact_value(ctx, &one());
    }
    if x.is_zero() {
        return if y.sign() > 0 { Ok(MpFloat::zero()) } else { Err(domain("zero to a nonpositive power")) };
    }
    if x.sign() < 0 {
        return Err(domain("negative base"));
    }
    let mag = (log2_estimate(ctx, y).exp2() * log2_estimate(ctx, x).abs().max(1.0)).abs();
    let tw = working_digits(ctx, 256 * (mag.min(1e30) as u128 + 1));
    let w = ctx.work(tw);
    let z = pow_work_real(&w, x, y)?;
    finish(ctx, &z, 64)
}

pub(crate) fn pow_work_real(w: &Context, x: &MpFloat, y: &MpFloat) -> Result<MpFloat> {
    let l = super::ln_work(w, x)?;
    let a = arith::mul(w, y, &l)?;
    super::exp_work(w, &a)
}

/// `(p/q)^(r/s)`. Small `|s|` goes through an exact rational power and a root,
/// otherwise through logarithms of integers and the exponential.
pub fn pow_rational(ctx: &Context, p: i64, q: i64, r: i64, s: i64) -> Result<MpFloat> {
    let base = Rational::new(p, q)?;
    let expo = Rational::new(r, s)?;
    let (p, q, r, s) = (base.num(), base.den(), expo.num(), expo.den());
    if p == 0 {
        return match r.signum() {
            1 => Ok(MpFloat::zero()),
            0 => exact_value(ctx, &one()),
            _ => Err(domain("zero to a negative power")),
        };
    }
    if r == 0 {
        return exact_value(ctx, &one());
    }
    if p < 0 && s % 2 == 0 {
        return Err(domain("even root of a negative number"));
    }
    if p < 0 {
        if r % 2 != 0 {
            return negated_with(ctx, |c| pow_rational(c, -p, q, r, s));
        }
        return pow_rational(ctx, -p, q, r, s);
    }
    if s <= 10 && r.unsigned_abs() <= 64 {
        let b = ctx.base();
        let (mut num, mut den) = (p as u64, q as u64);
        if r < 0 {
            std::mem::swap(&mut num, &mut den);
        }
        let k = r.unsigned_abs();
        let pn = Exact::from_nat(false, nat::pow(num, k, b), 0);
        let pd = Exact::from_nat(false, nat::pow(den, k, b), 0);
        if s == 1 {
            return kernel::round_ratio(ctx, &pn, &pd, Dir::of(ctx.rounding_rule()), ctx.digits());
        }
        let tw = working_digits(ctx, 64 * s as u128 + 64);
        let w = ctx.work(tw);
        let v = kernel::round_ratio(&w, &pn, &pd, Dir::Chop, tw + 2)?;
        let z = root_work(&w, &v, s)?;
        if let Some(c) = exact_rational_root(ctx, &pn, &pd, s, &z)? {
            return Ok(c);
        }
        return finish(ctx, &z, 16 * s as u64 + 32);
    }
    let mag = (r as f64 / s as f64).abs() * ((p as f64).ln().abs() + (q as f64).ln().abs() + 1.0);
    let tw = working_digits(ctx, 256 * (mag as u128 + 1));
    let w = ctx.work(tw);
    let lp = super::ln_int_work(&w, p as u64)?;
    let lq = super::ln_int_work(&w, q as u64)?;
    let l = arith::sub(&w, &lp, &lq)?;
    let a = arith::mul_rational(&w, &l, expo)?;
    let z = super::exp_work(&w, &a)?;
    finish(ctx, &z, 64)
}

fn exact_rational_root(ctx: &Context, pn: &Exact, pd: &Exact, s: i64, z: &MpFloat) -> Result<Option<MpFloat>> {
    let t = ctx.digits();
    if (t as i64) * s > 40_000 {
        return Ok(None);
    }
    let b = ctx.base();
    let c = kernel::round_exact(&ctx.work(t), &z.exact(), Dir::Nearest, t)?;
    let ce = c.exact();
    let cs = Exact::from_nat(false, nat::pow_nat(&ce.mag, s as u64, b), ce.exp * s);
    if cs.mul(pd, b) == *pn {
        return Ok(Some(exact_value(ctx, &c)?));
    }
    Ok(None)
}
