use crate::arith::{self, precision_ladder};
use crate::context::{Context, MemoKey};
use crate::error::{domain, Result};
use crate::kernel::{self, guard_digits, Dir, Exact};
use crate::repr::{move_precision, MpFloat};

use super::{exact_value, finish, one, working_digits};

/// `sum x^(2k+1)/(2k+1)` for `x = 1/n`.
fn atanh_recip(w: &Context, n: i64) -> Result<MpFloat> {
    let t = w.digits() as i64;
    let mut p = arith::div_small(w, &one(), n)?;
    let mut sum = p.clone();
    let n2 = n * n;
    let mut k = 1i64;
    loop {
        p = arith::div_small(w, &p, n2)?;
        let term = arith::div_small(w, &p, 2 * k + 1)?;
        if term.is_zero() || term.exponent() < sum.exponent() - t - 1 {
            return Ok(sum);
        }
        sum = arith::add(w, &sum, &term)?;
        k += 1;
    }
}

/// `atanh(x)` for small `|x|` by its Taylor series.
fn atanh_series(w: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() {
        return Ok(MpFloat::zero());
    }
    let t = w.digits() as i64;
    let x2 = arith::mul(w, x, x)?;
    let mut p = x.clone();
    let mut sum = x.clone();
    let mut k = 1i64;
    loop {
        p = arith::mul(w, &p, &x2)?;
        let term = arith::div_small(w, &p, 2 * k + 1)?;
        if term.is_zero() || term.exponent() < sum.exponent() - t - 1 {
            return Ok(sum);
        }
        sum = arith::add(w, &sum, &term)?;
        k += 1;
    }
}

/// `ln 2`, `ln 3`, `ln 5` from `ln(16/15)`, `ln(25/24)` and `ln(81/80)`.
fn small_logs(w: &Context) -> Result<[MpFloat; 3]> {
    let t = w.digits();
    if let (Some(a), Some(b), Some(c)) =
        (w.memo_get(MemoKey::Ln(2), t), w.memo_get(MemoKey::Ln(3), t), w.memo_get(MemoKey::Ln(5), t))
    {
        return Ok([a, b, c]);
    }
    let wp = w.work(t + 2);
    let a = arith::mul_small(&wp, &atanh_recip(&wp, 31)?, 2)?;
    let b = arith::mul_small(&wp, &atanh_recip(&wp, 49)?, 2)?;
    let c = arith::mul_small(&wp, &atanh_recip(&wp, 161)?, 2)?;
    let combo = |i: i64, j: i64, k: i64| -> Result<MpFloat> {
        let s = arith::add(&wp, &arith::mul_small(&wp, &a, i)?, &arith::mul_small(&wp, &b, j)?)?;
        let s = arith::add(&wp, &s, &arith::mul_small(&wp, &c, k)?)?;
        move_precision(w, &s, t)
    };
    let out = [combo(7, 5, 3)?, combo(11, 8, 5)?, combo(16, 12, 7)?];
    for (key, v) in [2u64, 3, 5].iter().zip(out.iter()) {
        w.memo_put(MemoKey::Ln(*key), t, v);
    }
    Ok(out)
}

/// The 5-smooth number closest to `m` in ratio, with its exponents of 2, 3, 5.
fn nearest_smooth(m: u64) -> (u128, [i64; 3]) {
    let m = m as u128;
    let target = (m as f64).ln();
    let mut best = (1u128, [0i64; 3], f64::INFINITY);
    let mut p5: u128 = 1;
    let mut c = 0;
    while p5 <= 2 * m {
        let mut p35 = p5;
        let mut b = 0;
        while p35 <= 2 * m {
            let a = ((target - (p35 as f64).ln()) / std::f64::consts::LN_2).floor().max(0.0) as i64;
            for aa in [a, a + 1] {
                let p = p35 << aa;
                let d = ((p as f64).ln() - target).abs();
                if d < best.2 {
                    best = (p, [aa, b, c], d);
                }
            }
            p35 *= 3;
            b += 1;
        }
        p5 *= 5;
        c += 1;
    }
    (best.0, best.1)
}

/// `ln n` at the precision of `w`, cached per precision.
pub(crate) fn ln_int_work(w: &Context, n: u64) -> Result<MpFloat> {
    if n <= 1 {
        return Ok(MpFloat::zero());
    }
    let t = w.digits();
    if let Some(v) = w.memo_get(MemoKey::Ln(n), t) {
        return Ok(v);
    }
    let b = w.base();
    let wp = w.work(t + 2 + guard_digits(b, 1 << 14));
    let mut m = n;
    let mut e = [0i64; 3];
    for (i, p) in [2u64, 3, 5].iter().enumerate() {
        while m % p == 0 {
            m /= p;
            e[i] += 1;
        }
    }
    let mut sum = MpFloat::zero();
    if m > 1 {
        let (p, pe) = nearest_smooth(m);
        for i in 0..3 {
            e[i] += pe[i];
        }
        let num = Exact::from_i128(m as i128 - p as i128, b);
        let den = Exact::from_i128(m as i128 + p as i128, b);
        let r = kernel::round_ratio(&wp, &num, &den, Dir::Chop, wp.digits())?;
        sum = arith::mul_small(&wp, &atanh_series(&wp, &r)?, 2)?;
    }
    let logs = small_logs(&wp)?;
    for i in 0..3 {
        if e[i] != 0 {
            sum = arith::add(&wp, &sum, &arith::mul_small(&wp, &logs[i], e[i])?)?;
        }
    }
    let out = move_precision(w, &sum, t)?;
    w.memo_put(MemoKey::Ln(n), t, &out);
    Ok(out)
}

/// `ln(1 + x)` for small `|x|` by Newton's method on `expm1(z) = x`.
pub(crate) fn ln1p_small_work(w: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() {
        return Ok(MpFloat::zero());
    }
    let (m, e) = arith::mantissa_f64(w, x);
    let xf = m * (w.base() as f64).powf(e as f64);
    let z0 = xf.ln_1p();
    let mut z = if z0.is_finite() && z0 != 0.0 { arith::from_f64(&arith::seed_context(w), z0)? } else { x.clone() };
    for p in precision_ladder(w.base(), w.digits()) {
        let wp = w.work(p);
        let em = super::expm1_work(&wp, &z)?;
        let num = arith::sub(&wp, &em, x)?;
        if num.is_zero() {
            continue;
        }
        let den = arith::add(&wp, &one(), &em)?;
        z = arith::sub(&wp, &z, &arith::div(&wp, &num, &den)?)?;
    }
    Ok(z)
}

/// `ln x` for `x > 0` at the precision of `w`.
pub(crate) fn ln_work(w: &Context, x: &MpFloat) -> Result<MpFloat> {
    let t = w.digits();
    let b = w.base();
    let d = arith::sub(&w.work(x.precision() + 4), x, &one())?;
    if d.is_zero() {
        return Ok(MpFloat::zero());
    }
    let e = x.exponent();
    let extra = if e == 1 { guard_digits(b, 256 * b as u128) } else { guard_digits(b, 64) };
    let wp = w.work(t + 2 + extra);
    if d.exponent() <= -1 {
        let r = ln1p_small_work(&wp, &d)?;
        return move_precision(w, &r, t);
    }
    let f = move_precision(&wp, &x.shifted(-e), wp.digits())?;
    let (fm, _) = arith::mantissa_f64(&wp, &f);
    let a = arith::from_f64(&wp, fm.ln())?;
    let ea = super::exp_work(&wp, &a.neg())?;
    let z = arith::sub(&wp, &arith::mul(&wp, &f, &ea)?, &one())?;
    let mut r = arith::add(&wp, &a, &ln1p_small_work(&wp, &z)?)?;
    if e != 0 {
        let lnb = ln_int_work(&wp, b)?;
        r = arith::add(&wp, &arith::mul_small(&wp, &lnb, e)?, &r)?;
    }
    move_precision(w, &r, t)
}

const LN_ULPS: u64 = 256;

/// Natural logarithm.
pub fn ln(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.sign() <= 0 {
        return Err(domain("logarithm of a nonpositive number"));
    }
    if arith::eq(x, &one()) {
        return Ok(MpFloat::zero());
    }
    let w = ctx.work(working_digits(ctx, 64 * LN_ULPS as u128));
    let z = ln_work(&w, x)?;
    finish(ctx, &z, LN_ULPS)
}

/// `ln(1 + x)` for `|x| < 1/B`.
pub fn ln1p_small(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() {
        return Ok(MpFloat::zero());
    }
    if x.exponent() > -1 {
        return Err(domain("ln1p_small needs |x| < 1/B"));
    }
    let w = ctx.work(working_digits(ctx, 64 * LN_ULPS as u128));
    let z = ln1p_small_work(&w, x)?;
    finish(ctx, &z, LN_ULPS)
}

/// `ln n` for a positive integer `n`.
pub fn ln_int(ctx: &Context, n: i64) -> Result<MpFloat> {
    if n < 1 {
        return Err(domain("logarithm of a nonpositive integer"));
    }
    if n == 1 {
        return Ok(MpFloat::zero());
    }
    let w = ctx.work(working_digits(ctx, 64 * LN_ULPS as u128));
    let z = ln_int_work(&w, n as u64)?;
    finish(ctx, &z, LN_ULPS)
}

/// Base 10 logarithm.
pub fn log10(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.sign() <= 0 {
        return Err(domain("logarithm of a nonpositive number"));
    }
    if arith::eq(x, &one()) {
        return Ok(MpFloat::zero());
    }
    let w = ctx.work(working_digits(ctx, 64 * LN_ULPS as u128));
    let z = arith::div(&w, &ln_work(&w, x)?, &ln_int_work(&w, 10)?)?;
    if let Some(v) = exact_power_of_ten(ctx, x, &z)? {
        return Ok(v);
    }
    finish(ctx, &z, 2 * LN_ULPS)
}

fn exact_power_of_ten(ctx: &Context, x: &MpFloat, z: &MpFloat) -> Result<Option<MpFloat>> {
    let k = arith::to_small_int_or_zero(ctx, &arith::floor(&ctx.work(z.precision() + 2), z)?);
    for c in [k, k + 1] {
        if c.unsigned_abs() > 4096 {
            continue;
        }
        let p = Exact::from_nat(false, crate::nat::pow(10, c.unsigned_abs(), ctx.base()), 0);
        let xe = x.exact();
        let hit = if c >= 0 { xe == p } else { xe.mul(&p, ctx.base()) == Exact::from_i128(1, ctx.base()) };
        if hit {
            return Ok(Some(exact_value(ctx, &arith::from_i64(&ctx.work(ctx.digits() + 4), c)?)?));
        }
    }
    Ok(None)
}

/// Natural logarithm through the arithmetic-geometric mean.
///
/// For large `s`, `ln s` is close to `pi / (2 AGM(1, 4/s))`. With `s = x 2^m` this
/// gives `ln x` as a difference of two such expressions, so no series logarithm is used.
pub fn ln_agm(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.sign() <= 0 {
        return Err(domain("logarithm of a nonpositive number"));
    }
    if arith::eq(x, &one()) {
        return Ok(MpFloat::zero());
    }
    let b = ctx.base();
    let d = arith::sub(&ctx.work(x.precision() + 4), x, &one())?;
    if d.exponent() <= -1 {
        return ln1p_small(ctx, &d);
    }
    let tw0 = working_digits(ctx, 64 * 1024);
    let bits = tw0 as f64 * (b as f64).log2() + 16.0;
    let lx = super::log2_estimate(ctx, x);
    let m = (bits / 2.0).ceil() as i64 + 2 + (-lx.floor()).max(0.0) as i64;
    let tw = tw0 + guard_digits(b, (m as u128 + 1) * b as u128 * 4);
    let w = ctx.work(tw);
    let two_m = super::pow_work(&w, &arith::from_i64(&w, 2)?, m as u64)?;
    let s = arith::mul(&w, x, &two_m)?;
    let inv_s = arith::div(&w, &super::int(&w, 4), &s)?;
    let inv_2m = arith::div(&w, &super::int(&w, 4), &two_m)?;
    let g1 = agm(&w, &inv_s)?;
    let g2 = agm(&w, &inv_2m)?;
    let diff = arith::sub(&w, &arith::recip(&w, &g1)?, &arith::recip(&w, &g2)?)?;
    let pi = super::pi_work(&w)?;
    let z = arith::div_small(&w, &arith::mul(&w, &pi, &diff)?, 2)?;
    finish(ctx, &z, 1024)
}

/// `AGM(1, b)` at the precision of `w`.
fn agm(w: &Context, b: &MpFloat) -> Result<MpFloat> {
    let t = w.digits() as i64;
    let mut a = one();
    let mut b = b.clone();
    for _ in 0..200 {
        let d = arith::sub(w, &a, &b)?;
        let next = arith::div_small(w, &arith::add(w, &a, &b)?, 2)?;
        if d.is_zero() || d.exponent() < a.exponent() - t / 2 {
            return Ok(next);
        }
        b = super::root_work(w, &arith::mul(w, &a, &b)?, 2)?;
        a = next;
    }
    Ok(a)
}
