//! Basic arithmetic: sums, products, quotients, rationals and small integers.

mod compare;
mod integer;

pub use compare::{
    compare, compare_magnitude, compare_rational, compare_small, dim, eq, ge, gt, le, lt, max, min, ne,
    sign_transfer,
};
pub use integer::{
    ceil, floor, frac, gcd, gcd_reduce, int_trunc, is_integer, modulo, to_small_int, to_small_int_or_zero,
};

use crate::context::{Context, RoundingRule};
use crate::error::{MpError, Result};
use crate::kernel::{self, guard_digits, Dir, Exact};
use crate::repr::MpFloat;

/// A reduced fraction with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Rational> {
        if den == 0 {
            return Err(MpError::ZeroDenominator);
        }
        let g = gcd_i128(num as i128, den as i128).max(1);
        let (mut n, mut d) = (num as i128 / g, den as i128 / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let num = i64::try_from(n).map_err(|_| MpError::OutOfRange)?;
        let den = i64::try_from(d).map_err(|_| MpError::OutOfRange)?;
        Ok(Rational { num, den })
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }
}

pub(crate) fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// The direction `add` uses: chop for like signs under Truncate, but away from zero
/// when the operands have opposite signs.
fn add_dir(ctx: &Context, sx: i32, sy: i32) -> Dir {
    match ctx.rounding_rule() {
        RoundingRule::Truncate if sx * sy < 0 => Dir::Away,
        r => Dir::of(r),
    }
}

pub fn add(ctx: &Context, x: &MpFloat, y: &MpFloat) -> Result<MpFloat> {
    let (a, b) = (x.exact(), y.exact());
    let dir = add_dir(ctx, a.sign(), b.sign());
    kernel::round_sum(ctx, &a, &b, dir, ctx.digits())
}

pub fn sub(ctx: &Context, x: &MpFloat, y: &MpFloat) -> Result<MpFloat> {
    add(ctx, x, &y.neg())
}

pub fn add_small(ctx: &Context, x: &MpFloat, i: i64) -> Result<MpFloat> {
    add_rational(ctx, x, Rational { num: i, den: 1 })
}

/// `x + q` rounded as a single operation.
pub fn add_rational(ctx: &Context, x: &MpFloat, q: Rational) -> Result<MpFloat> {
    let base = ctx.base();
    let t = ctx.digits();
    let xe = x.exact();
    let p = Exact::from_i128(q.num as i128, base);
    let d = Exact::from_i128(q.den as i128, base);
    let dir = add_dir(ctx, xe.sign(), p.sign());
    if p.is_zero() || xe.is_zero() {
        if p.is_zero() {
            return kernel::round_exact(ctx, &xe, dir, t);
        }
        return kernel::round_ratio(ctx, &p, &d, dir, t);
    }
    let r_hi = p.top() - d.top() + 1;
    let r_lo = p.top() - 1 - d.top();
    let lim_small_r = xe.exp.min(xe.top() - t as i64 - 2);
    if r_hi <= lim_small_r - 1 {
        let eps = Exact { neg: p.neg, mag: vec![1], exp: lim_small_r - 2 };
        return kernel::round_exact(ctx, &xe.add(&eps, base), dir, t);
    }
    let lim_small_x = r_lo.min(r_lo - t as i64).min(0) - d.top() - 1;
    let xe = if xe.top() <= lim_small_x {
        Exact { neg: xe.neg, mag: vec![1], exp: lim_small_x - 2 }
    } else {
        xe
    };
    let num = xe.mul(&d, base).add(&p, base);
    kernel::round_ratio(ctx, &num, &d, dir, t)
}

pub fn mul(ctx: &Context, x: &MpFloat, y: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() || y.is_zero() {
        return Ok(MpFloat::zero());
    }
    let (a, b) = (x.exact(), y.exact());
    let mag = crate::nat::mul_bounded(&a.mag, &b.mag, ctx.base(), ctx.max_int().min(u64::MAX >> 2));
    let p = Exact::from_nat(a.neg != b.neg, mag, a.exp + b.exp);
    let z = kernel::round_exact(ctx, &p, Dir::of(ctx.rounding_rule()), ctx.digits())?;
    if ctx.faulty_mul() && z.precision() > 2 {
        return Ok(corrupt_last_digit(ctx, &z));
    }
    Ok(z)
}

fn corrupt_last_digit(ctx: &Context, z: &MpFloat) -> MpFloat {
    let mut d = z.digits().to_vec();
    let last = d.len() - 1;
    d[last] = ((d[last] as u64 + 1) % ctx.base()) as u32;
    MpFloat::raw(z.sign(), z.exponent(), d)
}

pub fn mul_small(ctx: &Context, x: &MpFloat, i: i64) -> Result<MpFloat> {
    if x.is_zero() || i == 0 {
        return Ok(MpFloat::zero());
    }
    let d = x.digits();
    let mut mag = Vec::with_capacity(d.len() + 3);
    crate::nat::mul_small_into(d.iter().rev().map(|&v| v as u64), i.unsigned_abs(), ctx.base(), &mut mag);
    let neg = (x.sign() < 0) != (i < 0);
    let exp = x.exponent() - d.len() as i64;
    kernel::round_nat(ctx, neg, &mag, exp, kernel::Rest::Zero, Dir::of(ctx.rounding_rule()), ctx.digits())
}

/// `x * q`. Under Truncate this is a chopped multiply followed by a chopped divide;
/// otherwise the exact product is rounded once.
pub fn mul_rational(ctx: &Context, x: &MpFloat, q: Rational) -> Result<MpFloat> {
    if ctx.rounding_rule() == RoundingRule::Truncate {
        let y = mul_small(ctx, x, q.num)?;
        return div_small(ctx, &y, q.den);
    }
    let base = ctx.base();
    let num = x.exact().mul(&Exact::from_i128(q.num as i128, base), base);
    kernel::round_ratio(ctx, &num, &Exact::from_i128(q.den as i128, base), Dir::of(ctx.rounding_rule()), ctx.digits())
}

/// `x * n^j` for `1 < n <= 100`. Large powers are applied in several steps, each
/// rounded in the context's direction, so directed rules still give bounds.
pub fn scale(ctx: &Context, x: &MpFloat, n: i64, j: i64) -> Result<MpFloat> {
    if !(2..=100).contains(&n) {
        return Err(MpError::OutOfRange);
    }
    if x.is_zero() || j == 0 {
        return crate::repr::move_precision(ctx, x, ctx.digits());
    }
    if x.sign() < 0 {
        let r = scale(&ctx.with_rule(ctx.rounding_rule().reversed()), &x.neg(), n, j)?;
        return Ok(r.neg());
    }
    let limit = ctx.max_int() as i128;
    let mut chunk = 1u32;
    while (n as i128).pow(chunk + 1) <= limit {
        chunk += 1;
    }
    let steps = j.unsigned_abs().div_ceil(chunk as u64);
    if steps <= 64 {
        let mut y = x.clone();
        let mut left = j.unsigned_abs();
        while left > 0 {
            let c = left.min(chunk as u64);
            let m = (n as i128).pow(c as u32) as i64;
            y = if j > 0 { mul_small(ctx, &y, m)? } else { div_small(ctx, &y, m)? };
            left -= c;
        }
        return Ok(y);
    }
    let tw = ctx.digits() + 2 + guard_digits(ctx.base(), j.unsigned_abs() as u128);
    let pow_rule = match (ctx.rounding_rule(), j > 0) {
        (RoundingRule::Down, true) | (RoundingRule::Up, false) => RoundingRule::Down,
        (RoundingRule::Up, true) | (RoundingRule::Down, false) => RoundingRule::Up,
        _ => RoundingRule::Truncate,
    };
    let w = ctx.work(tw).with_rule(pow_rule);
    let nn = from_i64(&w, n)?;
    let p = crate::elem::pow_int(&w, &nn, j.abs())?;
    if j > 0 {
        mul(ctx, x, &p)
    } else {
        div(ctx, x, &p)
    }
}

pub fn div(ctx: &Context, x: &MpFloat, y: &MpFloat) -> Result<MpFloat> {
    if y.is_zero() {
        return Err(MpError::DivisionByZero);
    }
    if x.is_zero() {
        return Ok(MpFloat::zero());
    }
    let t = ctx.digits();
    if ctx.rounding_rule() != RoundingRule::Truncate || t <= ctx.div_crossover() {
        return kernel::round_ratio(ctx, &x.exact(), &y.exact(), Dir::of(ctx.rounding_rule()), t);
    }
    let r = recip_newton(&ctx.work(t + 2), y)?;
    mul(ctx, x, &r)
}

pub fn div_small(ctx: &Context, x: &MpFloat, i: i64) -> Result<MpFloat> {
    if i == 0 {
        return Err(MpError::DivisionByZero);
    }
    let base = ctx.base();
    kernel::round_ratio(ctx, &x.exact(), &Exact::from_i128(i as i128, base), Dir::of(ctx.rounding_rule()), ctx.digits())
}

pub fn recip(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() {
        return Err(MpError::DivisionByZero);
    }
    let t = ctx.digits();
    if ctx.rounding_rule() != RoundingRule::Truncate || t <= ctx.div_crossover() {
        return kernel::round_ratio(ctx, &Exact::from_i128(1, ctx.base()), &x.exact(), Dir::of(ctx.rounding_rule()), t);
    }
    let r = recip_newton(&ctx.work(t + 2), x)?;
    crate::repr::move_precision(ctx, &r, t)
}

/// Division-free Newton iteration `y <- y + y(1 - xy)` with precision doubling.
pub(crate) fn recip_newton(w: &Context, x: &MpFloat) -> Result<MpFloat> {
    let t = w.digits();
    let (m, e) = mantissa_f64(w, x);
    let mut y = from_f64(&seed_context(w), 1.0 / m)?.shifted(-e);
    for p in precision_ladder(w.base(), t) {
        let wp = w.work(p);
        let xp = crate::repr::move_precision(&wp, x, p)?;
        let xy = mul(&wp, &xp, &y)?;
        let r = sub(&wp, &one(), &xy)?;
        let d = mul(&wp, &y, &r)?;
        y = add(&wp, &y, &d)?;
    }
    Ok(y)
}

/// Increasing precisions for Newton iterations ending with two steps at `t`.
/// Context for a Newton starting value taken from an `f64`, keeping about 48 bits.
pub(crate) fn seed_context(w: &Context) -> Context {
    w.work(((48.0 / (w.base() as f64).log2()).ceil() as usize).max(4))
}

pub(crate) fn precision_ladder(base: u64, t: usize) -> Vec<usize> {
    let start = ((40.0 / (base as f64).log2()).floor() as usize).max(2);
    let mut v = vec![t, t];
    let mut p = t;
    while p > start {
        p = p / 2 + 1;
        v.push(p);
        if p <= 3 {
            break;
        }
    }
    v.reverse();
    v
}

/// Leading digits as a float in `[1/B, 1)` together with the exponent.
pub(crate) fn mantissa_f64(ctx: &Context, x: &MpFloat) -> (f64, i64) {
    let b = ctx.base() as f64;
    let mut f = 0.0;
    let mut scale = 1.0;
    for &d in x.digits() {
        scale /= b;
        f += d as f64 * scale;
        if scale < 1e-20 {
            break;
        }
    }
    (f * x.sign() as f64, x.exponent())
}

pub(crate) fn one() -> MpFloat {
    MpFloat::raw(1, 1, vec![1, 0])
}

pub fn from_i64(ctx: &Context, i: i64) -> Result<MpFloat> {
    kernel::round_exact(ctx, &Exact::from_i128(i as i128, ctx.base()), Dir::of(ctx.rounding_rule()), ctx.digits())
}

/// Exact conversion of a finite float, rounded to the context.
pub(crate) fn from_f64(ctx: &Context, v: f64) -> Result<MpFloat> {
    kernel::round_f64(ctx, v, Dir::of(ctx.rounding_rule()), ctx.digits())
}

/// `(xr + i xi)(yr + i yi)` with truncated arithmetic.
pub fn complex_mul(
    ctx: &Context,
    xr: &MpFloat,
    xi: &MpFloat,
    yr: &MpFloat,
    yi: &MpFloat,
) -> Result<(MpFloat, MpFloat)> {
    let c = ctx.with_rule(RoundingRule::Truncate);
    let zr = sub(&c, &mul(&c, xr, yr)?, &mul(&c, xi, yi)?)?;
    let zi = add(&c, &mul(&c, xr, yi)?, &mul(&c, xi, yr)?)?;
    Ok((zr, zi))
}
