use crate::context::Context;
use crate::error::{MpError, Result};
use crate::kernel::{self, Dir, Exact};
use crate::nat::{self, Nat};
use crate::repr::MpFloat;

fn split(x: &MpFloat) -> (Exact, Exact) {
    let e = x.exact();
    if e.is_integer() {
        return (e, Exact::zero());
    }
    if e.top() <= 0 {
        return (Exact::zero(), e);
    }
    let k = (-e.exp) as usize;
    let int = Exact::from_nat(e.neg, e.mag[k..].to_vec(), 0);
    let fr = Exact::from_nat(e.neg, e.mag[..k].to_vec(), e.exp);
    (int, fr)
}

fn exact_result(ctx: &Context, v: &Exact) -> Result<MpFloat> {
    kernel::round_exact(ctx, v, Dir::Chop, ctx.digits())
}

/// `x - int_trunc(x)`, exact.
pub fn frac(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    exact_result(ctx, &split(x).1)
}

/// Integer part, truncated toward zero; exact.
pub fn int_trunc(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    exact_result(ctx, &split(x).0)
}

pub fn floor(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    let (i, f) = split(x);
    let i = if f.neg && !f.is_zero() { i.add(&Exact::from_i128(-1, ctx.base()), ctx.base()) } else { i };
    exact_result(ctx, &i)
}

pub fn ceil(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    let (i, f) = split(x);
    let i = if !f.neg && !f.is_zero() { i.add(&Exact::from_i128(1, ctx.base()), ctx.base()) } else { i };
    exact_result(ctx, &i)
}

pub fn is_integer(x: &MpFloat) -> bool {
    x.exact().is_integer()
}

/// Truncated integer part as a machine integer; `OutOfRange` beyond `MXINT`.
pub fn to_small_int(ctx: &Context, x: &MpFloat) -> Result<i64> {
    let (i, _) = split(x);
    if i.is_zero() {
        return Ok(0);
    }
    if i.top() > 64 {
        return Err(MpError::OutOfRange);
    }
    let mag = nat::shift_up(&i.mag, i.exp as usize);
    let v = nat::to_u128(&mag, ctx.base()).ok_or(MpError::OutOfRange)?;
    if v > ctx.max_int() as u128 {
        return Err(MpError::OutOfRange);
    }
    Ok(if i.neg { -(v as i64) } else { v as i64 })
}

/// [`to_small_int`] returning 0 when the value does not fit.
pub fn to_small_int_or_zero(ctx: &Context, x: &MpFloat) -> i64 {
    to_small_int(ctx, x).unwrap_or(0)
}

fn pow_mod(base_digit: u64, mut k: u64, m: &[u64], base: u64) -> Nat {
    let mut result: Nat = nat::divrem(&[1], m, base).1;
    let mut sq: Nat = nat::divrem(&nat::from_u128(base_digit as u128, base), m, base).1;
    while k > 0 {
        if k & 1 == 1 {
            result = nat::divrem(&nat::mul(&result, &sq, base), m, base).1;
        }
        k >>= 1;
        if k > 0 {
            sq = nat::divrem(&nat::mul(&sq, &sq, base), m, base).1;
        }
    }
    result
}

/// `x - y * int_trunc(x / y)`, computed exactly; zero when `y` is zero.
pub fn modulo(ctx: &Context, x: &MpFloat, y: &MpFloat) -> Result<MpFloat> {
    if y.is_zero() || x.is_zero() {
        return Ok(MpFloat::zero());
    }
    let base = ctx.base();
    let (a, b) = (x.exact(), y.exact());
    let e = a.exp.min(b.exp);
    let ym = nat::shift_up(&b.mag, (b.exp - e) as usize);
    let k = (a.exp - e) as u64;
    let xr = nat::divrem(&a.mag, &ym, base).1;
    let r = if k == 0 {
        xr
    } else {
        let bk = if k < 4 * ym.len() as u64 + 8 {
            nat::divrem(&nat::power_of_base(k as usize), &ym, base).1
        } else {
            pow_mod(base, k, &ym, base)
        };
        nat::divrem(&nat::mul(&xr, &bk, base), &ym, base).1
    };
    exact_result(ctx, &Exact::from_nat(a.neg, r, e))
}

fn integer_nat(ctx: &Context, x: &MpFloat) -> Result<Nat> {
    let e = x.exact();
    if !e.is_integer() {
        return Err(MpError::NotAnInteger);
    }
    if e.is_zero() {
        return Ok(Vec::new());
    }
    if e.top() > ctx.digits() as i64 {
        return Err(MpError::OutOfRange);
    }
    Ok(nat::shift_up(&e.mag, e.exp as usize))
}

fn nat_gcd(mut a: Nat, mut b: Nat, base: u64) -> Nat {
    while !nat::is_zero(&b) {
        let r = nat::divrem(&a, &b, base).1;
        a = b;
        b = r;
    }
    a
}

/// Greatest common divisor of two integers (Euclid), nonnegative.
pub fn gcd(ctx: &Context, x: &MpFloat, y: &MpFloat) -> Result<MpFloat> {
    let g = nat_gcd(integer_nat(ctx, x)?, integer_nat(ctx, y)?, ctx.base());
    exact_result(ctx, &Exact::from_nat(false, g, 0))
}

/// `(x / g, y / g)` with `g = gcd(x, y)`; both unchanged when `g` is zero.
pub fn gcd_reduce(ctx: &Context, x: &MpFloat, y: &MpFloat) -> Result<(MpFloat, MpFloat)> {
    let base = ctx.base();
    let (a, b) = (integer_nat(ctx, x)?, integer_nat(ctx, y)?);
    let g = nat_gcd(a.clone(), b.clone(), base);
    if nat::is_zero(&g) {
        return Ok((x.clone(), y.clone()));
    }
    let qa = Exact::from_nat(x.sign() < 0, nat::divrem(&a, &g, base).0, 0);
    let qb = Exact::from_nat(y.sign() < 0, nat::divrem(&b, &g, base).0, 0);
    Ok((exact_result(ctx, &qa)?, exact_result(ctx, &qb)?))
}
