use crate::arith;
use crate::context::Context;
use crate::elem::{finish, ln_int_work, one, pi_work, root_work};
use crate::error::Result;
use crate::repr::{move_precision, MpFloat};

use super::{ln_base, work_for};

/// `pi` from Machin's formula.
pub fn pi(ctx: &Context) -> Result<MpFloat> {
    let w = work_for(ctx, 1024);
    let z = pi_work(&w)?;
    finish(ctx, &z, 8)
}

/// `pi` by the Gauss-Legendre iteration, meant as an independent check on [`pi`].
pub fn pi_gauss_legendre(ctx: &Context) -> Result<MpFloat> {
    let w = work_for(ctx, 1 << 12);
    let t = w.digits() as i64;
    let mut a = one();
    let mut b = root_work(&w, &arith::div_small(&w, &one(), 2)?, 2)?;
    let mut s = arith::div_small(&w, &one(), 4)?;
    let mut p = 1i64;
    for _ in 0..64 {
        let next = arith::div_small(&w, &arith::add(&w, &a, &b)?, 2)?;
        let d = arith::sub(&w, &a, &next)?;
        s = arith::sub(&w, &s, &arith::mul_small(&w, &arith::mul(&w, &d, &d)?, p)?)?;
        let gap = arith::sub(&w, &a, &b)?;
        b = root_work(&w, &arith::mul(&w, &a, &b)?, 2)?;
        a = next;
        p *= 2;
        if gap.is_zero() || gap.exponent() < -t / 2 - 1 {
            break;
        }
    }
    let ab = arith::add(&w, &a, &b)?;
    let z = arith::div(&w, &arith::mul(&w, &ab, &ab)?, &arith::mul_small(&w, &s, 4)?)?;
    move_precision(ctx, &z, ctx.digits())
}

/// Euler's constant by the Brent-McMillan Bessel-function scheme.
pub fn euler_gamma(ctx: &Context) -> Result<MpFloat> {
    let w = work_for(ctx, 1 << 16);
    let z = euler_work(&w)?;
    finish(ctx, &z, 256)
}

/// Euler's constant at the precision of `w`.
pub(crate) fn euler_work(w0: &Context) -> Result<MpFloat> {
    let n = (w0.digits() as f64 * ln_base(w0) / 4.0).ceil() as i64 + 2;
    let w = w0.work(w0.digits() + 2);
    let t = w.digits() as i64;
    let n2 = n * n;
    let mut a = ln_int_work(&w, n as u64)?.neg();
    let mut b = one();
    let mut u = a.clone();
    let mut v = b.clone();
    let mut k = 1i64;
    loop {
        b = arith::div_small(&w, &arith::mul_small(&w, &b, n2)?, k * k)?;
        a = arith::div_small(&w, &arith::add(&w, &arith::div_small(&w, &arith::mul_small(&w, &a, n2)?, k)?, &b)?, k)?;
        u = arith::add(&w, &u, &a)?;
        v = arith::add(&w, &v, &b)?;
        let tiny = |x: &MpFloat, s: &MpFloat| x.is_zero() || x.exponent() < s.exponent() - t - 1;
        if k > n && tiny(&a, &u) && tiny(&b, &v) {
            break;
        }
        k += 1;
    }
    move_precision(w0, &arith::div(&w, &u, &v)?, w0.digits())
}
