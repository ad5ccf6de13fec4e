use crate::arith;
use crate::context::Context;
use crate::elem::{exp_work, finish, ln_work, log2_estimate, one};
use crate::error::{domain, Result};
use crate::repr::MpFloat;

use super::constants::euler_work;
use super::{ln_base, work_for};

/// Exponential integral `Ei(x)` for `x != 0`.
///
/// Power series for small `|x|`, the asymptotic series once `|x|` exceeds the
/// working precision in nepers, and for `x <= -1` below that the continued
/// fraction for `E1(-x) = -Ei(x)`.
pub fn ei(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() {
        return Err(domain("ei is undefined at 0"));
    }
    let w = work_for(ctx, 1 << 12);
    let z = ei_work(&w, x)?;
    finish(ctx, &z, 256)
}

/// Logarithmic integral `li(x) = Ei(ln x)` for `x > 0`, `x != 1`.
pub fn li(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.sign() <= 0 || arith::eq(x, &one()) {
        return Err(domain("li needs x > 0 and x != 1"));
    }
    let w = work_for(ctx, 1 << 12);
    let l = ln_work(&w, x)?;
    let z = ei_work(&w, &l)?;
    finish(ctx, &z, 256)
}

pub(crate) fn ei_work(w: &Context, x: &MpFloat) -> Result<MpFloat> {
    let l = (w.digits() as f64 + 2.0) * ln_base(w);
    let ax = log2_estimate(w, x).exp2();
    if ax > l + 10.0 {
        return ei_asymptotic(w, x);
    }
    if x.sign() < 0 && ax >= 1.0 {
        return Ok(e1_fraction(w, &x.abs())?.neg());
    }
    ei_series(w, x)
}

/// `gamma + ln|x| + sum x^k / (k k!)`.
fn ei_series(w: &Context, x: &MpFloat) -> Result<MpFloat> {
    let t = w.digits() as i64;
    let mut u = one();
    let mut sum = MpFloat::zero();
    let mut k = 1i64;
    loop {
        u = arith::div_small(w, &arith::mul(w, &u, x)?, k)?;
        let term = arith::div_small(w, &u, k)?;
        sum = arith::add(w, &sum, &term)?;
        let small = term.is_zero() || term.exponent() < sum.exponent().max(0) - t - 1;
        if small && arith::compare_small(w, &x.abs(), k + 1).is_lt() {
            break;
        }
        k += 1;
    }
    let g = euler_work(w)?;
    let lx = ln_work(w, &x.abs())?;
    arith::add(w, &arith::add(w, &g, &lx)?, &sum)
}

/// `e^x / x sum k! / x^k`, stopped at its smallest term.
fn ei_asymptotic(w: &Context, x: &MpFloat) -> Result<MpFloat> {
    let t = w.digits() as i64;
    let mut term = one();
    let mut sum = one();
    let mut k = 1i64;
    loop {
        let next = arith::div(w, &arith::mul_small(w, &term, k)?, x)?;
        if next.is_zero() || next.exponent() < -t - 1 || next.exponent() > term.exponent() {
            break;
        }
        sum = arith::add(w, &sum, &next)?;
        term = next;
        k += 1;
    }
    arith::div(w, &arith::mul(w, &exp_work(w, x)?, &sum)?, x)
}

/// `E1(z)` for `z >= 1` from `e^(-z) / (z + 1 - 1/(z + 3 - 4/(z + 5 - ...)))`,
/// evaluated from the bottom at increasing depths until two depths agree.
fn e1_fraction(w: &Context, z: &MpFloat) -> Result<MpFloat> {
    let t = w.digits() as i64;
    let l = w.digits() as f64 * ln_base(w);
    let zf = log2_estimate(w, z).exp2();
    let mut depth = ((l * l) / (16.0 * zf)).ceil() as i64 + 16;
    let eval = |k_max: i64| -> Result<MpFloat> {
        let mut f = arith::add_small(w, z, 2 * k_max + 1)?;
        for k in (1..=k_max).rev() {
            let q = arith::div(w, &arith::from_i64(w, k * k)?, &f)?;
            f = arith::sub(w, &arith::add_small(w, z, 2 * k - 1)?, &q)?;
        }
        Ok(f)
    };
    let mut prev = eval(depth)?;
    loop {
        depth *= 2;
        let next = eval(depth)?;
        let d = arith::sub(w, &next, &prev)?;
        if d.is_zero() || d.exponent() < next.exponent() - t + 2 || depth > 1 << 22 {
            let e = exp_work(w, &z.neg())?;
            return arith::div(w, &e, &next);
        }
        prev = next;
    }
}
