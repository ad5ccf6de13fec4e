use crate::arith;
use crate::context::Context;
use crate::elem::{exact_value, exp_work, finish, log2_estimate, negated_with, one, pi_work, root_work};
use crate::error::Result;
use crate::kernel::guard_digits;
use crate::repr::MpFloat;

use super::{ln_base, work_for};

const ERF_ULPS: u64 = 512;

fn square_estimate(ctx: &Context, x: &MpFloat) -> f64 {
    (2.0 * log2_estimate(ctx, x)).exp2()
}

/// Working context for an argument `x`, with extra digits when `exp(-x^2)` is large
/// in magnitude relative to the error budget.
fn erf_work(ctx: &Context, x: &MpFloat) -> Context {
    let x2 = square_estimate(ctx, x).min(1e30);
    let w = work_for(ctx, 64 * ERF_ULPS as u128);
    w.work(w.digits() + guard_digits(ctx.base(), x2 as u128 + 2))
}

/// Whether the asymptotic series reaches working accuracy at `x`.
fn asymptotic(w: &Context, x: &MpFloat) -> bool {
    square_estimate(w, x) > (w.digits() as f64 + 2.0) * ln_base(w)
}

fn sqrt_pi(w: &Context) -> Result<MpFloat> {
    root_work(w, &pi_work(w)?, 2)
}

/// `erf x` for `x > 0` by `2/sqrt(pi) e^(-x^2) sum 2^k x^(2k+1) / (1 3 ... (2k+1))`.
fn erf_series(w: &Context, x: &MpFloat) -> Result<MpFloat> {
    let t = w.digits() as i64;
    let x2 = arith::mul(w, x, x)?;
    let two_x2 = arith::mul_small(w, &x2, 2)?;
    let mut term = x.clone();
    let mut sum = x.clone();
    let mut k = 1i64;
    loop {
        term = arith::div_small(w, &arith::mul(w, &term, &two_x2)?, 2 * k + 1)?;
        sum = arith::add(w, &sum, &term)?;
        if term.is_zero() || (term.exponent() < sum.exponent() - t - 1 && arith::compare_small(w, &two_x2, 2 * k + 1).is_lt()) {
            break;
        }
        k += 1;
    }
    let e = exp_work(w, &x2.neg())?;
    let s = arith::mul(w, &arith::mul_small(w, &sum, 2)?, &e)?;
    arith::div(w, &s, &sqrt_pi(w)?)
}

/// `erfc x` for large `x > 0` by `e^(-x^2)/(x sqrt(pi)) sum (-1)^k (2k-1)!! / (2x^2)^k`.
fn erfc_asymptotic(w: &Context, x: &MpFloat) -> Result<MpFloat> {
    let x2 = arith::mul(w, x, x)?;
    let two_x2 = arith::mul_small(w, &x2, 2)?;
    let sum = alternating_asymptotic(w, &two_x2)?;
    let e = exp_work(w, &x2.neg())?;
    let d = arith::mul(w, x, &sqrt_pi(w)?)?;
    arith::div(w, &arith::mul(w, &e, &sum)?, &d)
}

/// `sum_k (-1)^k (2k-1)!! / y^k`, stopped at its smallest term.
fn alternating_asymptotic(w: &Context, y: &MpFloat) -> Result<MpFloat> {
    let t = w.digits() as i64;
    let mut term = one();
    let mut sum = one();
    let mut k = 1i64;
    loop {
        let next = arith::div(w, &arith::mul_small(w, &term, 2 * k - 1)?, y)?.neg();
        if next.is_zero() || next.exponent() < -t - 1 || next.exponent() > term.exponent() {
            return Ok(sum);
        }
        sum = arith::add(w, &sum, &next)?;
        term = next;
        k += 1;
    }
}

/// Error function.
pub fn erf(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() {
        return Ok(MpFloat::zero());
    }
    if x.sign() < 0 {
        return negated_with(ctx, |c| erf(c, &x.abs()));
    }
    let w = erf_work(ctx, x);
    let z = if asymptotic(&w, x) {
        arith::sub(&w, &one(), &erfc_asymptotic(&w, x)?)?
    } else {
        erf_series(&w, x)?
    };
    finish(ctx, &z, ERF_ULPS)
}

/// Complementary error function, accurate in the tail.
pub fn erfc(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() {
        return exact_value(ctx, &one());
    }
    let w = erf_work(ctx, x);
    let z = if x.sign() < 0 {
        let ax = x.abs();
        let e = if asymptotic(&w, &ax) {
            arith::sub(&w, &one(), &erfc_asymptotic(&w, &ax)?)?
        } else {
            erf_series(&w, &ax)?
        };
        arith::add(&w, &one(), &e)?
    } else if asymptotic(&w, x) {
        erfc_asymptotic(&w, x)?
    } else {
        let lost = square_estimate(ctx, x) / ln_base(ctx);
        let wl = w.work(w.digits() + lost.ceil() as usize + 1);
        let e = erf_series(&wl, x)?;
        arith::sub(&wl, &one(), &e)?
    };
    finish(ctx, &z, ERF_ULPS)
}

/// Dawson's integral `e^(-x^2) int_0^x e^(u^2) du`.
pub fn dawson(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() {
        return Ok(MpFloat::zero());
    }
    if x.sign() < 0 {
        return negated_with(ctx, |c| dawson(c, &x.abs()));
    }
    let w = erf_work(ctx, x);
    let t = w.digits() as i64;
    let x2 = arith::mul(&w, x, x)?;
    let z = if asymptotic(&w, x) {
        let two_x2 = arith::mul_small(&w, &x2, 2)?;
        let mut term = one();
        let mut sum = one();
        let mut k = 1i64;
        loop {
            let next = arith::div(&w, &arith::mul_small(&w, &term, 2 * k - 1)?, &two_x2)?;
            if next.is_zero() || next.exponent() < -t - 1 || next.exponent() > term.exponent() {
                break;
            }
            sum = arith::add(&w, &sum, &next)?;
            term = next;
            k += 1;
        }
        arith::div(&w, &sum, &arith::mul_small(&w, x, 2)?)?
    } else {
        let mut u = x.clone();
        let mut sum = x.clone();
        let mut k = 1i64;
        loop {
            u = arith::div_small(&w, &arith::mul(&w, &u, &x2)?, k)?;
            let term = arith::div_small(&w, &u, 2 * k + 1)?;
            sum = arith::add(&w, &sum, &term)?;
            if term.is_zero() || (term.exponent() < sum.exponent() - t - 1 && arith::compare_small(&w, &x2, k + 1).is_lt()) {
                break;
            }
            k += 1;
        }
        arith::mul(&w, &sum, &exp_work(&w, &x2.neg())?)?
    };
    finish(ctx, &z, ERF_ULPS)
}
