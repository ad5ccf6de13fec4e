use crate::arith;
use crate::context::Context;
use crate::error::Result;
use crate::kernel::Exact;
use crate::repr::MpFloat;

use super::{exact_value, finish, finish_abs, negated_with, one, working_digits};

const HYPER_ULPS: u64 = 4096;

fn hyper_work(ctx: &Context) -> Context {
    let budget = super::exp::exp_budget(ctx) as u128 * 64 + 64 * HYPER_ULPS as u128;
    ctx.work(working_digits(ctx, budget))
}

/// `|x| < 1` in a way that is cheap to test.
fn below_one(x: &MpFloat) -> bool {
    arith::compare_magnitude(x, &one()).is_lt()
}

pub fn sinh(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() {
        return Ok(MpFloat::zero());
    }
    if x.sign() < 0 {
        return negated_with(ctx, |c| sinh(c, &x.abs()));
    }
    let w = hyper_work(ctx);
    let z = if below_one(x) {
        let e = super::expm1_work(&w, x)?;
        let q = arith::div(&w, &e, &arith::add(&w, &one(), &e)?)?;
        arith::div_small(&w, &arith::add(&w, &e, &q)?, 2)?
    } else {
        let y = super::exp_work(&w, x)?;
        arith::div_small(&w, &arith::sub(&w, &y, &arith::recip(&w, &y)?)?, 2)?
    };
    finish(ctx, &z, HYPER_ULPS)
}

pub fn cosh(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() {
        return exact_value(ctx, &one());
    }
    let x = x.abs();
    let w = hyper_work(ctx);
    let z = if below_one(&x) {
        let e = super::expm1_work(&w, &x)?;
        let q = arith::div(&w, &arith::mul(&w, &e, &e)?, &arith::add(&w, &one(), &e)?)?;
        arith::add(&w, &one(), &arith::div_small(&w, &q, 2)?)?
    } else {
        let y = super::exp_work(&w, &x)?;
        arith::div_small(&w, &arith::add(&w, &y, &arith::recip(&w, &y)?)?, 2)?
    };
    finish(ctx, &z, HYPER_ULPS)
}

pub fn tanh(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.is_zero() {
        return Ok(MpFloat::zero());
    }
    if x.sign() < 0 {
        return negated_with(ctx, |c| tanh(c, &x.abs()));
    }
    let w = hyper_work(ctx);
    let tw = w.digits() as f64;
    let lb = (ctx.base() as f64).ln();
    let xf = super::log2_estimate(ctx, x).exp2();
    if 2.0 * xf > (tw + 2.0) * lb {
        let err = Exact::from_i128(1, ctx.base()).shifted(-(w.digits() as i64));
        let mid = arith::sub(&w, &one(), &MpFloat::raw(1, 1 - w.digits() as i64, vec![1]))?;
        return finish_abs(ctx, &mid, &err);
    }
    let two_x = arith::mul_small(&w, x, 2)?;
    let half = arith::div_small(&w, &one(), 2)?;
    let z = if arith::compare_magnitude(x, &half).is_lt() {
        let e = super::expm1_work(&w, &two_x)?;
        arith::div(&w, &e, &arith::add_small(&w, &e, 2)?)?
    } else {
        let y = super::exp_work(&w, &two_x)?;
        let d = arith::div(&w, &super::int(&w, 2), &arith::add(&w, &y, &one())?)?;
        arith::sub(&w, &one(), &d)?
    };
    finish(ctx, &z, HYPER_ULPS)
}
