use crate::arith;
use crate::context::Context;
use crate::elem::{cis_work, exact_value, finish, log2_estimate, one, pi_work, pow_work, root_work};
use crate::error::Result;
use crate::kernel::guard_digits;
use crate::repr::MpFloat;

use super::{ln_base, work_for};

/// Bessel function of the first kind `J(nu, x)` for integer order.
///
/// Small `|x|` uses the power series, large `|x|` Hankel's asymptotic expansion when
/// it reaches working accuracy, and the rest Miller's backward recurrence
/// normalised by `J(0,x) + 2 J(2,x) + 2 J(4,x) + ... = 1`. Negative order or argument
/// is folded with `J(-nu, x) = J(nu, -x) = (-1)^nu J(nu, x)`.
pub fn bessel_j(ctx: &Context, nu: i64, x: &MpFloat) -> Result<MpFloat> {
    let n = nu.unsigned_abs();
    let odd = n % 2 == 1;
    let flip = odd && ((nu < 0) != (x.sign() < 0));
    let ax = x.abs();
    if ax.is_zero() {
        return if n == 0 { exact_value(ctx, &one()) } else { Ok(MpFloat::zero()) };
    }
    let w = work_for(ctx, 1 << 12);
    let z = bessel_work(&w, n, &ax)?;
    let r = finish(ctx, &z, 256)?;
    Ok(if flip { r.neg() } else { r })
}

pub(crate) fn bessel_work(w: &Context, n: u64, x: &MpFloat) -> Result<MpFloat> {
    let xf = log2_estimate(w, x).exp2();
    let l = (w.digits() as f64 + 2.0) * ln_base(w);
    if xf <= (n as f64 / 2.0).max(4.0) {
        return series(w, n, x, xf);
    }
    if xf * xf > l * l / 4.0 && n < 1 << 28 {
        if let Some(v) = hankel(w, n, x)? {
            return Ok(v);
        }
    }
    miller(w, n, x, xf)
}

/// `(x/2)^n / n! sum_k (-x^2/4)^k / (k! (n+1) ... (n+k))`.
fn series(w0: &Context, n: u64, x: &MpFloat, xf: f64) -> Result<MpFloat> {
    let w = w0.work(w0.digits() + guard_digits(w0.base(), xf.exp().min(1e30) as u128 + 1));
    let t = w.digits() as i64;
    let half = arith::div_small(&w, x, 2)?;
    let mut lead = pow_work(&w, &half, n)?;
    for i in 2..=n as i64 {
        lead = arith::div_small(&w, &lead, i)?;
    }
    let q = arith::mul(&w, &half, &half)?.neg();
    let mut term = lead.clone();
    let mut sum = lead;
    let mut k = 1i64;
    loop {
        term = arith::div_small(&w, &arith::mul(&w, &term, &q)?, k)?;
        term = arith::div_small(&w, &term, n as i64 + k)?;
        sum = arith::add(&w, &sum, &term)?;
        let small = term.is_zero() || term.exponent() < sum.exponent() - t - 1;
        if small && (k * (n as i64 + k)) as f64 > xf * xf / 4.0 {
            break;
        }
        k += 1;
    }
    Ok(sum)
}

/// Hankel's expansion, or `None` when its smallest term is not small enough.
fn hankel(w0: &Context, n: u64, x: &MpFloat) -> Result<Option<MpFloat>> {
    let w = w0.work(w0.digits() + 2);
    let t = w.digits() as i64;
    let mu = 4 * (n as i64) * (n as i64);
    let mut c = one();
    let mut p = one();
    let mut q = MpFloat::zero();
    let mut k = 1i64;
    let mut converged = false;
    loop {
        let f = mu - (2 * k - 1) * (2 * k - 1);
        let next = arith::div(&w, &arith::div_small(&w, &arith::mul_small(&w, &c, f)?, 8 * k)?, x)?;
        if next.is_zero() {
            converged = true;
            break;
        }
        if next.exponent() > c.exponent() && k as f64 > (n as f64) {
            break;
        }
        let signed = if (k / 2) % 2 == 0 { next.clone() } else { next.neg() };
        if k % 2 == 0 {
            p = arith::add(&w, &p, &signed)?;
        } else {
            q = arith::add(&w, &q, &signed)?;
        }
        if next.exponent() < -t - 1 {
            converged = true;
            break;
        }
        c = next;
        k += 1;
    }
    if !converged {
        return Ok(None);
    }
    let wx = w.work(w.digits() + x.exponent().max(0) as usize + 2);
    let pi = pi_work(&wx)?;
    let phase = arith::div_small(&wx, &arith::mul_small(&wx, &pi, 2 * n as i64 + 1)?, 4)?;
    let chi = arith::sub(&wx, x, &phase)?;
    let (cos, sin) = cis_work(&w, &chi)?;
    let amp = root_work(&w, &arith::div(&w, &arith::from_i64(&w, 2)?, &arith::mul(&w, &pi_work(&w)?, x)?)?, 2)?;
    let v = arith::sub(&w, &arith::mul(&w, &p, &cos)?, &arith::mul(&w, &q, &sin)?)?;
    Ok(Some(arith::mul(&w, &amp, &v)?))
}

/// Miller's backward recurrence from an index where the seed error is negligible.
fn miller(w0: &Context, n: u64, x: &MpFloat, xf: f64) -> Result<MpFloat> {
    let w = w0.work(w0.digits() + 2);
    let l = (w.digits() as f64 + 2.0) * ln_base(&w);
    let decay = |m: f64| if m > xf { m * (2.0 * m / (std::f64::consts::E * xf)).ln() } else { 0.0 };
    let need = l + 10.0 + decay(n as f64).max(0.0);
    let mut start = (n as f64).max(xf.ceil()) as u64 + 10;
    while decay(start as f64) < need {
        start += (start / 8).max(8);
    }
    if start % 2 == 1 {
        start += 1;
    }
    let rx = arith::recip(&w, x)?;
    let mut above = MpFloat::zero();
    let mut cur = MpFloat::raw(1, 1 - w.digits() as i64, vec![1]);
    let mut sum = MpFloat::zero();
    let mut target = if start == n { cur.clone() } else { MpFloat::zero() };
    for k in (1..=start).rev() {
        if k % 2 == 0 {
            sum = arith::add(&w, &sum, &arith::mul_small(&w, &cur, 2)?)?;
        }
        let f = arith::mul_small(&w, &arith::mul(&w, &cur, &rx)?, 2 * k as i64)?;
        let below = arith::sub(&w, &f, &above)?;
        above = cur;
        cur = below;
        if k - 1 == n {
            target = cur.clone();
        }
    }
    sum = arith::add(&w, &sum, &cur)?;
    arith::div(&w, &target, &sum)
}
