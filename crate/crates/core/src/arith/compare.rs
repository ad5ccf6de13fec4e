use std::cmp::Ordering;

use crate::context::Context;
use crate::error::Result;
use crate::kernel::Exact;
use crate::repr::MpFloat;

use super::Rational;

/// Exact three-way comparison.
pub fn compare(x: &MpFloat, y: &MpFloat) -> Ordering {
    if x.sign() != y.sign() {
        return x.sign().cmp(&y.sign());
    }
    if x.is_zero() {
        return Ordering::Equal;
    }
    let mag = compare_magnitude(x, y);
    if x.sign() > 0 {
        mag
    } else {
        mag.reverse()
    }
}

/// Compare `|x|` with `|y|`.
pub fn compare_magnitude(x: &MpFloat, y: &MpFloat) -> Ordering {
    match (x.is_zero(), y.is_zero()) {
        (true, true) => return Ordering::Equal,
        (true, false) => return Ordering::Less,
        (false, true) => return Ordering::Greater,
        _ => {}
    }
    if x.exponent() != y.exponent() {
        return x.exponent().cmp(&y.exponent());
    }
    let (a, b) = (x.digits(), y.digits());
    for i in 0..a.len().max(b.len()) {
        let (u, v) = (a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0));
        if u != v {
            return u.cmp(&v);
        }
    }
    Ordering::Equal
}

pub fn compare_small(ctx: &Context, x: &MpFloat, i: i64) -> Ordering {
    x.exact().cmp(&Exact::from_i128(i as i128, ctx.base()))
}

/// Compare `x` with `q` by cross-multiplication; the quotient is never formed.
pub fn compare_rational(ctx: &Context, x: &MpFloat, q: Rational) -> Ordering {
    let b = ctx.base();
    x.exact().mul_small(q.den() as u64, b).cmp(&Exact::from_i128(q.num() as i128, b))
}

pub fn eq(x: &MpFloat, y: &MpFloat) -> bool {
    compare(x, y) == Ordering::Equal
}
pub fn ne(x: &MpFloat, y: &MpFloat) -> bool {
    compare(x, y) != Ordering::Equal
}
pub fn lt(x: &MpFloat, y: &MpFloat) -> bool {
    compare(x, y) == Ordering::Less
}
pub fn le(x: &MpFloat, y: &MpFloat) -> bool {
    compare(x, y) != Ordering::Greater
}
pub fn gt(x: &MpFloat, y: &MpFloat) -> bool {
    compare(x, y) == Ordering::Greater
}
pub fn ge(x: &MpFloat, y: &MpFloat) -> bool {
    compare(x, y) != Ordering::Less
}

/// `|x| * sign(y)`, zero when `y` is zero.
pub fn sign_transfer(x: &MpFloat, y: &MpFloat) -> MpFloat {
    match y.sign() {
        0 => MpFloat::zero(),
        1 => x.abs(),
        _ => x.abs().neg(),
    }
}

pub fn min(x: &MpFloat, y: &MpFloat) -> MpFloat {
    if gt(x, y) {
        y.clone()
    } else {
        x.clone()
    }
}

pub fn max(x: &MpFloat, y: &MpFloat) -> MpFloat {
    if lt(x, y) {
        y.clone()
    } else {
        x.clone()
    }
}

/// Positive difference `max(0, x - y)`, rounded as subtraction.
pub fn dim(ctx: &Context, x: &MpFloat, y: &MpFloat) -> Result<MpFloat> {
    if gt(x, y) {
        super::sub(ctx, x, y)
    } else {
        Ok(MpFloat::zero())
    }
}
