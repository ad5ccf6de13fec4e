use crate::arith;
use crate::context::Context;
use crate::error::{MpError, Result};
use crate::repr::MpFloat;

/// The nearest native float, roughly: the conversion is not correctly rounded.
/// `OutOfRange` when the value would overflow or underflow an `f64`.
pub fn to_f64(ctx: &Context, x: &MpFloat) -> Result<f64> {
    if x.is_zero() {
        return Ok(0.0);
    }
    let (m, e) = arith::mantissa_f64(ctx, x);
    let b = ctx.base() as f64;
    let log2 = m.abs().log2() + e as f64 * b.log2();
    if !(-1074.0..1024.0).contains(&log2) {
        return Err(MpError::OutOfRange);
    }
    let mut n: u128 = 0;
    let mut used = 0i64;
    for &d in x.digits() {
        if n >= 1 << 100 {
            break;
        }
        n = n * ctx.base() as u128 + d as u128;
        used += 1;
    }
    let v = n as f64;
    let k = x.exponent() - used;
    let r = if k >= 0 {
        let half = k as i32 / 2;
        v * b.powi(half) * b.powi(k as i32 - half)
    } else if -k < 60 && b.powi(-k as i32) < 9.0e15 {
        v / b.powi(-k as i32)
    } else {
        let half = k as i32 / 2;
        v * b.powi(half) * b.powi(k as i32 - half)
    };
    Ok(if x.sign() < 0 { -r } else { r })
}

/// Exact conversion of a finite float, then rounding under the context's rule.
/// Exact whenever `B` is a power of two and the float fits in `T` digits.
pub fn from_f64(ctx: &Context, v: f64) -> Result<MpFloat> {
    arith::from_f64(ctx, v)
}

/// Exact for `|i| <= B^T`; rounded under the context's rule beyond.
pub fn from_small_int(ctx: &Context, i: i64) -> Result<MpFloat> {
    arith::from_i64(ctx, i)
}

/// The integer part, truncated toward zero; `OutOfRange` beyond `MXINT`.
pub fn to_small_int(ctx: &Context, x: &MpFloat) -> Result<i64> {
    arith::to_small_int(ctx, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let c = Context::new(10, 6, 100).unwrap();
        assert_eq!(to_f64(&c, &from_small_int(&c, 7).unwrap()).unwrap(), 7.0);
        assert!(from_small_int(&c, 0).unwrap().is_zero());
        assert_eq!(to_small_int(&c, &from_small_int(&c, -999_999).unwrap()).unwrap(), -999_999);
        let r = to_f64(&c, &from_f64(&c, 0.125).unwrap()).unwrap();
        assert_eq!(r, 0.125);
    }

    #[test]
    fn binary_base_is_exact_for_halves() {
        let c = Context::new(1 << 10, 6, 100).unwrap();
        let h = from_f64(&c, 0.5).unwrap();
        assert_eq!(h.digits()[0], 512);
        assert_eq!(to_f64(&c, &h).unwrap(), 0.5);
        let v = 1.0e300_f64;
        assert_eq!(to_f64(&c, &from_f64(&c, v).unwrap()).unwrap(), v);
    }

    #[test]
    fn range_errors() {
        let c = Context::new(10, 6, 1000).unwrap();
        let big = from_small_int(&c, 10).unwrap();
        let huge = crate::elem::pow_int(&c, &big, 400).unwrap();
        assert_eq!(to_f64(&c, &huge), Err(MpError::OutOfRange));
        assert_eq!(from_f64(&c, f64::NAN), Err(MpError::OutOfRange));
    }
}
