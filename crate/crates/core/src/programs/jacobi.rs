use crate::context::Context;
use crate::convio;
use crate::error::{domain, Result};
use crate::repr::MpFloat;
use crate::{arith, elem, special};

/// `sqrt(x) * sum over all integers n of exp(-pi (n x)^2)`, for `x > 0`.
///
/// Summed directly: the terms `exp(-pi n^2 x^2)` are built up by repeated
/// multiplication, and the loop stops once the exponent of the newest term is
/// `T` below that of the sum. The number of terms grows like `1/x`.
pub fn jacobi_fn(ctx: &Context, x: &MpFloat) -> Result<MpFloat> {
    if x.sign() <= 0 {
        return Err(domain("jacobi_fn needs x > 0"));
    }
    let pi = special::pi(ctx)?;
    let tm0 = elem::exp(ctx, &arith::mul(ctx, &arith::mul(ctx, &pi, x)?, x)?.neg())?;
    let mut tm = tm0.clone();
    let mut pr = tm0.clone();
    let fac = arith::mul(ctx, &tm0, &tm0)?;
    let mut sum = MpFloat::zero();
    let t = ctx.digits() as i64;
    loop {
        sum = arith::add(ctx, &sum, &tm)?;
        pr = arith::mul(ctx, &pr, &fac)?;
        tm = arith::mul(ctx, &tm, &pr)?;
        if tm.is_zero() || sum.exponent() - tm.exponent() >= t {
            break;
        }
    }
    let twice = arith::add_small(ctx, &arith::mul_small(ctx, &sum, 2)?, 1)?;
    arith::mul(ctx, &elem::sqrt(ctx, x)?, &twice)
}

#[derive(Debug, Clone)]
pub struct JacobiReport {
    pub x: MpFloat,
    pub fn_x: MpFloat,
    pub fn_recip: MpFloat,
    /// `(FN(x) - FN(1/x)) / FN(x)`.
    pub rel_diff: MpFloat,
}

/// Evaluate both sides of `FN(x) = FN(1/x)` and their relative difference.
pub fn jacobi(ctx: &Context, x: &MpFloat) -> Result<JacobiReport> {
    let fn_x = jacobi_fn(ctx, x)?;
    let fn_recip = jacobi_fn(ctx, &arith::recip(ctx, x)?)?;
    let rel_diff = arith::div(ctx, &arith::sub(ctx, &fn_x, &fn_recip)?, &fn_x)?;
    Ok(JacobiReport { x: x.clone(), fn_x, fn_recip, rel_diff })
}

impl JacobiReport {
    /// Four lines: `x`, `FN(x)` and `FN(1/x)` to 40 significant places (fewer if
    /// the precision does not carry 40) and the relative difference to 6.
    pub fn render(&self, ctx: &Context) -> Result<String> {
        let sig = convio::significant_places(ctx).clamp(2, 40);
        Ok(format!(
            "x         = {}\nfn(x)     = {}\nfn(1/x)   = {}\nrel. diff = {}\n",
            convio::format_sci(ctx, &self.x, sig)?,
            convio::format_sci(ctx, &self.fn_x, sig)?,
            convio::format_sci(ctx, &self.fn_recip, sig)?,
            convio::format_sci(ctx, &self.rel_diff, 6)?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_holds() {
        let ctx = Context::init(30, 32).unwrap();
        let bound = convio::parse(&ctx, "1E-24").unwrap();
        for s in [".5", ".3", "1.+1", "1.2345678901234567890123456789012345678901234567890123456789"] {
            let r = jacobi(&ctx, &convio::parse(&ctx, s).unwrap()).unwrap();
            assert!(arith::compare_magnitude(&r.rel_diff, &bound).is_lt(), "{s}: {:?}", r.rel_diff);
        }
    }

    #[test]
    fn one_is_symmetric() {
        let ctx = Context::init(20, 32).unwrap();
        let r = jacobi(&ctx, &arith::from_i64(&ctx, 1).unwrap()).unwrap();
        assert!(r.rel_diff.is_zero());
        assert!(r.render(&ctx).unwrap().ends_with("rel. diff = 0.00000E+0000\n"));
    }

    #[test]
    fn rejects_nonpositive() {
        let ctx = Context::init(20, 32).unwrap();
        assert!(jacobi_fn(&ctx, &MpFloat::zero()).is_err());
    }
}
