use crate::arith;
use crate::context::{Context, RoundingRule};
use crate::error::{config, Result};
use crate::repr::MpFloat;

/// Which powers (or Chebyshev polynomials) a coefficient vector refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// Entry `i` belongs to degree `i`.
    Full,
    /// Entry `i` belongs to degree `2i + 1`.
    Odd,
    /// Entry `i` belongs to degree `2i`.
    Even,
}

impl Parity {
    /// `0`, `-1` or `+1`.
    pub fn code(self) -> i64 {
        match self {
            Parity::Full => 0,
            Parity::Odd => -1,
            Parity::Even => 1,
        }
    }

    pub fn from_code(code: i64) -> Result<Parity> {
        match code {
            0 => Ok(Parity::Full),
            -1 => Ok(Parity::Odd),
            1 => Ok(Parity::Even),
            _ => Err(config(format!("parity code {code} is not -1, 0 or 1"))),
        }
    }

    fn degree(self, i: usize) -> usize {
        match self {
            Parity::Full => i,
            Parity::Odd => 2 * i + 1,
            Parity::Even => 2 * i,
        }
    }

    fn slot(self, degree: usize) -> usize {
        match self {
            Parity::Full => degree,
            Parity::Odd => (degree - 1) / 2,
            Parity::Even => degree / 2,
        }
    }
}

/// Coefficients in the power basis or in the Chebyshev basis. In the Chebyshev
/// basis the constant term is halved on summation: `c0/2 + c1 T1 + c2 T2 + ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChebCoeffs {
    pub c: Vec<MpFloat>,
    pub parity: Parity,
}

/// Convert power-basis coefficients to Chebyshev coefficients, using
/// `x^n = 2^(1-n) sum_k C(n, k) T(n-2k, x)`.
pub fn cheb_transform(ctx: &Context, p: &ChebCoeffs) -> Result<ChebCoeffs> {
    let w = ctx.with_rule(RoundingRule::Truncate);
    let mut out = vec![MpFloat::zero(); p.c.len()];
    for (i, ci) in p.c.iter().enumerate() {
        if ci.is_zero() {
            continue;
        }
        let n = p.parity.degree(i);
        let mut weight = arith::from_i64(&w, 2)?;
        for _ in 0..n {
            weight = arith::div_small(&w, &weight, 2)?;
        }
        for k in 0..=n / 2 {
            if k > 0 {
                weight = arith::mul_small(&w, &weight, (n - k + 1) as i64)?;
                weight = arith::div_small(&w, &weight, k as i64)?;
            }
            let s = p.parity.slot(n - 2 * k);
            out[s] = arith::add(&w, &out[s], &arith::mul(&w, ci, &weight)?)?;
        }
    }
    Ok(ChebCoeffs { c: out, parity: p.parity })
}

/// Sum a Chebyshev series at `x` by Clenshaw's recurrence.
pub fn cheb_eval(ctx: &Context, c: &ChebCoeffs, x: &MpFloat) -> Result<MpFloat> {
    let w = ctx.with_rule(RoundingRule::Truncate);
    match c.parity {
        Parity::Full => clenshaw(&w, &c.c, x),
        Parity::Even => {
            let y = arith::add_small(&w, &arith::mul_small(&w, &arith::mul(&w, x, x)?, 2)?, -1)?;
            clenshaw(&w, &c.c, &y)
        }
        Parity::Odd => {
            let mut full = vec![MpFloat::zero(); 2 * c.c.len()];
            for (i, v) in c.c.iter().enumerate() {
                full[2 * i + 1] = v.clone();
            }
            clenshaw(&w, &full, x)
        }
    }
}

fn clenshaw(w: &Context, c: &[MpFloat], x: &MpFloat) -> Result<MpFloat> {
    if c.is_empty() {
        return Ok(MpFloat::zero());
    }
    let two_x = arith::mul_small(w, x, 2)?;
    let mut b1 = MpFloat::zero();
    let mut b2 = MpFloat::zero();
    for ck in c[1..].iter().rev() {
        let b0 = arith::add(w, &arith::sub(w, &arith::mul(w, &two_x, &b1)?, &b2)?, ck)?;
        b2 = b1;
        b1 = b0;
    }
    let head = arith::sub(w, &arith::mul(w, x, &b1)?, &b2)?;
    arith::add(w, &head, &arith::div_small(w, &c[0], 2)?)
}

/// `c[0] + c[1] x + ... + c[n-1] x^(n-1)` by Horner's rule. Under Down and Up the
/// result is a lower or upper bound of the exact value.
pub fn poly_eval(ctx: &Context, x: &MpFloat, coeffs: &[i64]) -> Result<MpFloat> {
    let Some((&last, rest)) = coeffs.split_last() else {
        return Ok(MpFloat::zero());
    };
    match ctx.rounding_rule() {
        RoundingRule::Down | RoundingRule::Up => {
            let lo_ctx = ctx.with_rule(RoundingRule::Down);
            let hi_ctx = ctx.with_rule(RoundingRule::Up);
            let mut lo = arith::from_i64(&lo_ctx, last)?;
            let mut hi = arith::from_i64(&hi_ctx, last)?;
            for &c in rest.iter().rev() {
                let (a, b) = if x.sign() >= 0 { (&lo, &hi) } else { (&hi, &lo) };
                let nlo = arith::add_small(&lo_ctx, &arith::mul(&lo_ctx, a, x)?, c)?;
                let nhi = arith::add_small(&hi_ctx, &arith::mul(&hi_ctx, b, x)?, c)?;
                lo = nlo;
                hi = nhi;
            }
            Ok(if ctx.rounding_rule() == RoundingRule::Down { lo } else { hi })
        }
        _ => {
            let mut y = arith::from_i64(ctx, last)?;
            for &c in rest.iter().rev() {
                y = arith::add_small(ctx, &arith::mul(ctx, &y, x)?, c)?;
            }
            Ok(y)
        }
    }
}
