use std::fmt;
use std::str::FromStr;

use crate::context::Context;
use crate::convio;
use crate::elem;
use crate::error::{config, MpError, Result};
use crate::repr::MpFloat;
use crate::{arith, special};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstantName {
    Pi,
    /// `exp(pi * sqrt(163))`, computed as the cube of [`ConstantName::Ramanujan3`].
    Ramanujan,
    /// `exp(pi * sqrt(163/9))`.
    Ramanujan3,
    Euler,
    Eps,
    MaxReal,
    MinReal,
}

impl ConstantName {
    pub const ALL: [ConstantName; 7] = [
        ConstantName::Pi,
        ConstantName::Ramanujan,
        ConstantName::Ramanujan3,
        ConstantName::Euler,
        ConstantName::Eps,
        ConstantName::MaxReal,
        ConstantName::MinReal,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ConstantName::Pi => "pi",
            ConstantName::Ramanujan => "ramanujan",
            ConstantName::Ramanujan3 => "ramanujan3",
            ConstantName::Euler => "euler",
            ConstantName::Eps => "eps",
            ConstantName::MaxReal => "maxr",
            ConstantName::MinReal => "minr",
        }
    }

    /// Decimal places before the point, for sizing the working precision.
    pub fn integer_places(self) -> u32 {
        match self {
            ConstantName::Ramanujan => 18,
            ConstantName::Ramanujan3 => 6,
            _ => 1,
        }
    }

    /// Whether the value is printed in fixed rather than scientific form.
    pub fn is_fixed(self) -> bool {
        !matches!(self, ConstantName::Eps | ConstantName::MaxReal | ConstantName::MinReal)
    }
}

impl fmt::Display for ConstantName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConstantName {
    type Err = MpError;

    fn from_str(s: &str) -> Result<Self> {
        ConstantName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| config(format!("unknown constant {s:?}")))
    }
}

/// `exp(pi * sqrt(163/9))`: the square root of the rational, times pi, then exp.
pub fn ramanujan3(ctx: &Context) -> Result<MpFloat> {
    let pi = special::pi(ctx)?;
    let x = elem::pow_rational(ctx, 163, 9, 1, 2)?;
    elem::exp(ctx, &arith::mul(ctx, &x, &pi)?)
}

pub fn constant(ctx: &Context, name: ConstantName) -> Result<MpFloat> {
    match name {
        ConstantName::Pi => special::pi(ctx),
        ConstantName::Ramanujan3 => ramanujan3(ctx),
        ConstantName::Ramanujan => elem::pow_int(ctx, &ramanujan3(ctx)?, 3),
        ConstantName::Euler => special::euler_gamma(ctx),
        ConstantName::Eps => Ok(ctx.epsilon()),
        ConstantName::MaxReal => Ok(ctx.max_real()),
        ConstantName::MinReal => Ok(ctx.min_real()),
    }
}

/// The context used for a constant printed to `places` decimals: ten decimals
/// of margin beyond the last printed place, at least as many as the integer
/// part needs.
pub fn constant_context(name: ConstantName, places: u32, word_bits: u32) -> Result<Context> {
    Context::init(places + 10 + name.integer_places() - 1, word_bits)
}

/// The constant written with `places` digits after the point in radix
/// `out_base` (fixed form), or with `places` significant digits (scientific
/// form, for eps, maxr and minr), leading blanks removed.
pub fn constant_text(ctx: &Context, name: ConstantName, places: usize) -> Result<String> {
    let x = constant(ctx, name)?;
    let text = if name.is_fixed() {
        let width = places + name.integer_places() as usize + 3;
        convio::format_fixed(ctx, &x, width, places as i64)?
    } else {
        let sig = places.clamp(2, convio::significant_places(ctx).max(2));
        convio::format_sci(ctx, &x, sig)?
    };
    Ok(text.trim_start().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for c in ConstantName::ALL {
            assert_eq!(c.as_str().parse::<ConstantName>().unwrap(), c);
        }
        assert!("tau".parse::<ConstantName>().is_err());
    }

    #[test]
    fn short_values() {
        let ctx = constant_context(ConstantName::Pi, 20, 32).unwrap();
        assert_eq!(constant_text(&ctx, ConstantName::Pi, 20).unwrap(), "3.14159265358979323846");
        assert_eq!(constant_text(&ctx, ConstantName::Euler, 20).unwrap(), "0.57721566490153286061");
        let r = constant_context(ConstantName::Ramanujan, 10, 32).unwrap();
        assert_eq!(constant_text(&r, ConstantName::Ramanujan, 10).unwrap(), "262537412640768744.0000000000");
    }

    #[test]
    fn eps_is_scientific() {
        let ctx = Context::new(10, 5, 50).unwrap();
        assert_eq!(constant_text(&ctx, ConstantName::Eps, 5).unwrap(), "1.0100E-0004");
        assert_eq!(constant_text(&ctx, ConstantName::MaxReal, 5).unwrap(), "9.9999E+0049");
        assert_eq!(constant_text(&ctx, ConstantName::MinReal, 5).unwrap(), "1.0000E-0050");
    }
}
