use crate::context::{Context, RoundingRule};
use crate::elem::{self, finish_interval};
use crate::error::{MpError, Result};
use crate::kernel::{self, Dir, Exact};
use crate::nat;
use crate::repr::MpFloat;

use super::digits::char_digit;

/// Largest exponent magnitude handled by exact big-integer scaling.
const EXACT_SCALE_LIMIT: i128 = 20_000;

fn err(text: &str, why: &str) -> MpError {
    MpError::Parse(format!("{why} in {text:?}"))
}

fn is_blank(c: char) -> bool {
    c == ' ' || c == '\t'
}

struct Scanned {
    neg: bool,
    /// Mantissa digits, most significant first.
    digits: Vec<u64>,
    /// Digits after the point.
    frac_len: usize,
    exponent: i128,
}

fn scan(text: &str, in_base: u32) -> Result<Scanned> {
    let chars: Vec<char> = text.trim_matches(is_blank).chars().collect();
    let mut i = 0;
    let mut neg = false;
    if let Some(&c) = chars.first() {
        if c == '+' || c == '-' {
            neg = c == '-';
            i += 1;
            while i < chars.len() && is_blank(chars[i]) {
                i += 1;
            }
        }
    }
    let mut digits = Vec::new();
    let mut frac_len = 0;
    let mut point = false;
    while i < chars.len() {
        let c = chars[i];
        let d = char_digit(c, in_base);
        if d >= 0 {
            digits.push(d as u64);
            if point {
                frac_len += 1;
            }
        } else if c == '.' {
            if point {
                return Err(err(text, "second point"));
            }
            point = true;
        } else {
            break;
        }
        i += 1;
    }
    if digits.is_empty() {
        return Err(err(text, "no digits"));
    }
    let mut exponent: i128 = 0;
    if i < chars.len() {
        let mut c = chars[i];
        if matches!(c, 'E' | 'e' | 'D' | 'd' | '$') {
            i += 1;
            c = *chars.get(i).ok_or_else(|| err(text, "missing exponent"))?;
        }
        let mut eneg = false;
        if c == '+' || c == '-' {
            eneg = c == '-';
            i += 1;
        }
        if i == chars.len() {
            return Err(err(text, "missing exponent"));
        }
        for &c in &chars[i..] {
            let d = char_digit(c, in_base);
            if d < 0 {
                return Err(err(text, "unexpected character"));
            }
            exponent = (exponent * in_base as i128 + d as i128).min(i64::MAX as i128);
        }
        if eneg {
            exponent = -exponent;
        }
    }
    Ok(Scanned { neg, digits, frac_len, exponent })
}

/// Read a number written in radix `in_base`.
///
/// The grammar is an optional sign (blanks may follow it), digits with at most
/// one point, and an optional exponent introduced by `E`, `D`, `$`, `+` or `-` with no
/// blanks inside. The exponent is a power of `in_base` written in that radix.
/// Leading and trailing blanks are ignored. When `E` or `D` is a digit of the
/// input radix only a sign can introduce the exponent.
///
/// The result is correctly rounded under the context's rule whenever the decimal
/// exponent is moderate, and within one unit otherwise (with the right direction
/// under Down and Up).
pub fn parse(ctx: &Context, text: &str) -> Result<MpFloat> {
    let s = scan(text, ctx.in_base())?;
    let b = ctx.base();
    let ib = ctx.in_base() as u64;
    let le: Vec<u64> = s.digits.iter().rev().copied().collect();
    let mag = nat::rebase(&le, ib, b);
    if nat::is_zero(&mag) {
        return Ok(MpFloat::zero());
    }
    let e = s.exponent - s.frac_len as i128;
    let mant = Exact::from_nat(s.neg, mag, 0);
    let size = nat::len(&mant.mag) as f64 + e as f64 * (ib as f64).ln() / (b as f64).ln();
    if size > ctx.max_exp() as f64 + 2.0 {
        return kernel::finish_range(ctx, s.neg, ctx.max_exp() + 1, vec![1]);
    }
    if size < -(ctx.max_exp() as f64) - 2.0 {
        return ctx.note_underflow();
    }
    times_power(ctx, &mant, ib, e)
}

/// `v * radix^e` rounded under the context's rule. Moderate exponents are scaled
/// exactly; larger ones through directed bounds at extra precision.
pub(super) fn times_power(ctx: &Context, v: &Exact, radix: u64, e: i128) -> Result<MpFloat> {
    let b = ctx.base();
    let dir = Dir::of(ctx.rounding_rule());
    let t = ctx.digits();
    if e.abs() <= EXACT_SCALE_LIMIT {
        let p = Exact::from_nat(false, nat::pow(radix, e.unsigned_abs() as u64, b), 0);
        return if e >= 0 {
            kernel::round_exact(ctx, &v.mul(&p, b), dir, t)
        } else {
            kernel::round_ratio(ctx, v, &p, dir, t)
        };
    }
    if v.neg {
        let r = times_power(&ctx.with_rule(ctx.rounding_rule().reversed()), &v.clone().abs(), radix, e)?;
        return Ok(r.neg());
    }
    let e = e.clamp(i64::MIN as i128 / 2, i64::MAX as i128 / 2) as i64;
    let w = ctx.work(elem::working_digits(ctx, 1 << 16));
    let down = w.with_rule(RoundingRule::Down);
    let up = w.with_rule(RoundingRule::Up);
    let m_lo = kernel::round_exact(&w, v, Dir::Floor, w.digits())?;
    let m_hi = kernel::round_exact(&w, v, Dir::Ceil, w.digits())?;
    let r = crate::arith::from_i64(&w, radix as i64)?;
    let lo = crate::arith::mul(&down, &m_lo, &elem::pow_int(&down, &r, e)?)?;
    let hi = crate::arith::mul(&up, &m_hi, &elem::pow_int(&up, &r, e)?)?;
    let mid = crate::arith::mul(&w, &m_lo, &elem::pow_int(&w, &r, e)?)?;
    finish_interval(ctx, &lo, &hi, &mid)
}

/// [`parse`] applied to the first `in_record_len` characters of a line.
pub fn parse_record(ctx: &Context, line: &str) -> Result<MpFloat> {
    let end = line.char_indices().nth(ctx.in_record_len()).map_or(line.len(), |(i, _)| i);
    parse(ctx, line[..end].trim_end_matches(['\n', '\r']))
}
