//! The multiple-precision number, its packed form, and field-level access.

use std::fmt;

use crate::context::Context;
use crate::error::{MpError, Result};
use crate::kernel::{self, Dir, Exact};

/// A normalised floating-point number `sign * B^exp * 0.d1 d2 ... dT` in the base of
/// the context that produced it.
///
/// The first digit of a nonzero number is at least 1. Zero has sign 0, exponent 0
/// and no digits, so equality of values at one precision is equality of structs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MpFloat {
    sign: i8,
    exp: i64,
    digits: Vec<u32>,
}

impl fmt::Debug for MpFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == 0 {
            return write!(f, "MpFloat(0)");
        }
        write!(f, "MpFloat({}{:?} e{})", if self.sign < 0 { "-" } else { "+" }, self.digits, self.exp)
    }
}

impl MpFloat {
    pub fn zero() -> MpFloat {
        MpFloat { sign: 0, exp: 0, digits: Vec::new() }
    }

    pub(crate) fn raw(sign: i8, exp: i64, digits: Vec<u32>) -> MpFloat {
        debug_assert!(sign != 0 && digits.first().is_some_and(|&d| d > 0));
        MpFloat { sign, exp, digits }
    }

    /// Build a number from its fields, checking normalisation, digit range,
    /// digit count and exponent range against `ctx`.
    pub fn from_parts(ctx: &Context, sign: i8, exp: i64, digits: &[u32]) -> Result<MpFloat> {
        if sign == 0 {
            return Ok(MpFloat::zero());
        }
        if !(sign == 1 || sign == -1)
            || digits.len() != ctx.digits()
            || digits[0] == 0
            || digits.iter().any(|&d| d as u64 >= ctx.base())
            || exp > ctx.max_exp()
            || exp < 1 - ctx.max_exp()
        {
            return Err(MpError::Range);
        }
        Ok(MpFloat { sign, exp, digits: digits.to_vec() })
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// -1, 0 or +1.
    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// The stored exponent (0 for zero).
    pub fn exponent(&self) -> i64 {
        self.exp
    }

    /// Digits, most significant first; empty for zero.
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn precision(&self) -> usize {
        self.digits.len()
    }

    pub fn neg(&self) -> MpFloat {
        MpFloat { sign: -self.sign, exp: self.exp, digits: self.digits.clone() }
    }

    pub fn abs(&self) -> MpFloat {
        MpFloat { sign: self.sign.abs(), exp: self.exp, digits: self.digits.clone() }
    }

    pub(crate) fn exact(&self) -> Exact {
        Exact::from_mp(self)
    }

    /// Multiply by `B^k` without rounding. Only for internal use where the range is
    /// known to be safe.
    pub(crate) fn shifted(&self, k: i64) -> MpFloat {
        if self.is_zero() {
            return MpFloat::zero();
        }
        MpFloat { sign: self.sign, exp: self.exp + k, digits: self.digits.clone() }
    }
}

/// A number stored two digits per word: word 0 holds the sign and the first two
/// digits, word 1 the exponent, the rest the remaining digit pairs. Zero is a single
/// zero word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PackedMp {
    words: Vec<i64>,
}

impl PackedMp {
    pub fn words(&self) -> &[i64] {
        &self.words
    }

    pub fn from_words(words: Vec<i64>) -> PackedMp {
        PackedMp { words }
    }

    pub fn is_zero(&self) -> bool {
        self.words.first().is_none_or(|&w| w == 0)
    }
}

/// Number of words in the packed form of a `t`-digit number.
pub fn packed_len(t: usize) -> usize {
    t.div_ceil(2) + 1
}

pub fn pack(ctx: &Context, x: &MpFloat) -> PackedMp {
    if x.is_zero() {
        return PackedMp { words: vec![0] };
    }
    let b = ctx.base() as i64;
    let d = x.digits();
    let pair = |i: usize| -> i64 {
        let hi = d.get(i).copied().unwrap_or(0) as i64;
        let lo = d.get(i + 1).copied().unwrap_or(0) as i64;
        hi * b + lo
    };
    let mut words = Vec::with_capacity(packed_len(d.len()));
    words.push(x.sign() as i64 * pair(0));
    words.push(x.exponent());
    let mut i = 2;
    while i < d.len() {
        words.push(pair(i));
        i += 2;
    }
    PackedMp { words }
}

pub fn unpack(ctx: &Context, p: &PackedMp) -> Result<MpFloat> {
    if p.is_zero() {
        return Ok(MpFloat::zero());
    }
    let t = ctx.digits();
    let b = ctx.base() as i64;
    if p.words.len() != packed_len(t) {
        return Err(MpError::Format(format!(
            "packed length {} does not match {} digits",
            p.words.len(),
            t
        )));
    }
    let sign: i8 = if p.words[0] < 0 { -1 } else { 1 };
    let mut digits = Vec::with_capacity(t + 1);
    let mut push_pair = |w: i64| -> Result<()> {
        if !(0..b * b).contains(&w) {
            return Err(MpError::Format(format!("packed word {w} out of range")));
        }
        digits.push((w / b) as u32);
        digits.push((w % b) as u32);
        Ok(())
    };
    push_pair(p.words[0].abs())?;
    for &w in &p.words[2..] {
        push_pair(w)?;
    }
    if digits.len() > t && digits[t] != 0 {
        return Err(MpError::Format("nonzero padding digit".into()));
    }
    digits.truncate(t);
    if digits[0] == 0 {
        return Err(MpError::Format("unnormalised packed number".into()));
    }
    let exp = p.words[1];
    if exp > ctx.max_exp() || exp < 1 - ctx.max_exp() {
        return Err(MpError::Format(format!("exponent {exp} out of range")));
    }
    Ok(MpFloat { sign, exp, digits })
}

/// Round `x` to `t` digits under the context's rule (or pad it exactly).
pub fn move_precision(ctx: &Context, x: &MpFloat, t: usize) -> Result<MpFloat> {
    if t < 2 {
        return Err(MpError::Config("precision must be at least 2".into()));
    }
    kernel::round_exact(ctx, &x.exact(), Dir::of(ctx.rounding_rule()), t)
}

/// A number whose digits may exceed the base or start with zeros, as produced by
/// digit-level arithmetic before normalisation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unnormalized {
    pub sign: i8,
    /// Exponent applying to the first entry of `digits`.
    pub exp: i64,
    /// Nonnegative digit values, most significant first.
    pub digits: Vec<u64>,
}

/// Propagate carries, normalise and round an [`Unnormalized`] value.
pub fn normalize_round(ctx: &Context, u: &Unnormalized) -> Result<MpFloat> {
    let base = ctx.base();
    if u.sign == 0 {
        return Ok(MpFloat::zero());
    }
    let mut mag: Vec<u64> = Vec::with_capacity(u.digits.len() + 4);
    let mut carry: u128 = 0;
    for &d in u.digits.iter().rev() {
        let s = d as u128 + carry;
        mag.push((s % base as u128) as u64);
        carry = s / base as u128;
    }
    while carry > 0 {
        mag.push((carry % base as u128) as u64);
        carry /= base as u128;
    }
    let x = Exact::from_nat(u.sign < 0, mag, u.exp - u.digits.len() as i64);
    kernel::round_exact(ctx, &x, Dir::of(ctx.rounding_rule()), ctx.digits())
}

/// Exponent for reporting: zero reports `-M`.
pub fn exponent_of(ctx: &Context, x: &MpFloat) -> i64 {
    if x.is_zero() {
        -ctx.max_exp()
    } else {
        x.exponent()
    }
}

/// The `n`-th digit, counting from 1 at the most significant end.
pub fn digit_of(ctx: &Context, x: &MpFloat, n: usize) -> Result<u32> {
    if n == 0 || n > ctx.digits() {
        return Err(MpError::Range);
    }
    Ok(x.digits().get(n - 1).copied().unwrap_or(0))
}

/// Replace the sign. Setting 0 gives zero; zero cannot be given a nonzero sign.
pub fn set_sign(x: &MpFloat, sign: i8) -> Result<MpFloat> {
    match sign {
        0 => Ok(MpFloat::zero()),
        1 | -1 if !x.is_zero() => Ok(MpFloat { sign, exp: x.exp, digits: x.digits.clone() }),
        _ => Err(MpError::Range),
    }
}

/// Replace the exponent, applying the overflow/underflow policy.
pub fn set_exponent(ctx: &Context, x: &MpFloat, exp: i64) -> Result<MpFloat> {
    if x.is_zero() {
        return Ok(MpFloat::zero());
    }
    kernel::finish_range(ctx, x.sign < 0, exp, x.digits.clone())
}

/// Replace the `n`-th digit (1-based). The leading digit may not become zero.
pub fn set_digit(ctx: &Context, x: &MpFloat, n: usize, value: u32) -> Result<MpFloat> {
    if x.is_zero() || n == 0 || n > x.precision() || value as u64 >= ctx.base() || (n == 1 && value == 0) {
        return Err(MpError::Range);
    }
    let mut y = x.clone();
    y.digits[n - 1] = value;
    Ok(y)
}
