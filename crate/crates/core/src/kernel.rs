//! Exact intermediate values and the single rounding kernel every operation ends in.

use std::cmp::Ordering;

use crate::context::{Context, RoundingRule};
use crate::error::{MpError, Result};
use crate::nat::{self, Nat};
use crate::repr::MpFloat;

/// Rounding direction applied to an exact value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Dir {
    Chop,
    Away,
    Nearest,
    Floor,
    Ceil,
}

impl Dir {
    pub(crate) fn of(rule: RoundingRule) -> Dir {
        match rule {
            RoundingRule::Truncate => Dir::Chop,
            RoundingRule::NearestEven => Dir::Nearest,
            RoundingRule::Down => Dir::Floor,
            RoundingRule::Up => Dir::Ceil,
        }
    }
}

/// Where the discarded tail beyond the supplied digits sits relative to half a unit
/// of the last supplied digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Rest {
    Zero,
    Below,
    Half,
    Above,
}

/// `(-1)^neg * mag * B^exp` with `mag` a trimmed little-endian natural number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Exact {
    pub neg: bool,
    pub mag: Nat,
    pub exp: i64,
}

impl Exact {
    pub(crate) fn zero() -> Exact {
        Exact { neg: false, mag: Vec::new(), exp: 0 }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.mag.is_empty()
    }

    pub(crate) fn from_mp(x: &MpFloat) -> Exact {
        if x.is_zero() {
            return Exact::zero();
        }
        let d = x.digits();
        let mut mag: Nat = d.iter().rev().map(|&v| v as u64).collect();
        let mut exp = x.exponent() - d.len() as i64;
        let lead = mag.iter().take_while(|&&v| v == 0).count();
        mag.drain(..lead);
        exp += lead as i64;
        nat::trim(&mut mag);
        Exact { neg: x.sign() < 0, mag, exp }
    }

    pub(crate) fn from_i128(v: i128, base: u64) -> Exact {
        Exact { neg: v < 0, mag: nat::from_u128(v.unsigned_abs(), base), exp: 0 }.normalized()
    }

    pub(crate) fn from_nat(neg: bool, mag: Nat, exp: i64) -> Exact {
        Exact { neg, mag: nat::trimmed(mag), exp }.normalized()
    }

    /// Strip low zero digits into the exponent and clear the sign of zero.
    pub(crate) fn normalized(mut self) -> Exact {
        nat::trim(&mut self.mag);
        if self.mag.is_empty() {
            return Exact::zero();
        }
        let lead = self.mag.iter().take_while(|&&v| v == 0).count();
        if lead > 0 {
            self.mag.drain(..lead);
            self.exp += lead as i64;
        }
        self
    }

    /// Exponent one past the most significant digit (`|x| < B^top`).
    pub(crate) fn top(&self) -> i64 {
        self.exp + self.mag.len() as i64
    }

    pub(crate) fn negated(mut self) -> Exact {
        if !self.is_zero() {
            self.neg = !self.neg;
        }
        self
    }

    pub(crate) fn abs(mut self) -> Exact {
        self.neg = false;
        self
    }

    pub(crate) fn sign(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.neg {
            -1
        } else {
            1
        }
    }

    pub(crate) fn mul(&self, o: &Exact, base: u64) -> Exact {
        if self.is_zero() || o.is_zero() {
            return Exact::zero();
        }
        Exact::from_nat(self.neg != o.neg, nat::mul(&self.mag, &o.mag, base), self.exp + o.exp)
    }

    pub(crate) fn mul_small(&self, m: u64, base: u64) -> Exact {
        Exact::from_nat(self.neg, nat::mul_small(&self.mag, m, base), self.exp)
    }

    /// Multiply by `B^k`.
    pub(crate) fn shifted(mut self, k: i64) -> Exact {
        if !self.is_zero() {
            self.exp += k;
        }
        self
    }

    /// Exact sum.
    pub(crate) fn add(&self, o: &Exact, base: u64) -> Exact {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(o.exp);
        let a = nat::shift_up(&self.mag, (self.exp - e) as usize);
        let b = nat::shift_up(&o.mag, (o.exp - e) as usize);
        if self.neg == o.neg {
            return Exact::from_nat(self.neg, nat::add(&a, &b, base), e);
        }
        match nat::cmp(&a, &b) {
            Ordering::Equal => Exact::zero(),
            Ordering::Greater => Exact::from_nat(self.neg, nat::sub(&a, &b, base), e),
            Ordering::Less => Exact::from_nat(o.neg, nat::sub(&b, &a, base), e),
        }
    }

    pub(crate) fn sub(&self, o: &Exact, base: u64) -> Exact {
        self.add(&o.clone().negated(), base)
    }

    /// A sum that rounds to `t` digits exactly as the true sum does in every
    /// direction. A summand lying entirely below both the lowest digit of the other
    /// operand and its `t+2`-th digit is replaced by a single unit two places lower.
    pub(crate) fn add_for_rounding(&self, o: &Exact, base: u64, t: usize) -> Exact {
        if self.is_zero() || o.is_zero() {
            return self.add(o, base);
        }
        let (big, small) = if self.top() >= o.top() { (self, o) } else { (o, self) };
        let p = big.exp.min(big.top() - t as i64 - 2);
        if small.top() <= p - 1 {
            let eps = Exact { neg: small.neg, mag: vec![1], exp: p - 2 };
            return big.add(&eps, base);
        }
        big.add(small, base)
    }

    pub(crate) fn cmp_abs(&self, o: &Exact) -> Ordering {
        match (self.is_zero(), o.is_zero()) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        if self.top() != o.top() {
            return self.top().cmp(&o.top());
        }
        let e = self.exp.min(o.exp);
        let a = nat::shift_up(&self.mag, (self.exp - e) as usize);
        let b = nat::shift_up(&o.mag, (o.exp - e) as usize);
        nat::cmp(&a, &b)
    }

    pub(crate) fn cmp(&self, o: &Exact) -> Ordering {
        match self.sign().cmp(&o.sign()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        match self.sign() {
            0 => Ordering::Equal,
            1 => self.cmp_abs(o),
            _ => o.cmp_abs(self),
        }
    }

    /// Whether the value is an integer.
    pub(crate) fn is_integer(&self) -> bool {
        self.exp >= 0 || self.is_zero()
    }
}

/// Classify `rem / den` (with `0 <= rem < den`) against one half.
pub(crate) fn classify_rest(rem: &[u64], den: &[u64], base: u64) -> Rest {
    if nat::is_zero(rem) {
        return Rest::Zero;
    }
    let twice = nat::mul_small(rem, 2, base);
    match nat::cmp(&twice, den) {
        Ordering::Less => Rest::Below,
        Ordering::Equal => Rest::Half,
        Ordering::Greater => Rest::Above,
    }
}

/// Round `(-1)^neg * (mag + rest) * B^exp` to `t` digits. When `rest` is not
/// `Zero`, `mag` must carry at least `t` significant digits.
pub(crate) fn round_nat(
    ctx: &Context,
    neg: bool,
    mag: &[u64],
    exp: i64,
    rest: Rest,
    dir: Dir,
    t: usize,
) -> Result<MpFloat> {
    let base = ctx.base();
    let n = nat::len(mag);
    if n == 0 {
        debug_assert_eq!(rest, Rest::Zero);
        return Ok(MpFloat::zero());
    }
    let mag = &mag[..n];
    let top = exp + n as i64;
    if n <= t && rest == Rest::Zero {
        let digits: Vec<u32> = (0..t)
            .map(|i| if i < n { mag[n - 1 - i] as u32 } else { 0 })
            .collect();
        return finish_range(ctx, neg, top, digits);
    }
    debug_assert!(n >= t);
    let k = n - t;
    let discarded = &mag[..k];
    let kept = &mag[k..];
    let frac_zero = rest == Rest::Zero && nat::is_zero(discarded);
    let inc = match dir {
        Dir::Chop => false,
        Dir::Away => !frac_zero,
        Dir::Floor => neg && !frac_zero,
        Dir::Ceil => !neg && !frac_zero,
        Dir::Nearest => {
            if frac_zero {
                false
            } else {
                match half_compare(discarded, rest, base) {
                    Rest::Above => true,
                    Rest::Half => kept[0] % 2 == 1,
                    _ => false,
                }
            }
        }
    };
    let mut digits: Vec<u32> = kept.iter().rev().map(|&d| d as u32).collect();
    let mut top = top;
    if inc {
        let last = base - 1;
        match digits.iter().rposition(|&d| d as u64 != last) {
            Some(i) => {
                digits[i] += 1;
                digits[i + 1..].iter_mut().for_each(|d| *d = 0);
            }
            None => {
                digits.iter_mut().for_each(|d| *d = 0);
                digits[0] = 1;
                top += 1;
            }
        }
    }
    finish_range(ctx, neg, top, digits)
}

/// Compare `(D + rest) / B^k` with one half, where `D` is the discarded digits.
fn half_compare(discarded: &[u64], rest: Rest, base: u64) -> Rest {
    let k = discarded.len();
    let twice = nat::mul_small(discarded, 2, base);
    let unit = nat::power_of_base(k);
    match nat::cmp(&twice, &unit) {
        Ordering::Greater => Rest::Above,
        Ordering::Equal => {
            if rest == Rest::Zero {
                Rest::Half
            } else {
                Rest::Above
            }
        }
        Ordering::Less => {
            let below = nat::sub(&unit, &twice, base);
            if below == vec![1] {
                match rest {
                    Rest::Zero | Rest::Below => Rest::Below,
                    r => r,
                }
            } else {
                Rest::Below
            }
        }
    }
}

/// Apply the overflow and underflow policy to a rounded, normalised value.
pub(crate) fn finish_range(ctx: &Context, neg: bool, exp: i64, digits: Vec<u32>) -> Result<MpFloat> {
    if exp > ctx.max_exp() {
        ctx.note_overflow();
        let m = ctx.max_real();
        return Err(MpError::Overflow(if neg { m.neg() } else { m }));
    }
    if exp < 1 - ctx.max_exp() {
        return ctx.note_underflow();
    }
    ctx.note_exponent(exp);
    Ok(MpFloat::raw(if neg { -1 } else { 1 }, exp, digits))
}

pub(crate) fn round_exact(ctx: &Context, x: &Exact, dir: Dir, t: usize) -> Result<MpFloat> {
    round_nat(ctx, x.neg, &x.mag, x.exp, Rest::Zero, dir, t)
}

/// Round `num / den` to `t` digits (`den` nonzero).
pub(crate) fn round_ratio(ctx: &Context, num: &Exact, den: &Exact, dir: Dir, t: usize) -> Result<MpFloat> {
    assert!(!den.is_zero(), "zero divisor");
    if num.is_zero() {
        return Ok(MpFloat::zero());
    }
    let base = ctx.base();
    let a = num.mag.len() as i64;
    let b = den.mag.len() as i64;
    let k = t as i64 + 2 + b - a;
    let (q, r, d) = if k >= 0 {
        let n = nat::shift_up(&num.mag, k as usize);
        let (q, r) = nat::divrem(&n, &den.mag, base);
        (q, r, den.mag.clone())
    } else {
        let d = nat::shift_up(&den.mag, (-k) as usize);
        let (q, r) = nat::divrem(&num.mag, &d, base);
        (q, r, d)
    };
    let rest = classify_rest(&r, &d, base);
    round_nat(ctx, num.neg != den.neg, &q, num.exp - den.exp - k, rest, dir, t)
}

/// Round the value to `t` digits in a way that is equivalent to rounding the true
/// sum `x + y`.
pub(crate) fn round_sum(ctx: &Context, x: &Exact, y: &Exact, dir: Dir, t: usize) -> Result<MpFloat> {
    let s = x.add_for_rounding(y, ctx.base(), t);
    round_exact(ctx, &s, dir, t)
}

/// Smallest `j >= 0` with `B^j >= n`.
pub(crate) fn guard_digits(base: u64, n: u128) -> usize {
    let mut j = 0;
    let mut p: u128 = 1;
    while p < n {
        p = p.saturating_mul(base as u128);
        j += 1;
    }
    j
}

/// Round a finite float exactly to `t` digits.
pub(crate) fn round_f64(ctx: &Context, v: f64, dir: Dir, t: usize) -> Result<MpFloat> {
    if !v.is_finite() {
        return Err(MpError::OutOfRange);
    }
    if v == 0.0 {
        return Ok(MpFloat::zero());
    }
    let base = ctx.base();
    let bits = v.to_bits();
    let exp_bits = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    let (m, k) = if exp_bits == 0 { (frac, -1074) } else { (frac | (1u64 << 52), exp_bits - 1075) };
    let num = Exact::from_nat(v < 0.0, nat::from_u128(m as u128, base), 0);
    if k >= 0 {
        let p = Exact::from_nat(false, nat::pow(2, k as u64, base), 0);
        round_exact(ctx, &num.mul(&p, base), dir, t)
    } else {
        let den = Exact::from_nat(false, nat::pow(2, (-k) as u64, base), 0);
        round_ratio(ctx, &num, &den, dir, t)
    }
}
