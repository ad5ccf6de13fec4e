#![allow(dead_code)]

use mpkit::{Context, MpFloat, RoundingRule};
use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

pub fn big_pow(b: u64, e: u64) -> BigInt {
    num_traits::pow(BigInt::from(b), e as usize)
}

/// `B^e` as a rational, for any sign of `e`.
pub fn base_pow(b: u64, e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(big_pow(b, e as u64))
    } else {
        BigRational::new(BigInt::one(), big_pow(b, e.unsigned_abs()))
    }
}

pub fn to_rational(ctx: &Context, x: &MpFloat) -> BigRational {
    if x.is_zero() {
        return BigRational::zero();
    }
    let b = ctx.base();
    let mut n = BigInt::zero();
    for &d in x.digits() {
        n = n * BigInt::from(b) + BigInt::from(d);
    }
    let q = BigRational::from_integer(n) * base_pow(b, x.exponent() - x.digits().len() as i64);
    if x.sign() < 0 {
        -q
    } else {
        q
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Mode {
    Chop,
    Away,
    Floor,
    Ceil,
    NearestEven,
}

pub fn mode_of(rule: RoundingRule) -> Mode {
    match rule {
        RoundingRule::Truncate => Mode::Chop,
        RoundingRule::NearestEven => Mode::NearestEven,
        RoundingRule::Down => Mode::Floor,
        RoundingRule::Up => Mode::Ceil,
    }
}

/// Exponent `e` with `B^(e-1) <= |q| < B^e`, for nonzero `q`.
pub fn exponent_of(q: &BigRational, b: u64) -> i64 {
    let a = q.abs();
    let mut e = ((a.numer().bits() as f64 - a.denom().bits() as f64) / (b as f64).log2()).floor() as i64;
    while base_pow(b, e - 1) > a {
        e -= 1;
    }
    while base_pow(b, e) <= a {
        e += 1;
    }
    e
}

/// `q` rounded to `t` base-`b` digits.
pub fn round_rational(q: &BigRational, b: u64, t: usize, mode: Mode) -> BigRational {
    if q.is_zero() {
        return BigRational::zero();
    }
    let neg = q.is_negative();
    let e = exponent_of(q, b);
    let unit = base_pow(b, e - t as i64);
    let scaled = q.abs() / &unit;
    let (n, r) = scaled.numer().div_rem(scaled.denom());
    let up = if r.is_zero() {
        false
    } else {
        match mode {
            Mode::Chop => false,
            Mode::Away => true,
            Mode::Floor => neg,
            Mode::Ceil => !neg,
            Mode::NearestEven => {
                let twice = BigInt::from(2) * &r;
                match twice.cmp(scaled.denom()) {
                    std::cmp::Ordering::Greater => true,
                    std::cmp::Ordering::Less => false,
                    std::cmp::Ordering::Equal => n.is_odd(),
                }
            }
        }
    };
    let n = if up { n + 1 } else { n };
    let m = BigRational::from_integer(n) * unit;
    if neg {
        -m
    } else {
        m
    }
}

/// One unit in the last place of a `t`-digit number near `q`.
pub fn ulp(q: &BigRational, b: u64, t: usize) -> BigRational {
    base_pow(b, exponent_of(q, b) - t as i64)
}

pub fn random_mp<R: Rng>(rng: &mut R, ctx: &Context, exp_span: i64) -> MpFloat {
    let b = ctx.base() as u32;
    let t = ctx.digits();
    let mut d: Vec<u32> = (0..t).map(|_| rng.gen_range(0..b)).collect();
    d[0] = rng.gen_range(1..b);
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    MpFloat::from_parts(ctx, sign, rng.gen_range(-exp_span..=exp_span), &d).unwrap()
}

/// Every normalized `t`-digit number with exponents in `exps`, both signs, and zero.
pub fn all_numbers(ctx: &Context, exps: std::ops::RangeInclusive<i64>) -> Vec<MpFloat> {
    let b = ctx.base() as u32;
    let t = ctx.digits();
    let mut out = vec![MpFloat::zero()];
    let count = (b as usize).pow(t as u32);
    for e in exps {
        for k in 0..count {
            let mut d = vec![0u32; t];
            let mut v = k;
            for slot in d.iter_mut().rev() {
                *slot = (v % b as usize) as u32;
                v /= b as usize;
            }
            if d[0] == 0 {
                continue;
            }
            for sign in [1i8, -1] {
                out.push(MpFloat::from_parts(ctx, sign, e, &d).unwrap());
            }
        }
    }
    out
}

pub fn sign_bigint(q: &BigRational) -> Sign {
    q.numer().sign()
}

/// `±num/den · B^scale`, kept unreduced so that the oracle needs one division.
#[derive(Clone, Debug)]
pub struct Scaled {
    pub neg: bool,
    pub num: BigUint,
    pub den: BigUint,
    pub scale: i64,
}

/// A `t`-digit value `±mant · B^(e-t)`; zero has `mant == 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Digits {
    pub neg: bool,
    pub mant: u64,
    pub e: i64,
}

/// Integer oracle for one base and precision with `B^t < 2^63`.
pub struct Oracle {
    pub b: u64,
    pub t: usize,
    pows: Vec<BigUint>,
}

/// `exact = ±(n + rem/den) · B^(e-t)` with `B^(t-1) <= n < B^t`.
#[derive(Clone, Debug)]
pub struct Split {
    pub neg: bool,
    pub n: u64,
    pub e: i64,
    pub rem: BigUint,
    pub den: BigUint,
}

impl Oracle {
    pub fn new(b: u64, t: usize) -> Oracle {
        let mut pows = vec![BigUint::one()];
        for i in 1..400 {
            let p = &pows[i - 1] * b;
            pows.push(p);
        }
        Oracle { b, t, pows }
    }

    fn pow(&self, e: i64) -> &BigUint {
        &self.pows[e as usize]
    }

    pub fn of_mp(&self, x: &MpFloat) -> Scaled {
        let mut n = 0u64;
        for &d in x.digits() {
            n = n * self.b + d as u64;
        }
        let scale = x.exponent() - x.digits().len() as i64;
        Scaled { neg: x.sign() < 0, num: BigUint::from(n), den: BigUint::one(), scale }
    }

    fn signed(&self, x: &Scaled) -> (bool, BigUint) {
        (x.neg, x.num.clone())
    }

    pub fn add(&self, x: &Scaled, y: &Scaled) -> Scaled {
        let s = x.scale.min(y.scale);
        let (xn, xm) = self.signed(x);
        let (yn, ym) = self.signed(y);
        let xm = xm * self.pow(x.scale - s);
        let ym = ym * self.pow(y.scale - s);
        let (neg, num) = if xn == yn {
            (xn, xm + ym)
        } else if xm >= ym {
            (xn, xm - ym)
        } else {
            (yn, ym - xm)
        };
        Scaled { neg: neg && !num.is_zero(), num, den: BigUint::one(), scale: s }
    }

    pub fn neg(&self, x: &Scaled) -> Scaled {
        Scaled { neg: !x.neg, ..x.clone() }
    }

    pub fn mul(&self, x: &Scaled, y: &Scaled) -> Scaled {
        Scaled { neg: x.neg != y.neg, num: &x.num * &y.num, den: &x.den * &y.den, scale: x.scale + y.scale }
    }

    pub fn div(&self, x: &Scaled, y: &Scaled) -> Scaled {
        Scaled { neg: x.neg != y.neg, num: &x.num * &y.den, den: &x.den * &y.num, scale: x.scale - y.scale }
    }

    pub fn small(&self, i: i64) -> Scaled {
        Scaled { neg: i < 0, num: BigUint::from(i.unsigned_abs()), den: BigUint::one(), scale: 0 }
    }

    fn digit_len(&self, v: &BigUint) -> i64 {
        let mut lo = ((v.bits() as f64 - 1.0) / (self.b as f64).log2()).floor() as i64;
        while lo > 0 && self.pow(lo) > v {
            lo -= 1;
        }
        while self.pow(lo) <= v {
            lo += 1;
        }
        lo
    }

    pub fn split(&self, x: &Scaled) -> Option<Split> {
        if x.num.is_zero() {
            return None;
        }
        let t = self.t as i64;
        let mut s = t - (self.digit_len(&x.num) - self.digit_len(&x.den));
        loop {
            let (p, q) = if s >= 0 { (&x.num * self.pow(s), x.den.clone()) } else { (x.num.clone(), &x.den * self.pow(-s)) };
            let (n, r) = p.div_rem(&q);
            if &n >= self.pow(t) {
                s -= 1;
            } else if &n < self.pow(t - 1) {
                s += 1;
            } else {
                let n = n.to_u64().unwrap();
                return Some(Split { neg: x.neg, n, e: x.scale - s + t, rem: r, den: q });
            }
        }
    }

    /// The exact value rounded per `mode`; ties go to an even last digit.
    pub fn round(&self, x: &Scaled, mode: Mode) -> Digits {
        match self.split(x) {
            None => Digits { neg: false, mant: 0, e: 0 },
            Some(s) => self.pick(&s, mode),
        }
    }

    pub fn pick(&self, s: &Split, mode: Mode) -> Digits {
        let up = if s.rem.is_zero() {
            false
        } else {
            match mode {
                Mode::Chop => false,
                Mode::Away => true,
                Mode::Floor => s.neg,
                Mode::Ceil => !s.neg,
                Mode::NearestEven => match (&s.rem * 2u32).cmp(&s.den) {
                    std::cmp::Ordering::Greater => true,
                    std::cmp::Ordering::Less => false,
                    std::cmp::Ordering::Equal => (s.n % self.b) % 2 == 1,
                },
            }
        };
        let mut d = Digits { neg: s.neg, mant: s.n + up as u64, e: s.e };
        if d.mant == self.b.pow(self.t as u32) {
            d.mant /= self.b;
            d.e += 1;
        }
        d
    }

    /// `x` as `t` digits, padding short digit vectors with zeros.
    pub fn digits_of(&self, x: &MpFloat) -> Digits {
        if x.is_zero() {
            return Digits { neg: false, mant: 0, e: 0 };
        }
        let mut n = 0u64;
        for i in 0..self.t {
            n = n * self.b + x.digits().get(i).copied().unwrap_or(0) as u64;
        }
        Digits { neg: x.sign() < 0, mant: n, e: x.exponent() }
    }

    /// `|got - exact|` in units of the exact value's last place.
    pub fn ulps_from(&self, got: &Digits, s: &Split) -> f64 {
        let frac = s.rem.to_f64().unwrap() / s.den.to_f64().unwrap();
        let k = got.e - s.e;
        if got.neg != s.neg || !(0..=2).contains(&k) {
            let g = got.mant as f64 * (self.b as f64).powi(k as i32);
            let g = if got.neg == s.neg { g } else { -g };
            return (g - (s.n as f64 + frac)).abs();
        }
        let g = got.mant as i128 * (self.b as i128).pow(k as u32);
        let d = g - s.n as i128;
        (d as f64 - frac).abs()
    }
}
