use crate::arith;
use crate::context::{Context, RoundingRule};
use crate::elem::{self, log2_estimate};
use crate::error::{config, MpError, Result};
use crate::kernel::{guard_digits, Exact};
use crate::nat::{self, Nat};
use crate::repr::MpFloat;

use super::digits::digit_char;
use super::parse::times_power;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Floor,
    Ceil,
    Nearest,
}

/// How the magnitude of a value of the given sign is rounded when written out.
fn magnitude_mode(rule: RoundingRule, neg: bool) -> Mode {
    match (rule, neg) {
        (RoundingRule::Down, false) | (RoundingRule::Up, true) => Mode::Floor,
        (RoundingRule::Down, true) | (RoundingRule::Up, false) => Mode::Ceil,
        _ => Mode::Nearest,
    }
}

/// Bit size beyond which scaling by a power of the output radix is not done exactly.
const EXACT_BITS: f64 = 262_144.0;

/// `|v| * radix^k` rounded to an integer, as base-`B` digits.
fn exact_round(v: &Exact, radix: u64, k: i64, base: u64, mode: Mode) -> Nat {
    let p = nat::pow(radix, k.unsigned_abs(), base);
    let (mut num, mut den) = if k >= 0 { (nat::mul(&v.mag, &p, base), vec![1]) } else { (v.mag.clone(), p) };
    if v.exp >= 0 {
        num = nat::shift_up(&num, v.exp as usize);
    } else {
        den = nat::shift_up(&den, (-v.exp) as usize);
    }
    let (q, r) = nat::divrem(&num, &den, base);
    if nat::is_zero(&r) {
        return q;
    }
    let bump = match mode {
        Mode::Floor => false,
        Mode::Ceil => true,
        Mode::Nearest => match nat::cmp(&nat::mul_small(&r, 2, base), &den) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Equal => q.first().is_some_and(|d| d % 2 == 1),
            std::cmp::Ordering::Less => false,
        },
    };
    if bump {
        nat::add_small(&q, 1, base)
    } else {
        q
    }
}

/// `|x| * radix^k` rounded to an integer under `mode`, as base-`B` digits.
fn scaled_round(ctx: &Context, x: &MpFloat, radix: u64, k: i64, mode: Mode) -> Result<Nat> {
    if x.is_zero() {
        return Ok(Vec::new());
    }
    let base = ctx.base();
    let lb = (base as f64).log2();
    let lr = (radix as f64).log2();
    let est = x.exponent() as f64 + k as f64 * lr / lb;
    if est < -1.0 {
        return Ok(if mode == Mode::Ceil { vec![1] } else { Vec::new() });
    }
    let v = x.exact().abs();
    let bits = k.unsigned_abs() as f64 * lr + x.exponent().unsigned_abs() as f64 * lb;
    if bits <= EXACT_BITS {
        return Ok(exact_round(&v, radix, k, base, mode));
    }
    let mut p = est.ceil() as usize + 4 + guard_digits(base, 1 << 20);
    let mut last = Vec::new();
    for _ in 0..4 {
        let w = ctx.work(p);
        let down = w.with_rule(RoundingRule::Down);
        let up = w.with_rule(RoundingRule::Up);
        let r = arith::from_i64(&w, radix as i64)?;
        let lo = arith::mul(&down, &x.abs(), &elem::pow_int(&down, &r, k)?)?;
        let hi = arith::mul(&up, &x.abs(), &elem::pow_int(&up, &r, k)?)?;
        let a = exact_round(&lo.exact(), radix, 0, base, mode);
        let b = exact_round(&hi.exact(), radix, 0, base, mode);
        if nat::cmp(&a, &b).is_eq() {
            return Ok(a);
        }
        last = a;
        p *= 2;
    }
    Ok(last)
}

/// Digits of `n` (base `B`) written in radix `radix`, most significant first.
fn radix_digits(n: &[u64], base: u64, radix: u64) -> Vec<u8> {
    let mut d = nat::rebase(n, base, radix);
    nat::trim(&mut d);
    d.iter().rev().map(|&v| v as u8).collect()
}

fn text(digits: &[u8]) -> String {
    digits.iter().map(|&d| digit_char(d as u32).expect("digit below 16")).collect()
}

/// The number of output-radix places that `T` base-`B` digits can carry:
/// the largest `s` with `out_base^s <= B^T`.
pub fn significant_places(ctx: &Context) -> usize {
    let b = ctx.base();
    let ob = ctx.out_base() as u64;
    let t = ctx.digits();
    let limit = nat::power_of_base(t);
    let fits = |s: usize| nat::cmp(&nat::pow(ob, s as u64, b), &limit).is_le();
    let mut s = (t as f64 * (b as f64).ln() / (ob as f64).ln()).floor() as usize;
    while s > 0 && !fits(s) {
        s -= 1;
    }
    while fits(s + 1) {
        s += 1;
    }
    s
}

/// Fixed-point text of width `width` with `places` digits after the point, right
/// justified, in radix `out_base`. `places == -1` writes an integer with no point.
///
/// The sign and integer part occupy the `width - places - 1` positions left of
/// the point. Fraction digits beyond [`significant_places`] significant places are
/// blanked. A value that rounds to zero is written without a sign.
pub fn format_fixed(ctx: &Context, x: &MpFloat, width: usize, places: i64) -> Result<String> {
    if places < -1 {
        return Err(config("places must be at least -1"));
    }
    if (width as i64) < places + 2 {
        return Err(MpError::Width);
    }
    let avail = (width as i64 - places - 1) as usize;
    let n = places.max(0) as usize;
    let base = ctx.base();
    let ob = ctx.out_base() as u64;
    if !x.is_zero() {
        let int_places = log2_estimate(ctx, x) / (ob as f64).log2();
        if int_places > avail as f64 + 2.0 {
            return Err(MpError::Width);
        }
    }
    let mode = magnitude_mode(ctx.rounding_rule(), x.sign() < 0);
    let q = scaled_round(ctx, x, ob, n as i64, mode)?;
    let mut digits = radix_digits(&q, base, ob);
    let neg = x.sign() < 0 && !digits.is_empty();
    if digits.len() < n + 1 {
        let mut padded = vec![0u8; n + 1 - digits.len()];
        padded.extend_from_slice(&digits);
        digits = padded;
    }
    let split = digits.len() - n;
    let int_part = text(&digits[..split]);
    let sign = if neg { "-" } else { "" };
    if sign.len() + int_part.len() > avail {
        return Err(MpError::Width);
    }
    let mut out = String::with_capacity(width);
    out.extend(std::iter::repeat_n(' ', avail - sign.len() - int_part.len()));
    out.push_str(sign);
    out.push_str(&int_part);
    if places >= 0 {
        out.push('.');
        let sig = significant_places(ctx);
        let first = digits.iter().position(|&d| d != 0);
        for (i, &d) in digits[split..].iter().enumerate() {
            let visible = first.is_none_or(|f| split + i < f + sig);
            out.push(if visible { digit_char(d as u32)? } else { ' ' });
        }
    }
    Ok(out)
}

fn exponent_char(ctx: &Context) -> char {
    match ctx.exp_char() {
        'E' if ctx.out_base() >= 15 => '$',
        c => c,
    }
}

fn exponent_text(ctx: &Context, e: i64) -> Result<String> {
    let width = ctx.exp_field_width() - 2;
    let ob = ctx.out_base() as u64;
    let mut digits = radix_digits(&nat::from_u128(e.unsigned_abs() as u128, ob), ob, ob);
    if digits.len() > width {
        return Err(MpError::Width);
    }
    let mut padded = vec![0u8; width - digits.len()];
    padded.append(&mut digits);
    Ok(format!("{}{}{}", exponent_char(ctx), if e < 0 { '-' } else { '+' }, text(&padded)))
}

/// An estimate of `floor(log_radix |x|)`, off by at most one.
fn radix_exponent(ctx: &Context, x: &MpFloat, radix: u64) -> i64 {
    (log2_estimate(ctx, x) / (radix as f64).log2()).floor() as i64
}

/// Scientific text with `significant` places: `d.ddd`, the exponent character, a
/// sign and the exponent in radix `out_base`, zero padded so that the exponent
/// part takes `exp_field_width` characters. The exponent character `E` becomes `$`
/// when `out_base` is 15 or 16, where `E` is a digit.
pub fn format_sci(ctx: &Context, x: &MpFloat, significant: usize) -> Result<String> {
    if significant < 2 {
        return Err(config("need at least two significant places"));
    }
    if x.is_zero() {
        return Ok(format!("0.{}{}", "0".repeat(significant - 1), exponent_text(ctx, 0)?));
    }
    let base = ctx.base();
    let ob = ctx.out_base() as u64;
    let mode = magnitude_mode(ctx.rounding_rule(), x.sign() < 0);
    let mut e = radix_exponent(ctx, x, ob);
    let mut digits = Vec::new();
    for _ in 0..8 {
        let q = scaled_round(ctx, x, ob, significant as i64 - 1 - e, mode)?;
        digits = radix_digits(&q, base, ob);
        match digits.len().cmp(&significant) {
            std::cmp::Ordering::Greater => e += 1,
            std::cmp::Ordering::Less => e -= 1,
            std::cmp::Ordering::Equal => break,
        }
    }
    let digits_text = text(&digits);
    Ok(format!(
        "{}{}.{}{}",
        if x.sign() < 0 { "-" } else { "" },
        &digits_text[..1],
        &digits_text[1..],
        exponent_text(ctx, e)?
    ))
}

/// `x = m * out_base^e` with `1 <= |m| < out_base`; `m` is `x / out_base^e` rounded
/// under the context's rule, so Down and Up give bounds. Zero gives `(0, 0)`.
pub fn split_sci(ctx: &Context, x: &MpFloat) -> Result<(MpFloat, i64)> {
    if x.is_zero() {
        return Ok((MpFloat::zero(), 0));
    }
    let ob = ctx.out_base() as u64;
    let mut e = radix_exponent(ctx, x, ob);
    let v = x.exact();
    let mut m = MpFloat::zero();
    for _ in 0..8 {
        m = times_power(ctx, &v, ob, -(e as i128))?;
        if arith::compare_small(ctx, &m.abs(), ob as i64).is_ge() {
            e += 1;
        } else if arith::compare_small(ctx, &m.abs(), 1).is_lt() {
            e -= 1;
        } else {
            break;
        }
    }
    Ok((m, e))
}

/// `x ~ d * out_base^n` with `d` a native float, `1 <= |d| < out_base`; returns
/// `(n, d)`. Meant for starting approximations.
pub fn split_native(ctx: &Context, x: &MpFloat) -> Result<(i64, f64)> {
    if x.is_zero() {
        return Ok((0, 0.0));
    }
    let ob = ctx.out_base() as f64;
    let w = ctx.work(guard_digits(ctx.base(), 1 << 60) + 1);
    let (m, mut n) = split_sci(&w, x)?;
    let mut d = super::native::to_f64(&w, &m)?;
    if d.abs() >= ob {
        d /= ob;
        n += 1;
    }
    Ok((n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convio::parse;

    fn ctx(base: u64, t: usize) -> Context {
        Context::new(base, t, 1000).unwrap()
    }

    fn num(c: &Context, s: &str) -> MpFloat {
        parse(c, s).unwrap()
    }

    #[test]
    fn fixed_layout() {
        let c = ctx(10, 10);
        assert_eq!(format_fixed(&c, &num(&c, "-1"), 6, 2).unwrap(), " -1.00");
        assert_eq!(format_fixed(&c, &num(&c, "7"), 5, -1).unwrap(), "    7");
        assert_eq!(format_fixed(&c, &num(&c, "7"), 5, 0).unwrap(), "   7.");
        assert_eq!(format_fixed(&c, &num(&c, "0.25"), 6, 3).unwrap(), " 0.250");
        assert_eq!(format_fixed(&c, &num(&c, "-0.0001"), 6, 2).unwrap(), "  0.00");
        assert_eq!(format_fixed(&c, &MpFloat::zero(), 4, 1).unwrap(), " 0.0");
        assert!(matches!(format_fixed(&c, &num(&c, "12345"), 6, 2), Err(MpError::Width)));
        assert!(matches!(format_fixed(&c, &num(&c, "1"), 3, 2), Err(MpError::Width)));
    }

    #[test]
    fn fixed_rounding_rules() {
        let c = ctx(10, 10);
        let x = num(&c, "2.345");
        assert_eq!(format_fixed(&c, &x, 6, 2).unwrap(), "  2.34");
        assert_eq!(format_fixed(&c, &num(&c, "2.355"), 6, 2).unwrap(), "  2.36");
        assert_eq!(format_fixed(&c.with_rule(RoundingRule::Up), &x, 6, 2).unwrap(), "  2.35");
        assert_eq!(format_fixed(&c.with_rule(RoundingRule::Down), &x.neg(), 6, 2).unwrap(), " -2.35");
        assert_eq!(format_fixed(&c.with_rule(RoundingRule::Up), &x.neg(), 6, 2).unwrap(), " -2.34");
    }

    #[test]
    fn fixed_blanks_insignificant_places() {
        let c = ctx(10, 4);
        assert_eq!(significant_places(&c), 4);
        let x = num(&c, "3.142");
        assert_eq!(format_fixed(&c, &x, 9, 6).unwrap(), " 3.142   ");
    }

    #[test]
    fn significant_places_power_bases() {
        assert_eq!(significant_places(&ctx(16, 5).with_io_bases(10, 2).unwrap()), 20);
        assert_eq!(significant_places(&ctx(1 << 14, 27)), 113);
        assert_eq!(significant_places(&ctx(10, 7)), 7);
    }

    #[test]
    fn sci_layout() {
        let c = ctx(10, 6);
        assert_eq!(format_sci(&c, &MpFloat::zero(), 5).unwrap(), "0.0000E+0000");
        assert_eq!(format_sci(&c, &num(&c, "123.45"), 5).unwrap(), "1.2345E+0002");
        assert_eq!(format_sci(&c, &num(&c, "-0.000999999"), 3).unwrap(), "-1.00E-0003");
        assert_eq!(format_sci(&c, &num(&c, "9.996"), 3).unwrap(), "1.00E+0001");
        let third = arith::div_small(&c.with_rule(RoundingRule::Up), &num(&c, "1"), 3).unwrap();
        assert_eq!(format_sci(&c.with_rule(RoundingRule::Up), &third, 6).unwrap(), "3.33334E-0001");
    }

    #[test]
    fn sci_hex_uses_dollar() {
        let c = ctx(10, 6).with_io_bases(10, 16).unwrap();
        assert_eq!(format_sci(&c, &num(&c, "255"), 2).unwrap(), "F.F$+0001");
        assert_eq!(format_sci(&c, &num(&c, "256"), 3).unwrap(), "1.00$+0002");
    }

    #[test]
    fn sci_width_error() {
        let c = Context::new(10, 6, 200_000).unwrap();
        assert!(matches!(format_sci(&c, &num(&c, "1E100000"), 3), Err(MpError::Width)));
    }

    #[test]
    fn split_values() {
        let c = ctx(10, 8);
        let (m, e) = split_sci(&c, &num(&c, "123.45")).unwrap();
        assert_eq!(e, 2);
        assert_eq!(m, num(&c, "1.2345"));
        let (m, e) = split_sci(&c, &num(&c, "-0.01")).unwrap();
        assert_eq!((m, e), (num(&c, "-1"), -2));
        let (n, d) = split_native(&c, &num(&c, "123.45")).unwrap();
        assert_eq!(n, 2);
        assert!((d - 1.2345).abs() < 1e-12);
    }

    #[test]
    fn split_sci_brackets_in_binary() {
        let c = ctx(2, 20);
        let x = num(&c, "1000");
        let lo = split_sci(&c.with_rule(RoundingRule::Down), &x).unwrap();
        let hi = split_sci(&c.with_rule(RoundingRule::Up), &x).unwrap();
        assert_eq!(lo.1, 3);
        assert_eq!(hi.1, 3);
        assert!(arith::le(&lo.0, &hi.0));
    }
}
