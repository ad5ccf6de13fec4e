use crate::context::Context;
use crate::error::{config, MpError, Result};
use crate::nat;

const ALPHABET: &[u8; 16] = b"0123456789ABCDEF";

/// The character for digit `v` (`'0'..='9'`, `'A'..='F'`).
pub fn digit_char(v: u32) -> Result<char> {
    ALPHABET.get(v as usize).map(|&c| c as char).ok_or(MpError::Range)
}

/// The value of `c` as a digit in radix `in_base`, or -1 if it is not one.
/// Lower-case letters are accepted as well.
pub fn char_digit(c: char, in_base: u32) -> i32 {
    match c.to_digit(16) {
        Some(d) if d < in_base => d as i32,
        _ => -1,
    }
}

/// The smallest `t` with `B^(t-1) >= out_base^(n-1)`: the number of base-`B` digits
/// needed to carry `n` significant places in the output radix.
pub fn digits_for(ctx: &Context, n_places: usize) -> Result<usize> {
    let b = ctx.base();
    let ob = ctx.out_base() as u64;
    if n_places == 0 {
        return Err(config("number of places must be positive"));
    }
    let target = nat::pow(ob, n_places as u64 - 1, b);
    let n = nat::len(&target);
    let exact_power = target[..n - 1].iter().all(|&d| d == 0) && target[n - 1] == 1;
    Ok(if exact_power { n } else { n + 1 })
}

/// The smallest `j` with `b1^|j| >= b2^|n|` and the sign of `n`.
pub fn radix_exponent_bound(b1: u64, b2: u64, n: i64) -> Result<i64> {
    if b1 < 2 || b2 == 0 {
        return Err(config("radix_exponent_bound needs b1 > 1 and b2 > 0"));
    }
    if b1.checked_mul(b2).is_none_or(|p| p > i64::MAX as u64) {
        return Err(config("b1 * b2 exceeds the integer word"));
    }
    let k = n.unsigned_abs();
    if k == 0 || b2 == 1 {
        return Ok(0);
    }
    const W: u64 = 1 << 32;
    let target = nat::pow(b2, k, W);
    let holds = |j: u64| nat::cmp(&nat::pow(b1, j, W), &target).is_ge();
    let (mut lo, mut hi) = (0u64, k * (64 - b2.leading_zeros() as u64));
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if holds(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(if n < 0 { -(lo as i64) } else { lo as i64 })
}
