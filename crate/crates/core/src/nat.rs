//! Natural numbers stored as little-endian digit vectors in a caller-chosen base.
//!
//! These are the exact building blocks underneath the rounding kernels. Digits are
//! always in `0..base` and `base` never exceeds 2^32.

use std::cmp::Ordering;

pub(crate) type Nat = Vec<u64>;

pub(crate) fn trim(v: &mut Nat) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn trimmed(mut v: Nat) -> Nat {
    trim(&mut v);
    v
}

pub(crate) fn is_zero(v: &[u64]) -> bool {
    v.iter().all(|&d| d == 0)
}

fn significant(v: &[u64]) -> &[u64] {
    let mut n = v.len();
    while n > 0 && v[n - 1] == 0 {
        n -= 1;
    }
    &v[..n]
}

pub(crate) fn from_u128(mut n: u128, base: u64) -> Nat {
    let b = base as u128;
    let mut v = Vec::new();
    while n > 0 {
        v.push((n % b) as u64);
        n /= b;
    }
    v
}

pub(crate) fn to_u128(v: &[u64], base: u64) -> Option<u128> {
    let mut acc: u128 = 0;
    for &d in significant(v).iter().rev() {
        acc = acc.checked_mul(base as u128)?.checked_add(d as u128)?;
    }
    Some(acc)
}

pub(crate) fn cmp(a: &[u64], b: &[u64]) -> Ordering {
    let a = significant(a);
    let b = significant(b);
    if a.len() != b.len() {
        return a.len().cmp(&b.len());
    }
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

pub(crate) fn add(a: &[u64], b: &[u64], base: u64) -> Nat {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n + 1);
    let mut carry = 0u64;
    for i in 0..n {
        let s = a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0) + carry;
        if s >= base {
            out.push(s - base);
            carry = 1;
        } else {
            out.push(s);
            carry = 0;
        }
    }
    if carry > 0 {
        out.push(carry);
    }
    trimmed(out)
}

/// `a - b`, requires `a >= b`.
pub(crate) fn sub(a: &[u64], b: &[u64], base: u64) -> Nat {
    debug_assert!(cmp(a, b) != Ordering::Less);
    let mut out = Vec::with_capacity(a.len());
    let mut borrow = 0u64;
    for i in 0..a.len() {
        let s = b.get(i).copied().unwrap_or(0) + borrow;
        if a[i] >= s {
            out.push(a[i] - s);
            borrow = 0;
        } else {
            out.push(a[i] + base - s);
            borrow = 1;
        }
    }
    debug_assert_eq!(borrow, 0);
    trimmed(out)
}

pub(crate) fn add_small(a: &[u64], m: u64, base: u64) -> Nat {
    let mut out: Nat = a.to_vec();
    let mut carry = m as u128;
    let mut i = 0;
    while carry > 0 {
        if i == out.len() {
            out.push(0);
        }
        let s = out[i] as u128 + carry;
        out[i] = (s % base as u128) as u64;
        carry = s / base as u128;
        i += 1;
    }
    trimmed(out)
}

pub(crate) fn mul_small(a: &[u64], m: u64, base: u64) -> Nat {
    if m == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(a.len() + 3);
    mul_small_into(a.iter().copied(), m, base, &mut out);
    trimmed(out)
}

/// Push the little-endian digits of `a * m` onto `out`.
pub(crate) fn mul_small_into<I: Iterator<Item = u64>>(a: I, m: u64, base: u64, out: &mut Nat) {
    if m < 1 << 31 && base <= 1 << 32 {
        let mut carry = 0u64;
        for d in a {
            let p = d * m + carry;
            out.push(p % base);
            carry = p / base;
        }
        while carry > 0 {
            out.push(carry % base);
            carry /= base;
        }
        return;
    }
    let b = base as u128;
    let mut carry: u128 = 0;
    for d in a {
        let p = d as u128 * m as u128 + carry;
        out.push((p % b) as u64);
        carry = p / b;
    }
    while carry > 0 {
        out.push((carry % b) as u64);
        carry /= b;
    }
}

pub(crate) fn divrem_small(a: &[u64], d: u64, base: u64) -> (Nat, u64) {
    assert!(d > 0, "division by zero");
    let b = base as u128;
    let mut q = vec![0u64; a.len()];
    let mut rem: u128 = 0;
    for i in (0..a.len()).rev() {
        let cur = rem * b + a[i] as u128;
        q[i] = (cur / d as u128) as u64;
        rem = cur % d as u128;
    }
    (trimmed(q), rem as u64)
}

/// Schoolbook product. Column sums are left unnormalised for as many rows as fit
/// below `limit`, so carries are propagated only occasionally.
pub(crate) fn mul_bounded(a: &[u64], b: &[u64], base: u64, limit: u64) -> Nat {
    let a = significant(a);
    let b = significant(b);
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (a, b) = if a.len() < b.len() { (a, b) } else { (b, a) };
    let dmax = base - 1;
    let stride = ((limit - dmax) / (dmax * dmax).max(1)).max(1);
    let mut acc = vec![0u64; a.len() + b.len() + 1];
    let mut pending = 0u64;
    let flush = |acc: &mut Vec<u64>| {
        let mut carry = 0u64;
        if base.is_power_of_two() {
            let (shift, mask) = (base.trailing_zeros(), base - 1);
            for x in acc.iter_mut() {
                let s = *x + carry;
                *x = s & mask;
                carry = s >> shift;
            }
        } else {
            for x in acc.iter_mut() {
                let s = *x + carry;
                *x = s % base;
                carry = s / base;
            }
        }
        debug_assert_eq!(carry, 0);
    };
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        if pending == stride {
            flush(&mut acc);
            pending = 0;
        }
        for (j, &bj) in b.iter().enumerate() {
            acc[i + j] += ai * bj;
        }
        pending += 1;
    }
    flush(&mut acc);
    trimmed(acc)
}

pub(crate) fn mul(a: &[u64], b: &[u64], base: u64) -> Nat {
    mul_bounded(a, b, base, u64::MAX >> 2)
}

/// Quotient and remainder, `b` nonzero.
pub(crate) fn divrem(a: &[u64], b: &[u64], base: u64) -> (Nat, Nat) {
    let a = significant(a);
    let b = significant(b);
    assert!(!b.is_empty(), "division by zero");
    if cmp(a, b) == Ordering::Less {
        return (Vec::new(), a.to_vec());
    }
    if b.len() == 1 {
        let (q, r) = divrem_small(a, b[0], base);
        let r = if r == 0 { Vec::new() } else { vec![r] };
        return (q, r);
    }
    let n = b.len();
    let m = a.len() - n;
    let bb = base as u128;
    let scale = base / (b[n - 1] + 1);
    let mut u = mul_small(a, scale, base);
    u.resize(a.len() + 1, 0);
    let mut v = mul_small(b, scale, base);
    v.resize(n, 0);
    let vtop = v[n - 1] as u128;
    let vnext = v[n - 2] as u128;
    let mut q = vec![0u64; m + 1];
    for j in (0..=m).rev() {
        let num = u[j + n] as u128 * bb + u[j + n - 1] as u128;
        let mut qhat = num / vtop;
        let mut rhat = num % vtop;
        while qhat >= bb || qhat * vnext > rhat * bb + u[j + n - 2] as u128 {
            qhat -= 1;
            rhat += vtop;
            if rhat >= bb {
                break;
            }
        }
        let mut carry: u128 = 0;
        let mut borrow: i128 = 0;
        for i in 0..n {
            let p = qhat * v[i] as u128 + carry;
            carry = p / bb;
            let t = u[i + j] as i128 - (p % bb) as i128 + borrow;
            if t < 0 {
                u[i + j] = (t + bb as i128) as u64;
                borrow = -1;
            } else {
                u[i + j] = t as u64;
                borrow = 0;
            }
        }
        let t = u[j + n] as i128 - carry as i128 + borrow;
        if t < 0 {
            qhat -= 1;
            let mut c = 0u64;
            for i in 0..n {
                let s = u[i + j] + v[i] + c;
                u[i + j] = s % base;
                c = s / base;
            }
            u[j + n] = (t + c as i128) as u64;
        } else {
            u[j + n] = t as u64;
        }
        q[j] = qhat as u64;
    }
    u.truncate(n);
    let (r, rr) = divrem_small(&u, scale, base);
    debug_assert_eq!(rr, 0);
    (trimmed(q), r)
}

/// `a * base^k`.
pub(crate) fn shift_up(a: &[u64], k: usize) -> Nat {
    if is_zero(a) {
        return Vec::new();
    }
    let mut out = vec![0u64; k];
    out.extend_from_slice(significant(a));
    out
}

pub(crate) fn power_of_base(k: usize) -> Nat {
    let mut out = vec![0u64; k];
    out.push(1);
    out
}

pub(crate) fn pow(x: u64, k: u64, base: u64) -> Nat {
    pow_nat(&from_u128(x as u128, base), k, base)
}

pub(crate) fn pow_nat(x: &[u64], mut k: u64, base: u64) -> Nat {
    let mut result = vec![1u64];
    let mut sq = trimmed(x.to_vec());
    while k > 0 {
        if k & 1 == 1 {
            result = mul(&result, &sq, base);
        }
        k >>= 1;
        if k > 0 {
            sq = mul(&sq, &sq, base);
        }
    }
    result
}

/// Reinterpret a natural number given in base `from` as digits in base `to`.
pub(crate) fn rebase(a: &[u64], from: u64, to: u64) -> Nat {
    if from == to {
        return trimmed(a.to_vec());
    }
    let mut out: Nat = Vec::new();
    for &d in significant(a).iter().rev() {
        out = mul_small(&out, from, to);
        out = add_small(&out, d, to);
    }
    out
}

/// Number of significant digits.
pub(crate) fn len(a: &[u64]) -> usize {
    significant(a).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn val(v: &[u64], base: u64) -> u128 {
        to_u128(v, base).unwrap()
    }

    #[test]
    fn divrem_matches_native() {
        let bases = [2u64, 3, 10, 64, 1 << 30];
        let samples: [u128; 7] = [
            0,
            1,
            12345678901234567890,
            (1u128 << 100) - 7,
            987654321987654321987654321,
            (1u128 << 127) - 1,
            31415926535897932384626433832795,
        ];
        for &b in &bases {
            for &x in &samples {
                for &y in &samples {
                    if y == 0 {
                        continue;
                    }
                    let (q, r) = divrem(&from_u128(x, b), &from_u128(y, b), b);
                    assert_eq!(val(&q, b), x / y, "base {b} {x}/{y}");
                    assert_eq!(val(&r, b), x % y, "base {b} {x}%{y}");
                }
            }
        }
    }

    #[test]
    fn mul_with_tight_budget() {
        let b = 64;
        let x = from_u128(0xffff_ffff_ffff_ffff, b);
        let y = from_u128(0xfedc_ba98_7654_3210, b);
        let p = mul_bounded(&x, &y, b, 32767);
        assert_eq!(val(&p, b), 0xffff_ffff_ffff_ffffu128 * 0xfedc_ba98_7654_3210u128);
    }

    #[test]
    fn rebase_roundtrip() {
        let x = from_u128(123456789012345678901234567890, 10);
        let y = rebase(&x, 10, 7);
        assert_eq!(rebase(&y, 7, 10), x);
    }
}
