use std::f64::consts::PI;

use crate::arith;
use crate::context::Context;
use crate::elem::{finish, one, pi_work, pow_work};
use crate::error::{config, domain, Result};
use crate::repr::{move_precision, pack, unpack, MpFloat, PackedMp};

use super::{ln_base, work_for};

/// How the digits of a Bernoulli table are allotted across its entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrecisionProfile {
    /// Every entry carries the full precision.
    Full,
    /// Entry `j` of `n` carries about `T - (j - 1)(T - 2)/n` digits.
    LinearlyDecreasing,
}

/// `B(2), B(4), ..., B(2n)` in packed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<PackedMp>,
    profile: PrecisionProfile,
}

impl BernoulliTable {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn profile(&self) -> PrecisionProfile {
        self.profile
    }

    /// Packed `B(2j)` for `1 <= j <= len`.
    pub fn packed(&self, j: usize) -> Option<&PackedMp> {
        j.checked_sub(1).and_then(|i| self.values.get(i))
    }

    /// `B(2j)` unpacked with the context the table was built for.
    pub fn get(&self, ctx: &Context, j: usize) -> Result<MpFloat> {
        let p = self.packed(j).ok_or_else(|| domain(format!("no entry {j}")))?;
        unpack(ctx, p)
    }

    pub fn to_vec(&self, ctx: &Context) -> Result<Vec<MpFloat>> {
        self.values.iter().map(|p| unpack(ctx, p)).collect()
    }
}

/// `B(2), ..., B(2 count)` at the precision of `w`.
///
/// With `D_j = B(2j) 4^j / (2j)!`, the product of `y/(e^y - 1)` and `sinh(y/2)`
/// gives `D_j = 1/(2j)! - sum_{k<j} D_k / (2(j-k)+1)!`. Once `zeta(2j)` equals one
/// to working precision the closed form `D_j = -D_(j-1) / pi^2` takes over.
pub(crate) fn bernoulli_work(w: &Context, count: usize) -> Result<Vec<MpFloat>> {
    let t = w.digits() as f64;
    let closed_from = ((t + 1.0) * ln_base(w) / (2.0 * std::f64::consts::LN_2)).ceil() as usize + 1;
    let mut inv_fact = vec![one()];
    for m in 1..=(2 * count.min(closed_from) + 2) as i64 {
        let prev = inv_fact.last().cloned().unwrap_or_else(one);
        inv_fact.push(arith::div_small(w, &prev, m)?);
    }
    let mut d: Vec<MpFloat> = vec![one()];
    let mut out = Vec::with_capacity(count);
    let mut scale = one();
    let mut inv_pi2 = None;
    for j in 1..=count {
        let dj = if j < closed_from {
            let mut s = inv_fact[2 * j].clone();
            for (k, dk) in d.iter().enumerate() {
                s = arith::sub(w, &s, &arith::mul(w, dk, &inv_fact[2 * (j - k) + 1])?)?;
            }
            s
        } else {
            let ip = match &inv_pi2 {
                Some(v) => v,
                None => {
                    let p = pi_work(w)?;
                    inv_pi2.insert(arith::recip(w, &arith::mul(w, &p, &p)?)?)
                }
            };
            if j == closed_from {
                let ipj = pow_work(w, ip, j as u64)?;
                let v = arith::mul_small(w, &ipj, 2)?;
                if j % 2 == 0 { v.neg() } else { v }
            } else {
                arith::mul(w, d.last().expect("previous entry"), ip)?.neg()
            }
        };
        let jj = j as i64;
        scale = arith::div_small(w, &arith::mul_small(w, &scale, 2 * jj)?, 4)?;
        scale = arith::mul_small(w, &scale, 2 * jj - 1)?;
        out.push(arith::mul(w, &dj, &scale)?);
        d.push(dj);
    }
    Ok(out)
}

/// Bernoulli numbers `B(2), ..., B(2|n|)`. A negative `n` gives a table whose
/// precision decreases linearly with the index.
pub fn bernoulli(ctx: &Context, n: i64) -> Result<BernoulliTable> {
    if n == 0 {
        return Err(config("bernoulli table needs n != 0"));
    }
    let count = n.unsigned_abs() as usize;
    let w = work_for(ctx, 64 * (count as u128 * count as u128 + 16));
    let raw = bernoulli_work(&w, count)?;
    let t = ctx.digits();
    let profile = if n > 0 { PrecisionProfile::Full } else { PrecisionProfile::LinearlyDecreasing };
    let mut values = Vec::with_capacity(count);
    for (i, v) in raw.iter().enumerate() {
        let x = finish(ctx, v, 64 * ((i as u64 + 1).pow(2) + 4))?;
        let x = match profile {
            PrecisionProfile::Full => x,
            PrecisionProfile::LinearlyDecreasing => {
                let tj = (t - i * (t - 2) / count).max(2);
                let short = move_precision(ctx, &x, tj)?;
                move_precision(ctx, &short, t)?
            }
        };
        values.push(pack(ctx, &x));
    }
    Ok(BernoulliTable { values, profile })
}

/// Riemann zeta function at an integer `n >= 2`.
pub fn zeta(ctx: &Context, n: i64) -> Result<MpFloat> {
    if n < 2 {
        return Err(domain("zeta needs n >= 2"));
    }
    let w = work_for(ctx, 1 << 16);
    let z = match n {
        2 | 4 | 6 | 8 => {
            let p = pow_work(&w, &pi_work(&w)?, n as u64)?;
            let d = match n {
                2 => 6,
                4 => 90,
                6 => 945,
                _ => 9450,
            };
            arith::div_small(&w, &p, d)?
        }
        3 => zeta3(&w)?,
        _ => {
            let lnk = w.digits() as f64 * ln_base(ctx) / n as f64;
            if lnk < 64f64.ln() {
                zeta_direct(&w, n)?
            } else {
                zeta_euler_maclaurin(&w, n)?
            }
        }
    };
    finish(ctx, &z, 1024)
}

/// `zeta(3) = (5/2) sum_{k>=1} (-1)^(k+1) / (k^3 C(2k, k))`.
fn zeta3(w: &Context) -> Result<MpFloat> {
    let t = w.digits() as i64;
    let mut c = arith::div_small(w, &one(), 2)?;
    let mut sum = c.clone();
    let mut k = 2i64;
    loop {
        let km = k - 1;
        c = arith::mul_small(w, &c, km * km * km)?;
        c = arith::div_small(w, &c, k * k)?;
        c = arith::div_small(w, &c, 2 * (2 * k - 1))?;
        if c.is_zero() || c.exponent() < sum.exponent() - t - 1 {
            break;
        }
        sum = if k % 2 == 0 { arith::sub(w, &sum, &c)? } else { arith::add(w, &sum, &c)? };
        k += 1;
    }
    arith::div_small(w, &arith::mul_small(w, &sum, 5)?, 2)
}

fn zeta_direct(w: &Context, n: i64) -> Result<MpFloat> {
    let t = w.digits() as i64;
    let mut sum = one();
    let mut k = 2i64;
    loop {
        let p = pow_work(w, &arith::from_i64(w, k)?, n as u64)?;
        let term = arith::recip(w, &p)?;
        if term.exponent() < -t - 1 {
            return Ok(sum);
        }
        sum = arith::add(w, &sum, &term)?;
        k += 1;
    }
}

fn zeta_euler_maclaurin(w: &Context, n: i64) -> Result<MpFloat> {
    let t = w.digits() as i64;
    let l = w.digits() as f64 * ln_base(w);
    let big_n = ((std::f64::consts::E * (l + n as f64)) / (2.0 * PI)).ceil() as i64 + 1;
    let mut sum = MpFloat::zero();
    for k in 1..big_n {
        let p = pow_work(w, &arith::from_i64(w, k)?, n as u64)?;
        sum = arith::add(w, &sum, &arith::recip(w, &p)?)?;
    }
    let nn = arith::from_i64(w, big_n)?;
    let inv_nn = arith::recip(w, &pow_work(w, &nn, n as u64)?)?;
    let tail = arith::div_small(w, &arith::mul_small(w, &inv_nn, big_n)?, n - 1)?;
    sum = arith::add(w, &sum, &tail)?;
    sum = arith::add(w, &sum, &arith::div_small(w, &inv_nn, 2)?)?;
    let jmax = (l / 2.0).ceil() as usize + 4;
    let bern = bernoulli_work(w, jmax)?;
    let n2 = big_n * big_n;
    let mut q = arith::div_small(w, &arith::div_small(w, &arith::mul_small(w, &inv_nn, n)?, big_n)?, 2)?;
    for (i, b) in bern.iter().enumerate() {
        let j = i as i64 + 1;
        let term = arith::mul(w, b, &q)?;
        if term.is_zero() || term.exponent() < sum.exponent() - t - 2 {
            break;
        }
        sum = arith::add(w, &sum, &term)?;
        q = arith::mul_small(w, &q, (n + 2 * j - 1) * (n + 2 * j))?;
        q = arith::div_small(w, &q, (2 * j + 1) * (2 * j + 2))?;
        q = arith::div_small(w, &q, n2)?;
    }
    Ok(sum)
}
