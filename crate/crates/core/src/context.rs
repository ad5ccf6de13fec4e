//! Runtime configuration shared by every operation: radix, precision, exponent
//! range, rounding rule and the I/O settings, plus the telemetry counters that the
//! operations update.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicI64, AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use crate::error::{config, MpError, Result};
use crate::kernel::{self, Dir, Exact};
use crate::repr::MpFloat;

/// How a result that is not exactly representable is mapped to a representable one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RoundingRule {
    /// Chop (the cheapest rule; addition of opposite signs rounds up in magnitude).
    Truncate,
    /// Round to nearest, ties to an even last digit.
    NearestEven,
    /// Round toward minus infinity.
    Down,
    /// Round toward plus infinity.
    Up,
}

impl RoundingRule {
    pub fn code(self) -> i64 {
        match self {
            RoundingRule::Truncate => 0,
            RoundingRule::NearestEven => 1,
            RoundingRule::Down => 2,
            RoundingRule::Up => 3,
        }
    }

    pub fn from_code(code: i64) -> Result<Self> {
        match code {
            0 => Ok(RoundingRule::Truncate),
            1 => Ok(RoundingRule::NearestEven),
            2 => Ok(RoundingRule::Down),
            3 => Ok(RoundingRule::Up),
            _ => Err(config(format!("rounding rule must be 0..=3, got {code}"))),
        }
    }

    /// The rule to use when computing `-f(x)` as `f(-x)`: Down and Up swap.
    pub fn reversed(self) -> Self {
        match self {
            RoundingRule::Down => RoundingRule::Up,
            RoundingRule::Up => RoundingRule::Down,
            r => r,
        }
    }

    pub fn is_directed(self) -> bool {
        matches!(self, RoundingRule::Down | RoundingRule::Up)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum MemoKey {
    Pi,
    Ln(u64),
}

#[derive(Debug)]
struct Shared {
    underflow_count: AtomicU64,
    exp_seen_max: AtomicI64,
    exp_seen_min: AtomicI64,
    overflowed: AtomicBool,
    memo: Mutex<HashMap<(MemoKey, u64, usize), MpFloat>>,
}

impl Shared {
    fn new(max_exp: i64) -> Self {
        Shared {
            underflow_count: AtomicU64::new(0),
            exp_seen_max: AtomicI64::new(-max_exp),
            exp_seen_min: AtomicI64::new(max_exp + 1),
            overflowed: AtomicBool::new(false),
            memo: Mutex::new(HashMap::new()),
        }
    }
}

/// Exponent bound used by internal working contexts, large enough that
/// intermediate results never leave the range before the final rounding.
pub(crate) const WORK_MAX_EXP: i64 = (1i64 << 61) - 1;

/// Runtime parameters for multiple-precision arithmetic.
///
/// Clones share the telemetry counters (underflow count, extreme exponents) and the
/// cache of internal constants; use [`Context::detached`] for an independent copy.
#[derive(Clone)]
pub struct Context {
    base: u64,
    digits: usize,
    max_exp: i64,
    rule: RoundingRule,
    word_bits: u32,
    in_base: u32,
    out_base: u32,
    exp_field_width: usize,
    exp_char: char,
    in_record_len: usize,
    max_underflows: u64,
    decimal_places: u32,
    div_crossover: usize,
    fault_mul: bool,
    shared: Arc<Shared>,
}

impl fmt::Debug for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Context")
            .field("base", &self.base)
            .field("digits", &self.digits)
            .field("max_exp", &self.max_exp)
            .field("rule", &self.rule)
            .field("word_bits", &self.word_bits)
            .field("in_base", &self.in_base)
            .field("out_base", &self.out_base)
            .field("underflow_count", &self.underflow_count())
            .finish()
    }
}

impl PartialEq for Context {
    /// Compares configuration only; telemetry is ignored.
    fn eq(&self, o: &Self) -> bool {
        self.base == o.base
            && self.digits == o.digits
            && self.max_exp == o.max_exp
            && self.rule == o.rule
            && self.word_bits == o.word_bits
            && self.in_base == o.in_base
            && self.out_base == o.out_base
            && self.exp_field_width == o.exp_field_width
            && self.exp_char == o.exp_char
            && self.in_record_len == o.in_record_len
            && self.max_underflows == o.max_underflows
            && self.decimal_places == o.decimal_places
    }
}

fn max_int_for(word_bits: u32) -> u64 {
    (1u64 << (word_bits - 1)) - 1
}

/// Smallest `t` with `base^(t-1) >= 10^(decimals-1)`.
fn digits_for_decimals(base: u64, decimals: u32) -> usize {
    let target = crate::nat::pow(10, decimals.saturating_sub(1) as u64, base);
    let n = crate::nat::len(&target);
    let exact_power = target[..n - 1].iter().all(|&d| d == 0) && target[n - 1] == 1;
    if exact_power {
        n
    } else {
        n + 1
    }
}

impl Context {
    /// Choose the largest power-of-two base allowed by a `word_bits`-bit integer word
    /// and the smallest digit count giving `decimal_places` significant decimals.
    pub fn init(decimal_places: u32, word_bits: u32) -> Result<Context> {
        if !(12..=64).contains(&word_bits) {
            return Err(config("word_bits must be in 12..=64"));
        }
        if decimal_places == 0 {
            return Err(config("decimal_places must be positive"));
        }
        let mxint = max_int_for(word_bits);
        let base = 1u64 << ((word_bits - 4) / 2);
        let digits = digits_for_decimals(base, decimal_places).max(2);
        let max_exp = (mxint / 4) as i64;
        let ctx = Context::build(base, digits, max_exp, word_bits, decimal_places);
        ctx.validate()?;
        Ok(ctx)
    }

    /// [`Context::init`] with 64-bit words.
    pub fn with_decimals(decimal_places: u32) -> Result<Context> {
        Context::init(decimal_places, 64)
    }

    /// A context with explicit base, digit count and exponent bound, 64-bit words
    /// and the Truncate rule.
    pub fn new(base: u64, digits: usize, max_exp: i64) -> Result<Context> {
        let ctx = Context::build(base, digits, max_exp, 64, 0);
        ctx.validate()?;
        Ok(ctx)
    }

    fn build(base: u64, digits: usize, max_exp: i64, word_bits: u32, decimal_places: u32) -> Context {
        Context {
            base,
            digits,
            max_exp,
            rule: RoundingRule::Truncate,
            word_bits,
            in_base: 10,
            out_base: 10,
            exp_field_width: 6,
            exp_char: 'E',
            in_record_len: 80,
            max_underflows: 0,
            decimal_places,
            div_crossover: 30,
            fault_mul: false,
            shared: Arc::new(Shared::new(max_exp)),
        }
    }

    fn validate(&self) -> Result<()> {
        let mxint = self.max_int();
        if self.base < 2 {
            return Err(config("base must be at least 2"));
        }
        if 8 * (self.base as u128).pow(2) - 1 > mxint as u128 {
            return Err(config("base too large for the integer word (8B^2-1 > MXINT)"));
        }
        if self.digits < 2 {
            return Err(config("digits must be at least 2"));
        }
        if self.max_exp <= self.digits as i64 {
            return Err(config("max_exp must exceed digits"));
        }
        if (self.max_exp as u64).saturating_mul(4) > mxint {
            return Err(config("max_exp too large for the integer word (4M > MXINT)"));
        }
        if !(2..=16).contains(&self.in_base) || !(2..=16).contains(&self.out_base) {
            return Err(config("I/O bases must be in 2..=16"));
        }
        if !valid_exp_char(self.exp_char) {
            return Err(config("exponent character must not be a digit, sign or blank"));
        }
        if self.exp_field_width < 3 {
            return Err(config("exponent field width must be at least 3"));
        }
        if self.in_record_len == 0 {
            return Err(config("input record length must be positive"));
        }
        Ok(())
    }

    /// A copy with fresh telemetry counters and constant cache.
    pub fn detached(&self) -> Context {
        let mut c = self.clone();
        c.shared = Arc::new(Shared::new(self.max_exp));
        c
    }

    pub fn base(&self) -> u64 {
        self.base
    }
    pub fn digits(&self) -> usize {
        self.digits
    }
    pub fn max_exp(&self) -> i64 {
        self.max_exp
    }
    pub fn rounding_rule(&self) -> RoundingRule {
        self.rule
    }
    pub fn word_bits(&self) -> u32 {
        self.word_bits
    }
    /// Largest integer the configured word holds, `2^(word_bits-1) - 1`.
    pub fn max_int(&self) -> u64 {
        max_int_for(self.word_bits)
    }
    pub fn in_base(&self) -> u32 {
        self.in_base
    }
    pub fn out_base(&self) -> u32 {
        self.out_base
    }
    pub fn exp_field_width(&self) -> usize {
        self.exp_field_width
    }
    pub fn exp_char(&self) -> char {
        self.exp_char
    }
    pub fn in_record_len(&self) -> usize {
        self.in_record_len
    }
    pub fn max_underflows(&self) -> u64 {
        self.max_underflows
    }
    pub fn decimal_places(&self) -> u32 {
        self.decimal_places
    }
    /// Digit count up to which division uses exact long division under Truncate.
    pub fn div_crossover(&self) -> usize {
        self.div_crossover
    }
    pub fn underflow_count(&self) -> u64 {
        self.shared.underflow_count.load(Ordering::Relaxed)
    }
    pub fn exp_seen_max(&self) -> i64 {
        self.shared.exp_seen_max.load(Ordering::Relaxed)
    }
    pub fn exp_seen_min(&self) -> i64 {
        self.shared.exp_seen_min.load(Ordering::Relaxed)
    }
    /// True once any result overflowed (the largest exponent seen is then `max_exp + 1`).
    pub fn overflowed(&self) -> bool {
        self.shared.overflowed.load(Ordering::Relaxed)
    }

    pub fn with_rule(&self, rule: RoundingRule) -> Context {
        let mut c = self.clone();
        c.rule = rule;
        c
    }

    pub fn with_digits(&self, digits: usize) -> Result<Context> {
        let mut c = self.clone();
        c.digits = digits;
        c.validate()?;
        Ok(c)
    }

    pub fn with_base(&self, base: u64) -> Result<Context> {
        let mut c = self.clone();
        c.base = base;
        c.validate()?;
        Ok(c)
    }

    pub fn with_max_exp(&self, max_exp: i64) -> Result<Context> {
        let mut c = self.clone();
        c.max_exp = max_exp;
        c.validate()?;
        c.shared = Arc::new(Shared::new(max_exp));
        Ok(c)
    }

    pub fn with_io_bases(&self, in_base: u32, out_base: u32) -> Result<Context> {
        let mut c = self.clone();
        c.in_base = in_base;
        c.out_base = out_base;
        c.validate()?;
        Ok(c)
    }

    pub fn with_div_crossover(&self, digits: usize) -> Context {
        let mut c = self.clone();
        c.div_crossover = digits;
        c
    }

    #[doc(hidden)]
    pub fn with_faulty_mul(&self, on: bool) -> Context {
        let mut c = self.clone();
        c.fault_mul = on;
        c
    }

    pub(crate) fn faulty_mul(&self) -> bool {
        self.fault_mul
    }

    /// Working context: `digits` digits, Truncate, a wide exponent range, shared counters.
    pub(crate) fn work(&self, digits: usize) -> Context {
        let mut c = self.clone();
        c.digits = digits.max(2);
        c.rule = RoundingRule::Truncate;
        c.max_exp = WORK_MAX_EXP;
        c.max_underflows = 0;
        c
    }

    /// Update a parameter by name. Only the first three letters matter and case is
    /// ignored. On error the context is unchanged.
    pub fn set_param(&mut self, name: &str, value: i64) -> Result<()> {
        let key = param_key(name)?;
        let mut c = self.clone();
        let nonneg = |v: i64| -> Result<u64> {
            u64::try_from(v).map_err(|_| config(format!("{name} must be nonnegative")))
        };
        match key.as_str() {
            "BAS" => c.base = nonneg(value)?,
            "NUM" => c.digits = nonneg(value)? as usize,
            "MAX" => c.max_exp = value,
            "RND" => c.rule = RoundingRule::from_code(value)?,
            "KTU" => {
                let v = nonneg(value)?;
                self.shared.underflow_count.store(v, Ordering::Relaxed);
                return Ok(());
            }
            "MXU" => c.max_underflows = nonneg(value)?,
            "DEC" => {
                c.decimal_places = u32::try_from(value)
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or_else(|| config("decimal places must be positive"))?
            }
            "MXI" => {
                let v = nonneg(value)?;
                if v == 0 || (v & (v + 1)) != 0 || v > i64::MAX as u64 {
                    return Err(config("MXINT must be 2^k - 1"));
                }
                c.word_bits = (v + 1).trailing_zeros() + 1;
                if c.word_bits < 12 {
                    return Err(config("MXINT too small"));
                }
            }
            "EXW" => c.exp_field_width = nonneg(value)? as usize,
            "INR" => c.in_record_len = nonneg(value)? as usize,
            "INB" => c.in_base = u32::try_from(value).map_err(|_| config("bad input base"))?,
            "OUT" => c.out_base = u32::try_from(value).map_err(|_| config("bad output base"))?,
            "EXP" => {
                c.exp_char = u32::try_from(value)
                    .ok()
                    .and_then(char::from_u32)
                    .ok_or_else(|| config("bad exponent character"))?
            }
            "MXE" => {
                self.shared.exp_seen_max.store(value, Ordering::Relaxed);
                return Ok(());
            }
            "MNE" => {
                self.shared.exp_seen_min.store(value, Ordering::Relaxed);
                return Ok(());
            }
            _ => return Err(config(format!("parameter {name} is not supported"))),
        }
        c.validate()?;
        if c.max_exp != self.max_exp {
            c.shared = Arc::new(Shared::new(c.max_exp));
        }
        *self = c;
        Ok(())
    }

    /// Read a parameter by name (see [`Context::set_param`]).
    pub fn get_param(&self, name: &str) -> Result<i64> {
        let key = param_key(name)?;
        Ok(match key.as_str() {
            "BAS" => self.base as i64,
            "NUM" => self.digits as i64,
            "MAX" => self.max_exp,
            "RND" => self.rule.code(),
            "KTU" => self.underflow_count() as i64,
            "MXU" => self.max_underflows as i64,
            "DEC" => self.decimal_places as i64,
            "MXI" => self.max_int() as i64,
            "EXW" => self.exp_field_width as i64,
            "INR" => self.in_record_len as i64,
            "INB" => self.in_base as i64,
            "OUT" => self.out_base as i64,
            "EXP" => self.exp_char as i64,
            "MXE" => self.exp_seen_max(),
            "MNE" => self.exp_seen_min(),
            _ => return Err(config(format!("parameter {name} is not supported"))),
        })
    }

    /// Relative spacing of representable numbers, as used to bound rounding errors.
    pub fn epsilon(&self) -> MpFloat {
        let b = self.base;
        let one_ulp = Exact { neg: false, mag: vec![1], exp: 1 - self.digits as i64 };
        let (num, den) = match self.rule {
            RoundingRule::Truncate => (one_ulp.mul_small(101, b), Exact::from_i128(100, b)),
            RoundingRule::NearestEven => (one_ulp, Exact::from_i128(2, b)),
            _ => (one_ulp, Exact::from_i128(1, b)),
        };
        kernel::round_ratio(&self.work(self.digits), &num, &den, Dir::Ceil, self.digits)
            .expect("epsilon is in range")
    }

    /// `B^M - B^(M-T)`.
    pub fn max_real(&self) -> MpFloat {
        MpFloat::raw(1, self.max_exp, vec![(self.base - 1) as u32; self.digits])
    }

    /// `B^(-M)`.
    pub fn min_real(&self) -> MpFloat {
        let mut d = vec![0u32; self.digits];
        d[0] = 1;
        MpFloat::raw(1, 1 - self.max_exp, d)
    }

    pub(crate) fn note_exponent(&self, e: i64) {
        let s = &self.shared;
        if e > s.exp_seen_max.load(Ordering::Relaxed) {
            s.exp_seen_max.fetch_max(e, Ordering::Relaxed);
        }
        if e < s.exp_seen_min.load(Ordering::Relaxed) {
            s.exp_seen_min.fetch_min(e, Ordering::Relaxed);
        }
    }

    pub(crate) fn note_overflow(&self) {
        self.shared.overflowed.store(true, Ordering::Relaxed);
        self.shared.exp_seen_max.fetch_max(self.max_exp + 1, Ordering::Relaxed);
    }

    /// Count an underflow and return the replacement value the rule prescribes.
    pub(crate) fn note_underflow(&self) -> Result<MpFloat> {
        let n = self.shared.underflow_count.fetch_add(1, Ordering::Relaxed) + 1;
        if self.max_underflows > 0 && n >= self.max_underflows {
            return Err(MpError::UnderflowLimit);
        }
        Ok(match self.rule {
            RoundingRule::Down => self.min_real().neg(),
            RoundingRule::Up => self.min_real(),
            _ => MpFloat::zero(),
        })
    }

    pub(crate) fn memo_get(&self, key: MemoKey, digits: usize) -> Option<MpFloat> {
        self.shared.memo.lock().ok()?.get(&(key, self.base, digits)).cloned()
    }

    pub(crate) fn memo_put(&self, key: MemoKey, digits: usize, value: &MpFloat) {
        if let Ok(mut m) = self.shared.memo.lock() {
            m.entry((key, self.base, digits)).or_insert_with(|| value.clone());
        }
    }
}

fn valid_exp_char(c: char) -> bool {
    !(c.is_ascii_digit() || c == '+' || c == '-' || c == ' ')
}

fn param_key(name: &str) -> Result<String> {
    let key: String = name.trim().chars().take(3).collect::<String>().to_ascii_uppercase();
    if key.len() < 3 {
        return Err(config(format!("unknown parameter {name}")));
    }
    Ok(key)
}
