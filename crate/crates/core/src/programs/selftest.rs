use std::cmp::Ordering;
use std::fmt::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::context::{Context, RoundingRule};
use crate::convio;
use crate::error::Result;
use crate::kernel::Exact;
use crate::repr::MpFloat;
use crate::{arith, elem, special};

use super::constants::{constant_context, constant_text, ConstantName};

/// Expected output of the `constants` command at 100, 100 and 90 places.
pub const PI_100: &str = "3.\
14159265358979323846264338327950288419716939937510\
58209749445923078164062862089986280348253421170680";
pub const RAMANUJAN3_100: &str = "640320.\
00000000060486373504901603947174181881853947577148\
57603665918194652218258286942536340815822646477590";
pub const RAMANUJAN_90: &str = "262537412640768743.\
99999999999925007259719818568887935385633733699086\
2707537410378210647910118607312951181346";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct SelfTestReport {
    pub checks: Vec<Check>,
}

impl SelfTestReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(s, "{tag} {:<28} {}", c.name, c.detail).expect("writing to a string");
        }
        writeln!(s, "{} passed, {} failed", self.passed(), self.failed()).expect("writing to a string");
        s
    }

    fn record(&mut self, name: &str, outcome: Result<(bool, String)>) {
        let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
        self.checks.push(Check { name: name.to_string(), passed, detail });
    }
}

/// A configuration `fresh` that keeps the diagnostic switches of `like`.
fn derived(like: &Context, fresh: Context) -> Context {
    fresh.with_faulty_mul(like.faulty_mul())
}

/// `|a - b|` in units of the last place of `b` at `ctx`'s precision.
pub fn ulps_apart(ctx: &Context, a: &MpFloat, b: &MpFloat) -> f64 {
    let base = ctx.base();
    let d = a.exact().sub(&b.exact(), base);
    if d.is_zero() {
        return 0.0;
    }
    let reference = if b.is_zero() { a } else { b };
    let unit_exp = reference.exponent() - ctx.digits() as i64;
    let top = d.top();
    let lead: Vec<u64> = d.mag.iter().rev().take(4).copied().collect();
    let mut m = 0.0;
    for (i, &v) in lead.iter().enumerate() {
        m += v as f64 * (base as f64).powi(-(i as i32) - 1);
    }
    m * (base as f64).powf((top - unit_exp) as f64)
}

/// `|a - b| / |b|` in units of `B^(1-T)`, the largest relative spacing.
pub fn eps_apart(ctx: &Context, a: &MpFloat, b: &MpFloat) -> f64 {
    let d = ulps_apart(ctx, a, b);
    if b.is_zero() || d == 0.0 {
        return d;
    }
    let (m, _) = arith::mantissa_f64(ctx, b);
    d / (m.abs() * ctx.base() as f64)
}

fn random_mp<R: Rng>(rng: &mut R, ctx: &Context) -> MpFloat {
    let t = ctx.digits();
    let b = ctx.base() as u32;
    let mut d: Vec<u32> = (0..t).map(|_| rng.gen_range(0..b)).collect();
    d[0] = rng.gen_range(1..b);
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    MpFloat::from_parts(ctx, sign, rng.gen_range(-3..=3), &d).expect("valid random number")
}

/// Whether `r` is an acceptable rounding of `num / den` (`den > 0`) under `rule`.
fn rounding_ok(ctx: &Context, rule: RoundingRule, r: &MpFloat, num: &Exact, den: &Exact) -> bool {
    let base = ctx.base();
    if r.is_zero() {
        return num.is_zero();
    }
    let scaled = r.exact().mul(den, base);
    let gap = scaled.sub(num, base).abs();
    let ulp = Exact::from_i128(1, base).shifted(r.exponent() - ctx.digits() as i64).mul(den, base);
    match rule {
        RoundingRule::Down => scaled.cmp(num) != Ordering::Greater && gap.cmp_abs(&ulp) == Ordering::Less,
        RoundingRule::Up => scaled.cmp(num) != Ordering::Less && gap.cmp_abs(&ulp) == Ordering::Less,
        RoundingRule::NearestEven => gap.mul_small(2, base).cmp_abs(&ulp) != Ordering::Greater,
        RoundingRule::Truncate => gap.mul_small(100, base).cmp_abs(&ulp.mul_small(101, base)) != Ordering::Greater,
    }
}

/// Random operands at several radices and lengths, checked against exact results
/// for every rounding rule.
fn bracketing(like: &Context, samples: usize) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d70_6b69_74);
    let mut bad = Vec::new();
    let mut count = 0usize;
    for base in [2u64, 10, 64] {
        for t in [2usize, 3, 8] {
            let c = derived(like, Context::new(base, t, 1000)?);
            let b = base;
            for _ in 0..samples {
                let x = random_mp(&mut rng, &c);
                let y = random_mp(&mut rng, &c);
                let k = rng.gen_range(1..=1000i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
                let (xe, ye) = (x.exact(), y.exact());
                let one = Exact::from_i128(1, b);
                let fix = |n: Exact, d: Exact| if d.sign() < 0 { (n.negated(), d.negated()) } else { (n, d) };
                for rule in [RoundingRule::Truncate, RoundingRule::NearestEven, RoundingRule::Down, RoundingRule::Up] {
                    let rc = c.with_rule(rule);
                    let cases = [
                        ("add", arith::add(&rc, &x, &y)?, xe.add(&ye, b), one.clone()),
                        ("sub", arith::sub(&rc, &x, &y)?, xe.sub(&ye, b), one.clone()),
                        ("mul", arith::mul(&rc, &x, &y)?, xe.mul(&ye, b), one.clone()),
                        ("mul_small", arith::mul_small(&rc, &x, k)?, xe.mul(&Exact::from_i128(k as i128, b), b), one.clone()),
                        ("div", arith::div(&rc, &x, &y)?, xe.clone(), ye.clone()),
                        ("div_small", arith::div_small(&rc, &x, k)?, xe.clone(), Exact::from_i128(k as i128, b)),
                    ];
                    for (op, r, n, d) in cases {
                        let (n, d) = fix(n, d);
                        count += 1;
                        if !rounding_ok(&rc, rule, &r, &n, &d) && bad.len() < 3 {
                            bad.push(format!("{op} B={base} T={t} {rule:?} {x:?} {y:?} -> {r:?}"));
                        }
                    }
                }
            }
        }
    }
    Ok((bad.is_empty(), if bad.is_empty() { format!("{count} roundings") } else { bad.join("; ") }))
}

fn within(ctx: &Context, a: &MpFloat, b: &MpFloat, ulps: f64) -> (bool, String) {
    let d = ulps_apart(ctx, a, b);
    (d <= ulps, format!("{d:.2} ulp (limit {ulps})"))
}

fn all_within(ctx: &Context, pairs: &[(MpFloat, MpFloat)], ulps: f64) -> (bool, String) {
    let worst = pairs.iter().map(|(a, b)| ulps_apart(ctx, a, b)).fold(0.0, f64::max);
    (worst <= ulps, format!("worst {worst:.2} ulp over {} (limit {ulps})", pairs.len()))
}

fn all_relative(ctx: &Context, pairs: &[(MpFloat, MpFloat)], eps: f64) -> (bool, String) {
    let worst = pairs.iter().map(|(a, b)| eps_apart(ctx, a, b)).fold(0.0, f64::max);
    (worst <= eps, format!("worst {worst:.2} eps over {} (limit {eps})", pairs.len()))
}

fn golden(like: &Context, name: ConstantName, places: usize, expected: &str) -> Result<(bool, String)> {
    let ctx = derived(like, constant_context(name, places as u32, 32)?);
    let got = constant_text(&ctx, name, places)?;
    let ok = got == expected;
    Ok((ok, if ok { format!("{places} places") } else { format!("got {got}") }))
}

fn num(ctx: &Context, s: &str) -> Result<MpFloat> {
    convio::parse(&ctx.with_io_bases(10, ctx.out_base())?, s)
}

fn identities(report: &mut SelfTestReport, ctx: &Context) {
    let one = || arith::from_i64(ctx, 1);
    report.record(
        "sin^2 + cos^2 = 1",
        (|| {
            let mut pairs = Vec::new();
            for s in ["0.5", "1", "2.75", "-10.125", "100.3"] {
                let x = num(ctx, s)?;
                let (c, si) = (elem::cos(ctx, &x)?, elem::sin(ctx, &x)?);
                let w = ctx.with_digits(2 * ctx.digits())?;
                let sum = arith::add(&w, &arith::mul(&w, &si, &si)?, &arith::mul(&w, &c, &c)?)?;
                pairs.push((sum, one()?));
            }
            Ok(all_within(ctx, &pairs, 4.0))
        })(),
    );
    report.record(
        "erf + erfc = 1",
        (|| {
            let mut pairs = Vec::new();
            for s in ["0.1", "0.5", "1", "1.5", "3"] {
                let x = num(ctx, s)?;
                let w = ctx.with_digits(2 * ctx.digits())?;
                pairs.push((arith::add(&w, &special::erf(ctx, &x)?, &special::erfc(ctx, &x)?)?, one()?));
            }
            Ok(all_within(ctx, &pairs, 4.0))
        })(),
    );
    report.record(
        "gamma(x+1) = x gamma(x)",
        (|| {
            let mut pairs = Vec::new();
            for s in ["0.30078125", "1.7109375", "4.2578125", "11.50390625", "-2.4921875"] {
                let x = num(ctx, s)?;
                let lhs = special::gamma(ctx, &arith::add_small(ctx, &x, 1)?)?;
                let w = ctx.with_digits(2 * ctx.digits())?;
                pairs.push((arith::mul(&w, &x, &special::gamma(ctx, &x)?)?, lhs));
            }
            Ok(all_relative(ctx, &pairs, 2.0))
        })(),
    );
    report.record(
        "exp(ln x) = x",
        (|| {
            let mut pairs = Vec::new();
            for s in ["0.001", "0.75", "2", "12345.678"] {
                let x = num(ctx, s)?;
                let w = ctx.with_digits(ctx.digits() + 3)?;
                pairs.push((elem::exp(&w, &elem::ln(&w, &x)?)?, x));
            }
            Ok(all_within(ctx, &pairs, 2.0))
        })(),
    );
    report.record(
        "bessel recurrence",
        (|| {
            let x = num(ctx, "2.5")?;
            let w = ctx.with_digits(ctx.digits() + 3)?;
            let mut pairs = Vec::new();
            for n in 1..6i64 {
                let lhs = arith::add(&w, &special::bessel_j(&w, n - 1, &x)?, &special::bessel_j(&w, n + 1, &x)?)?;
                let rhs = arith::div(&w, &arith::mul_small(&w, &special::bessel_j(&w, n, &x)?, 2 * n)?, &x)?;
                pairs.push((lhs, rhs));
            }
            Ok(all_within(ctx, &pairs, 16.0))
        })(),
    );
    report.record(
        "J0 + 2 sum J2k = 1",
        (|| {
            let x = num(ctx, "3.5")?;
            let w = ctx.with_digits(ctx.digits() + 3)?;
            let mut sum = special::bessel_j(&w, 0, &x)?;
            for k in 1..60i64 {
                let term = special::bessel_j(&w, 2 * k, &x)?;
                sum = arith::add(&w, &sum, &arith::mul_small(&w, &term, 2)?)?;
            }
            Ok(within(ctx, &sum, &one()?, 16.0))
        })(),
    );
    report.record(
        "jacobi FN(x) = FN(1/x)",
        (|| {
            let mut worst = 0.0f64;
            for s in ["0.5", "0.3", "2"] {
                let r = super::jacobi::jacobi(ctx, &num(ctx, s)?)?;
                worst = worst.max(ulps_apart(ctx, &r.fn_x, &r.fn_recip));
            }
            Ok((worst <= 64.0, format!("worst {worst:.2} ulp (limit 64)")))
        })(),
    );
}

fn cross_method(report: &mut SelfTestReport, ctx: &Context) {
    report.record(
        "pi: machin vs gauss-legendre",
        (|| Ok(within(ctx, &special::pi(ctx)?, &special::pi_gauss_legendre(ctx)?, 8.0)))(),
    );
    report.record(
        "ln: series vs agm",
        (|| {
            let mut pairs = Vec::new();
            for s in ["0.01", "0.5", "0.999", "1.001", "2", "10", "1E10", "3.7E-20"] {
                let x = num(ctx, s)?;
                pairs.push((elem::ln(ctx, &x)?, elem::ln_agm(ctx, &x)?));
            }
            Ok(all_within(ctx, &pairs, 8.0))
        })(),
    );
    report.record(
        "bernoulli vs zeta",
        (|| {
            let table = special::bernoulli(ctx, 15)?;
            let w = ctx.with_digits(ctx.digits() + 4)?;
            let two_pi = arith::mul_small(&w, &special::pi(&w)?, 2)?;
            let mut pairs = Vec::new();
            let mut fact = arith::from_i64(&w, 1)?;
            for j in 1..=15i64 {
                fact = arith::mul_small(&w, &arith::mul_small(&w, &fact, 2 * j - 1)?, 2 * j)?;
                let z = special::zeta(&w, 2 * j)?;
                let v = arith::div(&w, &arith::mul_small(&w, &arith::mul(&w, &fact, &z)?, 2)?, &elem::pow_int(&w, &two_pi, 2 * j)?)?;
                let v = if j % 2 == 0 { v.neg() } else { v };
                pairs.push((table.get(ctx, j as usize)?, v));
            }
            Ok(all_within(ctx, &pairs, 8.0))
        })(),
    );
}

/// Constants that must print identically whatever the radix.
fn radix_values(ctx: &Context, full: bool) -> Result<Vec<String>> {
    let mut values = vec![special::pi(ctx)?, elem::ln_int(ctx, 2)?];
    if full {
        values.push(special::euler_gamma(ctx)?);
        values.push(special::zeta(ctx, 3)?);
        values.push(special::erf(ctx, &arith::from_i64(ctx, 1)?)?);
        values.push(special::bessel_j(ctx, 0, &arith::from_i64(ctx, 1)?)?);
        values.push(special::gamma_rational(ctx, 1, 3)?);
    }
    values.iter().map(|v| convio::format_fixed(ctx, v, 45, 38)).collect()
}

fn cross_base(report: &mut SelfTestReport, like: &Context, full: bool) {
    report.record(
        "decimal vs binary radix",
        (|| {
            let dec = derived(like, Context::new(10, 42, 10_000)?);
            let bin = derived(like, Context::init(42, 32)?);
            let a = radix_values(&dec, full)?;
            let b = radix_values(&bin, full)?;
            let mismatched = a.iter().zip(&b).filter(|(x, y)| x != y).count();
            Ok((mismatched == 0, format!("{} values, {mismatched} mismatched", a.len())))
        })(),
    );
}

/// Run the built-in checks. `ctx` sets the precision of the identity and
/// cross-method suites; the golden, rounding and radix suites use their own
/// configurations. The quick level takes a few seconds.
pub fn selftest(ctx: &Context, level: Level) -> SelfTestReport {
    let full = level == Level::Full;
    let mut report = SelfTestReport::default();
    report.record("golden pi", golden(ctx, ConstantName::Pi, 100, PI_100));
    report.record("golden exp(pi sqrt(163/9))", golden(ctx, ConstantName::Ramanujan3, 100, RAMANUJAN3_100));
    report.record("golden exp(pi sqrt(163))", golden(ctx, ConstantName::Ramanujan, 90, RAMANUJAN_90));
    report.record("rounding brackets", bracketing(ctx, if full { 2000 } else { 100 }));
    cross_method(&mut report, ctx);
    identities(&mut report, ctx);
    cross_base(&mut report, ctx, full);
    if full {
        for rule in [RoundingRule::NearestEven, RoundingRule::Down, RoundingRule::Up] {
            let c = ctx.with_rule(rule);
            let mut sub = SelfTestReport::default();
            cross_method(&mut sub, &c);
            identities(&mut sub, &c);
            for mut check in sub.checks {
                check.name = format!("{} [{rule:?}]", check.name);
                report.checks.push(check);
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_passes() {
        let ctx = Context::init(40, 32).unwrap();
        let r = selftest(&ctx, Level::Quick);
        assert!(r.all_passed(), "{}", r.render());
    }

    #[test]
    fn corrupted_multiplication_fails() {
        let ctx = Context::init(40, 32).unwrap().with_faulty_mul(true);
        let r = selftest(&ctx, Level::Quick);
        assert!(r.failed() > 0);
    }

    #[test]
    fn ulps_of_neighbours() {
        let ctx = Context::new(10, 4, 100).unwrap();
        let a = num(&ctx, "1.234").unwrap();
        let b = num(&ctx, "1.236").unwrap();
        assert!((ulps_apart(&ctx, &a, &b) - 2.0).abs() < 1e-9);
        assert_eq!(ulps_apart(&ctx, &a, &a), 0.0);
    }
}
