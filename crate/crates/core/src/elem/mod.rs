//! Powers, roots, exponentials, logarithms, circular and hyperbolic functions.
//!
//! Unless stated otherwise a function returns, under Truncate and NearestEven, a
//! result with error below 0.6 units in the last place; under Down a lower bound and
//! under Up an upper bound on the true value. Internally values are computed at a
//! few extra digits with a known error bound and rounded once at the end.

mod exp;
mod hyper;
mod log;
mod power;
mod trig;

pub use exp::{exp, expm1};
pub use hyper::{cosh, sinh, tanh};
pub use log::{ln, ln1p_small, ln_agm, ln_int, log10};
pub use power::{pow, pow_int, pow_rational, root, sqrt};
pub use trig::{asin, atan, atan2, atan_recip_int, cis, cos, sin, tan};

pub(crate) use exp::{exp_work, expm1_work};
pub(crate) use log::{ln_int_work, ln_work};
pub(crate) use power::{pow_work, root_work};
pub(crate) use trig::{cis_work, pi_work};

use crate::arith;
use crate::context::{Context, RoundingRule};
use crate::error::Result;
use crate::kernel::{self, guard_digits, Dir, Exact};
use crate::repr::MpFloat;

/// Digits to carry beyond the target for an error budget of `budget` working ulps.
pub(crate) fn working_digits(ctx: &Context, budget: u128) -> usize {
    ctx.digits() + 2 + guard_digits(ctx.base(), budget.max(2))
}

/// Round an approximation whose error is at most `ulps` units in its last place.
pub(crate) fn finish(ctx: &Context, approx: &MpFloat, ulps: u64) -> Result<MpFloat> {
    if approx.is_zero() {
        return Ok(MpFloat::zero());
    }
    let err = Exact::from_i128(ulps as i128, ctx.base()).shifted(approx.exponent() - approx.precision() as i64);
    finish_abs(ctx, approx, &err)
}

/// Round an approximation with absolute error at most `err`.
pub(crate) fn finish_abs(ctx: &Context, approx: &MpFloat, err: &Exact) -> Result<MpFloat> {
    let a = approx.exact();
    let t = ctx.digits();
    let b = ctx.base();
    match ctx.rounding_rule() {
        RoundingRule::Down => kernel::round_exact(ctx, &a.sub(err, b), Dir::Floor, t),
        RoundingRule::Up => kernel::round_exact(ctx, &a.add(err, b), Dir::Ceil, t),
        _ => kernel::round_exact(ctx, &a, Dir::Nearest, t),
    }
}

/// Round a value known to lie in `[lo, hi]`, with `mid` the best estimate.
pub(crate) fn finish_interval(ctx: &Context, lo: &MpFloat, hi: &MpFloat, mid: &MpFloat) -> Result<MpFloat> {
    let t = ctx.digits();
    match ctx.rounding_rule() {
        RoundingRule::Down => kernel::round_exact(ctx, &lo.exact(), Dir::Floor, t),
        RoundingRule::Up => kernel::round_exact(ctx, &hi.exact(), Dir::Ceil, t),
        _ => kernel::round_exact(ctx, &mid.exact(), Dir::Nearest, t),
    }
}

/// An exactly known value rounded under the context's rule.
pub(crate) fn exact_value(ctx: &Context, v: &MpFloat) -> Result<MpFloat> {
    kernel::round_exact(ctx, &v.exact(), Dir::of(ctx.rounding_rule()), ctx.digits())
}

/// Evaluate `-f(-x)` style symmetry: run `f` with Down and Up swapped and negate.
pub(crate) fn negated_with<F>(ctx: &Context, f: F) -> Result<MpFloat>
where
    F: FnOnce(&Context) -> Result<MpFloat>,
{
    let r = f(&ctx.with_rule(ctx.rounding_rule().reversed()))?;
    Ok(r.neg())
}

pub(crate) fn one() -> MpFloat {
    arith::one()
}

pub(crate) fn int(ctx: &Context, i: i64) -> MpFloat {
    arith::from_i64(&ctx.work(ctx.digits().max(4)), i).expect("small integer")
}

/// A rough `log2 |x|`.
pub(crate) fn log2_estimate(ctx: &Context, x: &MpFloat) -> f64 {
    let (m, e) = arith::mantissa_f64(ctx, x);
    m.abs().log2() + e as f64 * (ctx.base() as f64).log2()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::MpError;
    use crate::testing::{check, num};

    const NEAR: f64 = 0.6;

    #[test]
    fn exponentials_and_logarithms() {
        check("exp", |c| exp(c, &num(c, "0.703125")), "2.02005552770869657368538323652472409769924451064323745681862", NEAR, true);
        check("exp -1.25", |c| exp(c, &num(c, "-1.25")), "0.286504796860190100324885426647837602793150792328251047088382", NEAR, true);
        check("exp 100", |c| exp(c, &num(c, "100")), "26881171418161354484126255515800135873611118.7737419224151916", NEAR, true);
        check("expm1", |c| expm1(c, &num(c, "1.16415321826934814453125E-10")), "1.16415321833711078031422356347627903565254389336782742621162E-10", NEAR, true);
        check("ln", |c| ln(c, &num(c, "0.703125")), "-0.352220593589352099112142921677820359632418336247514899342043", NEAR, true);
        check("ln 2.5", |c| ln(c, &num(c, "2.5")), "0.916290731874155065183527211768011071450101219908262467791968", NEAR, true);
        check("ln 2^66", |c| ln(c, &num(c, "73786976294838206464")), "45.7477139169563904215373200162396534929830088677768467719649", NEAR, true);
        check("ln1p", |c| ln1p_small(c, &num(c, "9.5367431640625E-7")), "9.53673861659188233908415514963336143603148070979302858112255E-7", NEAR, true);
        check("ln_int", |c| ln_int(c, 10), "2.30258509299404568401799145468436420760110148862877297603333", NEAR, true);
        check("log10", |c| log10(c, &num(c, "2.5")), "0.397940008672037609572522210551013946463620237075782917379145", NEAR, true);
        check("ln_agm", |c| ln_agm(c, &num(c, "2.5")), "0.916290731874155065183527211768011071450101219908262467791968", 1.0, false);
    }

    #[test]
    fn powers_and_roots() {
        check("sqrt 2", |c| sqrt(c, &int(c, 2)), "1.41421356237309504880168872420969807856967187537694807317668", NEAR, true);
        check("cbrt", |c| root(c, &num(c, "2.5"), 3), "1.35720880829745328575904473483974460240255388474454847864218", NEAR, true);
        check("root 5", |c| root(c, &num(c, "0.703125"), 5), "0.931979818297837847080841046999307678500065218265352161676249", NEAR, true);
        check("pow", |c| pow(c, &num(c, "0.703125"), &num(c, "2.5")), "0.414554228616675488454764710618362522287040909870606041715872", NEAR, true);
        check("pow_int", |c| pow_int(c, &num(c, "2.5"), -7), "0.0016384", NEAR, true);
        check("pow_rational", |c| pow_rational(c, 163, 9, 1, 2), "4.2557151116012348872369840032602974491274545934337529504042", NEAR, true);
    }

    #[test]
    fn circular_and_hyperbolic() {
        check("sin", |c| sin(c, &num(c, "0.703125")), "0.646604669591152370524042159882800728804900968346484590502418", NEAR, true);
        check("cos 2.5", |c| cos(c, &num(c, "2.5")), "-0.801143615546933714833502790467351664428567848767820135074598", NEAR, true);
        check("tan", |c| tan(c, &num(c, "-1.25")), "-3.00956967386283128815756389438624393139163769960606218104762", NEAR, true);
        check("sin 1e6", |c| sin(c, &int(c, 1_000_000)), "-0.349993502171292952117652486780771469061406605328716273857059", NEAR, true);
        check("cis", |c| cis(c, &int(c, 1_000_000)).map(|p| p.0), "0.936752127533144786938532535074918775708097804212365879720578", NEAR, false);
        check("atan", |c| atan(c, &num(c, "0.703125")), "0.612820202165241325143384635495689165725594291152486924770366", NEAR, true);
        check("atan 2.5", |c| atan(c, &num(c, "2.5")), "1.19028994968253173292773377482931833760117898602945207291117", NEAR, true);
        check("asin", |c| asin(c, &num(c, "0.703125")), "0.779782810980313585769003134712469838521299526510376612339001", NEAR, true);
        check("atan2", |c| atan2(c, &num(c, "-1.25"), &num(c, "2.5")), "-0.463647609000806116214256231461214402028537054286120263810933", NEAR, true);
        check("atan 1/239", |c| atan_recip_int(c, 239), "0.00418407600207472386453821495928545274104806530763195082701961", NEAR, true);
        check("sinh", |c| sinh(c, &num(c, "0.703125")), "0.762509815391248996008907392779649386730651594435974880102621", NEAR, true);
        check("cosh", |c| cosh(c, &num(c, "-1.25")), "1.88842387716101573822771572816005154272244259554530133479404", NEAR, true);
        check("tanh", |c| tanh(c, &num(c, "2.5")), "0.986614298151430288881276039237349639212511982185406939461576", NEAR, true);
    }

    #[test]
    fn domain_errors() {
        let c = Context::new(10, 20, 100).unwrap();
        assert!(matches!(ln(&c, &MpFloat::zero()), Err(MpError::Domain(_))));
        assert!(matches!(sqrt(&c, &int(&c, -4)), Err(MpError::Domain(_))));
        assert!(matches!(asin(&c, &int(&c, 2)), Err(MpError::Domain(_))));
        assert!(root(&c, &int(&c, -8), 3).is_ok());
        assert!(exp(&c, &int(&c, 1000)).is_err());
    }

    #[test]
    fn exact_cases() {
        let c = Context::new(10, 20, 100).unwrap();
        assert!(arith::eq(&exp(&c, &MpFloat::zero()).unwrap(), &one()));
        assert!(ln(&c, &one()).unwrap().is_zero());
        assert!(arith::eq(&sqrt(&c, &int(&c, 144)).unwrap(), &int(&c, 12)));
        assert!(arith::eq(&root(&c, &int(&c, -27), 3).unwrap(), &int(&c, -3)));
        assert!(sin(&c, &MpFloat::zero()).unwrap().is_zero());
        assert!(arith::eq(&pow_int(&c, &int(&c, 3), 5).unwrap(), &int(&c, 243)));
    }
}
