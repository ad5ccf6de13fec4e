use crate::arith;
use crate::context::{Context, RoundingRule};
use crate::convio;
use crate::error::Result;
use crate::programs::ulps_apart;
use crate::repr::MpFloat;

/// Decimal, large power-of-two and binary contexts of roughly 38 to 40 decimals.
pub(crate) fn contexts() -> Vec<Context> {
    vec![
        Context::new(10, 40, 1000).unwrap(),
        Context::new(16384, 9, 1000).unwrap(),
        Context::new(2, 128, 100_000).unwrap(),
    ]
}

/// `text` to about 70 decimals in the base of `ctx`.
pub(crate) fn reference(ctx: &Context, text: &str) -> MpFloat {
    let b = ctx.base();
    let t = (70.0 / (b as f64).log10()).ceil() as usize;
    convio::parse(&Context::new(b, t, 100_000).unwrap(), text).unwrap()
}

/// Checks `f` against a 60-digit reference in every test context: within `limit`
/// ulps under NearestEven, and when `directed`, bracketed within two ulps by Down
/// and Up.
pub(crate) fn check<F>(label: &str, f: F, expected: &str, limit: f64, directed: bool)
where
    F: Fn(&Context) -> Result<MpFloat>,
{
    for ctx in contexts() {
        let r = reference(&ctx, expected);
        let near = f(&ctx.with_rule(RoundingRule::NearestEven)).unwrap();
        let d = ulps_apart(&ctx, &near, &r);
        assert!(d <= limit, "{label}: B={} off by {d} ulp", ctx.base());
        if directed {
            let lo = f(&ctx.with_rule(RoundingRule::Down)).unwrap();
            let hi = f(&ctx.with_rule(RoundingRule::Up)).unwrap();
            assert!(arith::le(&lo, &r), "{label}: B={} lower bound above", ctx.base());
            assert!(arith::ge(&hi, &r), "{label}: B={} upper bound below", ctx.base());
            assert!(ulps_apart(&ctx, &hi, &lo) <= 2.0 + 1e-9, "{label}: B={} bounds too wide", ctx.base());
        }
    }
}

pub(crate) fn num(ctx: &Context, text: &str) -> MpFloat {
    convio::parse(&ctx.with_rule(RoundingRule::NearestEven), text).unwrap()
}
