//! Elementary functions at 60 decimals.

use mpkit::{arith, convio, elem, Context};

fn main() -> mpkit::Result<()> {
    let ctx = Context::init(60, 32)?;
    let x = convio::parse(&ctx, "0.7")?;
    let show = |name: &str, v: &mpkit::MpFloat| -> mpkit::Result<()> {
        println!("{name:>10} = {}", convio::format_fixed(&ctx, v, 66, 60)?.trim());
        Ok(())
    };
    show("x", &x)?;
    show("exp(x)", &elem::exp(&ctx, &x)?)?;
    show("ln(x)", &elem::ln(&ctx, &x)?)?;
    show("sqrt(x)", &elem::sqrt(&ctx, &x)?)?;
    show("cbrt(x)", &elem::root(&ctx, &x, 3)?)?;
    show("x^x", &elem::pow(&ctx, &x, &x)?)?;
    show("sin(x)", &elem::sin(&ctx, &x)?)?;
    show("cos(x)", &elem::cos(&ctx, &x)?)?;
    show("tan(x)", &elem::tan(&ctx, &x)?)?;
    show("atan(x)", &elem::atan(&ctx, &x)?)?;
    show("asin(x)", &elem::asin(&ctx, &x)?)?;
    show("tanh(x)", &elem::tanh(&ctx, &x)?)?;
    show("log10(x)", &elem::log10(&ctx, &x)?)?;
    show("ln 10", &elem::ln_int(&ctx, 10)?)?;

    // arguments far from the origin are reduced with extra precision
    let big = arith::from_i64(&ctx, 1_000_000_007)?;
    show("sin(1e9+7)", &elem::sin(&ctx, &big)?)?;
    Ok(())
}
