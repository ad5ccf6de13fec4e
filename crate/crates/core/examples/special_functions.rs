//! Gamma, error functions, exponential integral, Bessel functions, zeta and
//! Bernoulli numbers.

use mpkit::{arith, convio, special, Context};

fn main() -> mpkit::Result<()> {
    let ctx = Context::init(40, 32)?;
    let one = arith::from_i64(&ctx, 1)?;
    let half = convio::parse(&ctx, "0.5")?;
    let x = convio::parse(&ctx, "2.5")?;
    let show = |name: &str, v: &mpkit::MpFloat| -> mpkit::Result<()> {
        println!("{name:>12} = {}", convio::format_sci(&ctx, v, 40)?);
        Ok(())
    };
    show("Gamma(1/3)", &special::gamma_rational(&ctx, 1, 3)?)?;
    show("Gamma(2.5)", &special::gamma(&ctx, &x)?)?;
    show("lnGamma(100)", &special::ln_gamma(&ctx, &arith::from_i64(&ctx, 100)?)?)?;
    show("erf(1/2)", &special::erf(&ctx, &half)?)?;
    show("erfc(2.5)", &special::erfc(&ctx, &x)?)?;
    show("dawson(1)", &special::dawson(&ctx, &one)?)?;
    show("Ei(1)", &special::ei(&ctx, &one)?)?;
    show("li(2.5)", &special::li(&ctx, &x)?)?;
    show("J0(1)", &special::bessel_j(&ctx, 0, &one)?)?;
    show("J5(2.5)", &special::bessel_j(&ctx, 5, &x)?)?;
    show("zeta(3)", &special::zeta(&ctx, 3)?)?;
    show("zeta(7)", &special::zeta(&ctx, 7)?)?;

    let table = special::bernoulli(&ctx, 10)?;
    for j in 1..=table.len() {
        println!("{:>12} = {}", format!("B({})", 2 * j), convio::format_sci(&ctx, &table.get(&ctx, j)?, 20)?);
    }
    Ok(())
}
