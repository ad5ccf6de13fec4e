//! Evaluating infix expressions over multiple-precision numbers.

use mpkit::programs::{evaluate, render};
use mpkit::Context;

fn main() -> mpkit::Result<()> {
    let ctx = Context::init(50, 32)?;
    for src in [
        "16*atan1(5) - 4*atan1(239)",
        "exp(pi*sqrt(163))",
        "gamma(1/2)**2 / pi",
        "(1 + 1/1000)**1000",
        "besselj(0, 2.404825557695773)",
        "zeta(3) - 1.2020569",
    ] {
        println!("{src:<32} = {}", render(&ctx, &evaluate(&ctx, src)?, 40)?);
    }
    Ok(())
}
