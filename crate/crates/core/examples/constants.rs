//! Pi by two methods, Euler's constant, and the near-integer exp(pi sqrt 163).

use mpkit::programs::{constant_context, constant_text, ConstantName};
use mpkit::{convio, special, Context};

fn main() -> mpkit::Result<()> {
    let ctx = Context::init(110, 32)?;
    let machin = special::pi(&ctx)?;
    let gl = special::pi_gauss_legendre(&ctx)?;
    println!("pi (Machin)          {}", convio::format_fixed(&ctx, &machin, 110, 100)?.trim());
    println!("pi (Gauss-Legendre)  {}", convio::format_fixed(&ctx, &gl, 110, 100)?.trim());
    println!("gamma                {}", convio::format_fixed(&ctx, &special::euler_gamma(&ctx)?, 110, 100)?.trim());

    for (name, places) in [(ConstantName::Ramanujan3, 100), (ConstantName::Ramanujan, 90)] {
        let c = constant_context(name, places, 32)?;
        println!("{name:<20} {}", constant_text(&c, name, places as usize)?);
    }
    Ok(())
}
