//! Choosing a base and precision, inspecting parameters and the limits they imply.

use mpkit::{convio, Context, RoundingRule};

fn main() -> mpkit::Result<()> {
    // largest power-of-two base for 32-bit words, enough digits for 110 decimals
    let mut ctx = Context::init(110, 32)?;
    println!("B = {}, T = {}, M = {}", ctx.base(), ctx.digits(), ctx.max_exp());

    ctx.set_param("RNDRL", RoundingRule::NearestEven.code())?;
    ctx.set_param("EXWID", 8)?;
    println!("rounding rule = {:?}", ctx.rounding_rule());
    println!("NUMDIG via get_param = {}", ctx.get_param("NUMDIG")?);

    // a bad value is rejected and leaves the context as it was
    if let Err(e) = ctx.set_param("BASE", 1) {
        println!("rejected: {e}");
    }

    let small = Context::new(10, 5, 50)?;
    for rule in [RoundingRule::Truncate, RoundingRule::NearestEven, RoundingRule::Down, RoundingRule::Up] {
        let c = small.with_rule(rule);
        println!("{rule:?}: eps = {}", convio::format_sci(&c, &c.epsilon(), 5)?);
    }
    println!("maxr = {}", convio::format_sci(&small, &small.max_real(), 5)?);
    println!("minr = {}", convio::format_sci(&small, &small.min_real(), 5)?);
    Ok(())
}
