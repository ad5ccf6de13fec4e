//! Directed rounding gives guaranteed bounds: evaluating with Down and with Up
//! brackets the exact result.

use mpkit::{arith, convio, elem, Context, RoundingRule};

fn main() -> mpkit::Result<()> {
    let ctx = Context::new(10, 12, 100)?;
    let down = ctx.with_rule(RoundingRule::Down);
    let up = ctx.with_rule(RoundingRule::Up);

    // 1/3 + 1/7 - 10/21 is exactly zero
    let eval = |c: &Context| -> mpkit::Result<mpkit::MpFloat> {
        let one = arith::from_i64(c, 1)?;
        let a = arith::div_small(c, &one, 3)?;
        let b = arith::div_small(c, &one, 7)?;
        let ten = arith::from_i64(c, 10)?;
        let d = arith::div_small(c, &ten, 21)?;
        // subtracting a lower bound of d needs the upper rule, and vice versa
        let d = if c.rounding_rule() == RoundingRule::Down { arith::div_small(&up, &ten, 21)? } else { d };
        arith::sub(c, &arith::add(c, &a, &b)?, &d)
    };
    let lo = eval(&down)?;
    let hi = eval(&up)?;
    println!("lower = {}", convio::format_sci(&ctx, &lo, 12)?);
    println!("upper = {}", convio::format_sci(&ctx, &hi, 12)?);

    // functions honour the rule too
    let two = arith::from_i64(&ctx, 2)?;
    println!("sqrt 2 in [{}, {}]", convio::format_fixed(&down, &elem::sqrt(&down, &two)?, 16, 13)?.trim(), convio::format_fixed(&up, &elem::sqrt(&up, &two)?, 16, 13)?.trim());
    Ok(())
}
