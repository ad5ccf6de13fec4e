//! Reading numbers in the free-format grammar and writing them in fixed and
//! scientific layouts, in decimal and other radices.

use mpkit::{convio, Context, RoundingRule};

fn main() -> mpkit::Result<()> {
    let ctx = Context::new(10, 20, 1000)?;
    for s in ["- 123456789", "3.14159", "-44.", ".0001234", "123.456D789", "-.1234566-789", "+999+88"] {
        let x = convio::parse(&ctx, s)?;
        println!("{s:>16} -> {}", convio::format_sci(&ctx, &x, 10)?);
    }
    for s in ["12 345", "123.456E -67", "1.2.3", "E123", "64.4E+", "++12.3", "E3."] {
        println!("{s:>16} -> {}", convio::parse(&ctx, s).unwrap_err());
    }

    let x = convio::parse(&ctx, "-2.71828182845904523536")?;
    println!("F12.5       [{}]", convio::format_fixed(&ctx, &x, 12, 5)?);
    println!("F12.5 down  [{}]", convio::format_fixed(&ctx.with_rule(RoundingRule::Down), &x, 12, 5)?);
    println!("F12.5 up    [{}]", convio::format_fixed(&ctx.with_rule(RoundingRule::Up), &x, 12, 5)?);
    println!("I6          [{}]", convio::format_fixed(&ctx, &x, 6, -1)?);

    let hex = ctx.with_io_bases(16, 16)?;
    let y = convio::parse(&hex, "FF.8")?;
    println!("hex FF.8 = {} = {}", convio::format_sci(&hex, &y, 6)?, convio::format_fixed(&ctx, &y, 10, 3)?.trim());

    let (m, e) = convio::split_sci(&ctx, &x)?;
    println!("split: {} * 10^{e}", convio::format_fixed(&ctx, &m, 24, 20)?.trim());
    println!("as f64: {}", convio::to_f64(&ctx, &x)?);
    Ok(())
}
