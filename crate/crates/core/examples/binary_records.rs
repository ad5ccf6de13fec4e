//! Packed storage and self-describing binary records.

use mpkit::{convio, repr, Context};

fn main() -> mpkit::Result<()> {
    let ctx = Context::init(30, 32)?;
    let x = convio::parse(&ctx, "-1234.56789")?;
    println!("{}", convio::debug_dump(&x));

    let packed = repr::pack(&ctx, &x);
    println!("packed words: {:?}", packed.words());

    let rec = convio::serialize(&ctx, &x);
    println!("record: {} bytes", rec.len());
    let back = convio::deserialize(&ctx, &rec)?;
    println!("round trip exact: {}", back == x);

    let other = ctx.with_digits(ctx.digits() + 1)?;
    println!("other precision: {}", convio::deserialize(&other, &rec).unwrap_err());
    Ok(())
}
