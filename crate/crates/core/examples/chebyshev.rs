//! Rewriting a polynomial in Chebyshev form and evaluating both forms.

use mpkit::special::{cheb_eval, cheb_transform, poly_eval, ChebCoeffs, Parity};
use mpkit::{arith, convio, Context};

fn main() -> mpkit::Result<()> {
    let ctx = Context::new(10, 30, 100)?;
    // 1 - 3x + 2x^3 + x^4
    let coeffs = [1i64, -3, 0, 2, 1];
    let power = ChebCoeffs {
        c: coeffs.iter().map(|&c| arith::from_i64(&ctx, c)).collect::<mpkit::Result<_>>()?,
        parity: Parity::Full,
    };
    let cheb = cheb_transform(&ctx, &power)?;
    for (i, c) in cheb.c.iter().enumerate() {
        println!("c{i} = {}", convio::format_fixed(&ctx, c, 12, 6)?.trim());
    }
    let x = convio::parse(&ctx, "0.3")?;
    println!("power form     {}", convio::format_fixed(&ctx, &poly_eval(&ctx, &x, &coeffs)?, 34, 28)?.trim());
    println!("Chebyshev form {}", convio::format_fixed(&ctx, &cheb_eval(&ctx, &cheb, &x)?, 34, 28)?.trim());
    Ok(())
}
