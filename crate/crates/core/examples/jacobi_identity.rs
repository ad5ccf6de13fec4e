//! The theta-function identity FN(x) = FN(1/x), summed term by term.

use mpkit::programs::jacobi;
use mpkit::{convio, Context};

fn main() -> mpkit::Result<()> {
    let ctx = Context::init(40, 32)?;
    for s in [".5", ".3", "1.+1", "1.2345678901234567890123456789012345678901234567890123456789"] {
        let x = convio::parse(&ctx, s)?;
        print!("{}", jacobi(&ctx, &x)?.render(&ctx)?);
        println!();
    }
    Ok(())
}
