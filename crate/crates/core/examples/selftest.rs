//! Running the built-in checks, then again with a corrupted multiplication.

use mpkit::programs::{selftest, Level};
use mpkit::Context;

fn main() -> mpkit::Result<()> {
    let ctx = Context::init(40, 32)?;
    let report = selftest(&ctx, Level::Quick);
    print!("{}", report.render());

    let broken = selftest(&ctx.with_faulty_mul(true), Level::Quick);
    println!("with a faulty multiply: {} failed", broken.failed());
    Ok(())
}
