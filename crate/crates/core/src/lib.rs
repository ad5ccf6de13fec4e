//! Multiple-precision floating-point arithmetic with a base, precision, exponent
//! range and rounding rule chosen at run time.
//!
//! Every operation takes a [`Context`] describing the arithmetic and returns a
//! [`MpFloat`] rounded according to the context's [`RoundingRule`]. Basic operations
//! round the exact result; the elementary and special functions carry documented
//! error bounds, and the directed rules (Down, Up) always give lower and upper bounds.
//!
//! ```
//! use mpkit::{Context, RoundingRule, arith, convio};
//!
//! let ctx = Context::new(10, 6, 100).unwrap().with_rule(RoundingRule::Up);
//! let third = arith::div_small(&ctx, &arith::from_i64(&ctx, 1).unwrap(), 3).unwrap();
//! assert_eq!(convio::format_sci(&ctx, &third, 6).unwrap(), "3.33334E-0001");
//! ```

pub mod arith;
pub mod context;
pub mod convio;
pub mod elem;
mod error;
mod kernel;
mod nat;
pub mod programs;
pub mod repr;
pub mod special;
#[cfg(test)]
mod testing;

pub use arith::Rational;
pub use context::{Context, RoundingRule};
pub use error::{MpError, Result};
pub use repr::{MpFloat, PackedMp, Unnormalized};
