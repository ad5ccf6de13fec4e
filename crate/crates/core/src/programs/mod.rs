//! The programs behind the `mpkit` command: printing constants, evaluating
//! expressions, checking a theta-function identity and the self-test.

mod constants;
mod eval;
mod jacobi;
mod selftest;

pub use constants::{constant, constant_context, constant_text, ramanujan3, ConstantName};
pub use eval::{evaluate, render, CONSTANTS, FUNCTIONS};
pub use jacobi::{jacobi, jacobi_fn, JacobiReport};
pub use selftest::{eps_apart, selftest, ulps_apart, Check, Level, SelfTestReport, PI_100, RAMANUJAN3_100, RAMANUJAN_90};
