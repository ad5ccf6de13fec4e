//! Conversion between multiple-precision numbers and text, native numbers and
//! binary records.
//!
//! Text is read in radix `in_base` and written in radix `out_base` (both 2 to 16,
//! taken from the context). Formatting rounds to nearest under the Truncate and
//! NearestEven rules and in the direction of the rule under Down and Up, so a
//! formatted bound read back exactly still brackets the true value.

mod binary;
mod digits;
mod format;
mod native;
mod parse;

pub use binary::{debug_dump, deserialize, serialize, FORMAT_VERSION, HEADER_LEN};
pub use digits::{char_digit, digit_char, digits_for, radix_exponent_bound};
pub use format::{format_fixed, format_sci, significant_places, split_native, split_sci};
pub use native::{from_f64, from_small_int, to_f64, to_small_int};
pub use parse::{parse, parse_record};
