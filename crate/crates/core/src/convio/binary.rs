use std::fmt::Write;

use crate::context::Context;
use crate::error::{MpError, Result};
use crate::repr::{self, MpFloat, PackedMp};

pub const FORMAT_VERSION: u16 = 1;
/// Bytes before the first word: version (u16), word width in bytes (u16), `B` (u64)
/// and `T` (u64), all little-endian.
pub const HEADER_LEN: usize = 20;
const WORD_BYTES: u16 = 8;

/// A self-describing record: the header followed by the packed words as
/// little-endian `i64`. Zero is a single zero word.
pub fn serialize(ctx: &Context, x: &MpFloat) -> Vec<u8> {
    let packed = repr::pack(ctx, x);
    let mut out = Vec::with_capacity(HEADER_LEN + 8 * packed.words().len());
    out.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
    out.extend_from_slice(&WORD_BYTES.to_le_bytes());
    out.extend_from_slice(&ctx.base().to_le_bytes());
    out.extend_from_slice(&(ctx.digits() as u64).to_le_bytes());
    for w in packed.words() {
        out.extend_from_slice(&w.to_le_bytes());
    }
    out
}

fn bad(msg: impl Into<String>) -> MpError {
    MpError::Format(msg.into())
}

/// Read a record written by [`serialize`]. The record's `B` and `T` must match
/// the context.
pub fn deserialize(ctx: &Context, rec: &[u8]) -> Result<MpFloat> {
    if rec.len() < HEADER_LEN {
        return Err(bad("truncated header"));
    }
    let u16_at = |i: usize| u16::from_le_bytes([rec[i], rec[i + 1]]);
    let u64_at = |i: usize| u64::from_le_bytes(rec[i..i + 8].try_into().expect("eight bytes"));
    if u16_at(0) != FORMAT_VERSION {
        return Err(bad(format!("unknown format version {}", u16_at(0))));
    }
    if u16_at(2) != WORD_BYTES {
        return Err(bad(format!("unsupported word width {}", u16_at(2))));
    }
    let (b, t) = (u64_at(4), u64_at(12));
    if b != ctx.base() || t != ctx.digits() as u64 {
        return Err(bad(format!("record has B={b} T={t}, context has B={} T={}", ctx.base(), ctx.digits())));
    }
    let body = &rec[HEADER_LEN..];
    if body.is_empty() || body.len() % 8 != 0 {
        return Err(bad("truncated record"));
    }
    let words: Vec<i64> = body.chunks_exact(8).map(|c| i64::from_le_bytes(c.try_into().expect("eight bytes"))).collect();
    if words.len() == 1 && words[0] != 0 {
        return Err(bad("truncated record"));
    }
    repr::unpack(ctx, &PackedMp::from_words(words))
}

/// `sign=0` for zero, otherwise `sign=+1 exp=E digits=[d1,d2,...]`.
pub fn debug_dump(x: &MpFloat) -> String {
    if x.is_zero() {
        return "sign=0".to_string();
    }
    let mut s = format!("sign={:+} exp={} digits=[", x.sign(), x.exponent());
    for (i, d) in x.digits().iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        write!(s, "{d}").expect("writing to a string");
    }
    s.push(']');
    s
}
