//! Tensor element arithmetic.
//!
//! All layer math runs over 256-bit signed integers. Plaintext activations
//! stay far below 64 bits, but masked values carry an additive mask of up to
//! `MAX_LAMBDA` bits, and a masked convolution accumulates
//! `mask * weight * window` terms. Model loading asserts
//! `lambda + weight_bits + log2(window) + 2 <= 256`, so none of the checked
//! operations below can overflow on validated inputs.

use crate::error::{Error, Result};

pub use ethnum::I256;

/// A single tensor element, plain or masked.
pub type Elem = I256;

/// Wire width of an encrypted (client to edge) element in bytes.
pub const ENC_ELEM_BYTES: usize = 24;
/// Wire width of an evaluated (edge to client) element in bytes.
pub const DEC_ELEM_BYTES: usize = 32;

/// Largest supported mask width. An encrypted element is
/// `plaintext_offset + mask < 2^lambda + 2^gamma`, which must fit the
/// unsigned 24-byte wire encoding.
pub const MAX_LAMBDA: u32 = 190;

const I64_MIN: I256 = I256::new(i64::MIN as i128);
const I64_MAX: I256 = I256::new(i64::MAX as i128);

#[inline]
pub fn elem_from_i64(v: i64) -> Elem {
    I256::new(v as i128)
}

#[inline]
pub fn fits_i64(v: &Elem) -> bool {
    *v >= I64_MIN && *v <= I64_MAX
}

/// `acc + x * w`, panicking on (impossible, see module docs) overflow.
///
/// The plain inference path only ever sees values that fit in 64 bits, so
/// the product is computed in native 128-bit arithmetic whenever it can be.
#[inline]
pub fn mul_add(acc: Elem, x: &Elem, w: i64) -> Elem {
    let prod = if fits_i64(x) {
        I256::from(x.as_i64() as i128 * w as i128)
    } else {
        x.checked_mul(I256::new(w as i128))
            .expect("element product exceeded 256 bits")
    };
    acc.checked_add(prod)
        .expect("element accumulation exceeded 256 bits")
}

/// Floor division by a small positive divisor (average pooling).
pub fn div_floor_i64(v: &Elem, divisor: i64) -> Elem {
    assert!(divisor > 0, "pooling divisor must be positive");
    let d = I256::new(divisor as i128);
    let q = v / d;
    let r = v % d;
    if r != I256::ZERO && v.is_negative() {
        q - I256::ONE
    } else {
        q
    }
}

/// Encodes a nonnegative element below `2^192` as 24 little-endian bytes.
pub fn to_enc_bytes(v: &Elem) -> Result<[u8; ENC_ELEM_BYTES]> {
    let full = v.to_le_bytes();
    if v.is_negative() || full[ENC_ELEM_BYTES..].iter().any(|&b| b != 0) {
        return Err(Error::Range(format!(
            "element {v} does not fit the unsigned {ENC_ELEM_BYTES}-byte wire width"
        )));
    }
    let mut out = [0u8; ENC_ELEM_BYTES];
    out.copy_from_slice(&full[..ENC_ELEM_BYTES]);
    Ok(out)
}

pub fn from_enc_bytes(bytes: &[u8; ENC_ELEM_BYTES]) -> Elem {
    let mut full = [0u8; 32];
    full[..ENC_ELEM_BYTES].copy_from_slice(bytes);
    I256::from_le_bytes(full)
}

/// Encodes any element as 32 little-endian two's-complement bytes.
pub fn to_dec_bytes(v: &Elem) -> [u8; DEC_ELEM_BYTES] {
    v.to_le_bytes()
}

pub fn from_dec_bytes(bytes: &[u8; DEC_ELEM_BYTES]) -> Elem {
    I256::from_le_bytes(*bytes)
}
