//! Multiplicative bits.
//!
//! Every Boolean value in this crate lives in {−1, +1}. XOR of packed bits
//! corresponds to multiplication of signs, with a set bit meaning −1.

use std::fmt;
use std::ops::{Mul, MulAssign, Neg};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i8(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// Packed-bit view: `true` for −1.
    #[inline]
    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    #[inline]
    pub fn from_minus(minus: bool) -> Sign {
        if minus {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// Product of a sequence of signs; the empty product is +1.
    pub fn product<I: IntoIterator<Item = Sign>>(iter: I) -> Sign {
        iter.into_iter().fold(Sign::Plus, |acc, s| acc * s)
    }
}

impl Mul for Sign {
    type Output = Sign;

    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_minus(self.is_minus() ^ rhs.is_minus())
    }
}

impl MulAssign for Sign {
    #[inline]
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl Neg for Sign {
    type Output = Sign;

    #[inline]
    fn neg(self) -> Sign {
        Sign::from_minus(!self.is_minus())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i8(self.to_i8())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = i8::deserialize(d)?;
        Sign::from_i8(v).ok_or_else(|| serde::de::Error::custom(format!("expected ±1, got {v}")))
    }
}

/// Packs signs MSB-first into bytes, a set bit meaning −1. Trailing bits of
/// the last byte are zero.
pub fn pack(signs: &[Sign]) -> Vec<u8> {
    let mut out = vec![0u8; signs.len().div_ceil(8)];
    for (i, s) in signs.iter().enumerate() {
        if s.is_minus() {
            out[i / 8] |= 0x80 >> (i % 8);
        }
    }
    out
}

/// Inverse of [`pack`]; `None` when `bytes` has the wrong length or nonzero
/// padding.
pub fn unpack(bytes: &[u8], len: usize) -> Option<Vec<Sign>> {
    if bytes.len() != len.div_ceil(8) {
        return None;
    }
    let pad = bytes.len() * 8 - len;
    if pad > 0 && bytes[bytes.len() - 1] & ((1u8 << pad) - 1) != 0 {
        return None;
    }
    Some(
        (0..len)
            .map(|i| Sign::from_minus(bytes[i / 8] & (0x80 >> (i % 8)) != 0))
            .collect(),
    )
}
