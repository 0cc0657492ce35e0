//! Generating sequences `s = (a_1, ..., a_{n-1})`.

use std::fmt;
use std::str::FromStr;

use crate::bits::BitVec;
use crate::error::{Error, Result};

/// The first row of a Steinhaus matrix, without the leading diagonal zero.
///
/// Element `a_k` (1-based) is stored at bit `k - 1`. Text form lists `a_1`
/// first: `"1100"` is `s = (1, 1, 0, 0)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BinarySequence {
    bits: BitVec,
}

impl BinarySequence {
    pub fn zeros(len: usize) -> Self {
        BinarySequence {
            bits: BitVec::zeros(len),
        }
    }

    pub fn from_bits(bits: BitVec) -> Self {
        BinarySequence { bits }
    }

    pub fn from_slice(bits: &[u8]) -> Self {
        BinarySequence {
            bits: BitVec::from_bools(bits.iter().map(|&b| b != 0)),
        }
    }

    /// Sequence whose element `a_k` is bit `k - 1` of `value`.
    pub fn from_u64(value: u64, len: usize) -> Self {
        BinarySequence {
            bits: BitVec::from_u64(value, len),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Size of the matrix this sequence generates.
    pub fn matrix_size(&self) -> usize {
        self.len() + 1
    }

    /// `a_k`, 1-based.
    pub fn get(&self, k: usize) -> bool {
        assert!(k >= 1 && k <= self.len(), "a_{k} out of range");
        self.bits.get(k - 1)
    }

    pub fn bits(&self) -> &BitVec {
        &self.bits
    }

    pub fn into_bits(self) -> BitVec {
        self.bits
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.bits.iter()
    }

    /// Drops the last element.
    pub fn without_last(&self) -> Self {
        assert!(!self.is_empty());
        BinarySequence {
            bits: self.bits.slice(0, self.len() - 1),
        }
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(self.len(), |k| self.bits.get(k))
    }
}

pub(crate) fn is_palindrome(len: usize, at: impl Fn(usize) -> bool) -> bool {
    (0..len / 2).all(|k| at(k) == at(len - 1 - k))
}

impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinarySequence({self})")
    }
}

/// Accepts either a plain `0`/`1` string (`a_1` first) or `0x<hex>:<len>`,
/// where the hex value is read as a `len`-bit number whose most significant
/// bit is `a_1`.
impl FromStr for BinarySequence {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let t = text.trim();
        if let Some(rest) = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
            let (hex, len) = rest
                .split_once(':')
                .ok_or_else(|| err("hex form needs an explicit bit length, e.g. 0xc:4"))?;
            let len: usize = len.parse().map_err(|_| err("bad bit length"))?;
            let mut digits = Vec::with_capacity(hex.len() * 4);
            for c in hex.chars() {
                let d = c.to_digit(16).ok_or_else(|| err("non-hex digit"))?;
                digits.extend((0..4).rev().map(|s| (d >> s) & 1 == 1));
            }
            // Keep the low `len` bits of the number.
            let excess = digits.len().saturating_sub(len);
            if digits[..excess].iter().any(|&b| b) {
                return Err(err("hex value does not fit in the stated length"));
            }
            let mut bits = vec![false; len.saturating_sub(digits.len())];
            bits.extend_from_slice(&digits[excess..]);
            return Ok(BinarySequence {
                bits: BitVec::from_bools(bits),
            });
        }
        let mut bits = Vec::with_capacity(t.len());
        for c in t.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return Err(err("expected only '0' and '1'")),
            }
        }
        Ok(BinarySequence {
            bits: BitVec::from_bools(bits),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_binary_text() {
        let s: BinarySequence = "1100".parse().unwrap();
        assert_eq!(s.len(), 4);
        assert!(s.get(1) && s.get(2) && !s.get(3) && !s.get(4));
        assert_eq!(s.to_string(), "1100");
        assert_eq!("".parse::<BinarySequence>().unwrap().matrix_size(), 1);
        assert!("abc".parse::<BinarySequence>().is_err());
        assert!("10 1".parse::<BinarySequence>().is_err());
    }

    #[test]
    fn parse_hex_text() {
        let s: BinarySequence = "0xc:4".parse().unwrap();
        assert_eq!(s.to_string(), "1100");
        let s: BinarySequence = "0x3:5".parse().unwrap();
        assert_eq!(s.to_string(), "00011");
        let s: BinarySequence = "0x0c:4".parse().unwrap();
        assert_eq!(s.to_string(), "1100");
        assert!("0x1f:4".parse::<BinarySequence>().is_err());
        assert!("0x1f".parse::<BinarySequence>().is_err());
        assert!("0xg:4".parse::<BinarySequence>().is_err());
    }

    #[test]
    fn palindrome_and_truncation() {
        let s = BinarySequence::from_slice(&[0, 1, 1, 1, 0]);
        assert!(s.is_palindrome());
        assert_eq!(s.without_last().to_string(), "0111");
        assert!(!s.without_last().is_palindrome());
    }
}
