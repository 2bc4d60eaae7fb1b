//! Bit strings with explicit length and MSB-first indexing.
//!
//! Index 0 is the leftmost (most significant) bit, so for strings of equal
//! length the lexicographic order coincides with the numeric order of the
//! value read as an unsigned integer.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A binary string of arbitrary length, packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitString {
    len: usize,
    words: Vec<u64>,
}

impl BitString {
    /// The empty string λ.
    pub fn empty() -> Self {
        BitString::default()
    }

    /// All-zero string of the given length.
    pub fn zeros(len: usize) -> Self {
        BitString {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    /// Build from the low `len` bits of `value`, MSB first.
    /// `from_u64(5, 4)` is the string `0101`.
    pub fn from_u64(value: u64, len: usize) -> Self {
        assert!(len <= 64, "from_u64 supports at most 64 bits");
        if len < 64 {
            assert!(value < (1u64 << len), "value does not fit in {len} bits");
        }
        let mut s = BitString::zeros(len);
        for i in 0..len {
            s.set(i, (value >> (len - 1 - i)) & 1 == 1);
        }
        s
    }

    /// Read the string as an unsigned integer (index 0 most significant).
    pub fn to_u64(&self) -> u64 {
        assert!(self.len <= 64, "to_u64 requires length <= 64");
        let mut v = 0u64;
        for i in 0..self.len {
            v = (v << 1) | self.get(i) as u64;
        }
        v
    }

    /// Shortest binary encoding of `value` with no leading zeros; bin(0) = λ.
    pub fn minimal_binary(value: u64) -> Self {
        if value == 0 {
            return BitString::empty();
        }
        let len = 64 - value.leading_zeros() as usize;
        BitString::from_u64(value, len)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len {})", self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.len, "bit index {i} out of range (len {})", self.len);
        let (w, b) = (i / 64, i % 64);
        if bit {
            self.words[w] |= 1u64 << b;
        } else {
            self.words[w] &= !(1u64 << b);
        }
    }

    pub fn push(&mut self, bit: bool) {
        if self.len % 64 == 0 {
            self.words.push(0);
        }
        self.len += 1;
        let i = self.len - 1;
        self.set(i, bit);
    }

    /// Append all bits of `other`.
    pub fn extend_from(&mut self, other: &BitString) {
        for i in 0..other.len {
            self.push(other.get(i));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Bitwise XOR of two equal-length strings.
    pub fn xor(&self, other: &BitString) -> BitString {
        assert_eq!(self.len, other.len, "xor requires equal lengths");
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(other.words.iter()) {
            *w ^= o;
        }
        out
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Uniformly random string of the given length.
    pub fn random(len: usize, rng: &mut impl rand::RngCore) -> Self {
        let mut s = BitString::zeros(len);
        for w in s.words.iter_mut() {
            *w = rng.next_u64();
        }
        s.mask_tail();
        s
    }

    /// Up to 64 bits starting at `start` (reading past the end yields zeros),
    /// packed LSB-at-`start`. Used to slice seed rows out of long strings.
    pub fn window_u64(&self, start: usize, count: usize) -> u64 {
        debug_assert!(count <= 64);
        let mut v = 0u64;
        for j in 0..count {
            let i = start + j;
            if i < self.len && self.get(i) {
                v |= 1u64 << j;
            }
        }
        v
    }

    /// Hex encoding, MSB-first nibbles, zero-padded on the right.
    /// The bit length travels separately.
    pub fn to_hex(&self) -> String {
        let mut out = String::with_capacity(self.len.div_ceil(4));
        for nib in 0..self.len.div_ceil(4) {
            let mut v = 0u8;
            for j in 0..4 {
                let i = nib * 4 + j;
                let bit = if i < self.len { self.get(i) as u8 } else { 0 };
                v = (v << 1) | bit;
            }
            out.push(char::from_digit(v as u32, 16).unwrap());
        }
        out
    }

    /// Inverse of [`to_hex`](Self::to_hex) for a known bit length.
    pub fn from_hex(hex: &str, len: usize) -> Result<Self> {
        if hex.len() != len.div_ceil(4) {
            return Err(Error::Decode(format!(
                "hex payload has {} nibbles, expected {} for {len} bits",
                hex.len(),
                len.div_ceil(4)
            )));
        }
        let mut s = BitString::zeros(len);
        for (nib, c) in hex.chars().enumerate() {
            let v = c
                .to_digit(16)
                .ok_or_else(|| Error::Decode(format!("invalid hex digit {c:?}")))? as u8;
            for j in 0..4 {
                let i = nib * 4 + j;
                if i < len {
                    s.set(i, (v >> (3 - j)) & 1 == 1);
                } else if (v >> (3 - j)) & 1 == 1 {
                    return Err(Error::Decode("nonzero padding bits in hex payload".into()));
                }
            }
        }
        Ok(s)
    }

    fn mask_tail(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = BitString::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => out.set(i, true),
                _ => return Err(Error::Decode(format!("invalid bit character {c:?}"))),
            }
        }
        Ok(out)
    }
}

/// ⌈log2 x⌉ for x ≥ 1, with ⌈log2 1⌉ = 0.
pub fn ceil_log2(x: u64) -> u32 {
    assert!(x >= 1);
    if x == 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn msb_first_indexing() {
        let s = BitString::from_u64(5, 4); // 0101
        assert_eq!(s.to_string(), "0101");
        assert!(!s.get(0));
        assert!(s.get(1));
        assert_eq!(s.to_u64(), 5);
    }

    #[test]
    fn minimal_binary_edges() {
        assert_eq!(BitString::minimal_binary(0).len(), 0);
        assert_eq!(BitString::minimal_binary(1).to_string(), "1");
        assert_eq!(BitString::minimal_binary(6).to_string(), "110");
    }

    #[test]
    fn hex_round_trip_with_padding() {
        let s: BitString = "10110".parse().unwrap();
        let hex = s.to_hex();
        assert_eq!(hex, "b0");
        assert_eq!(BitString::from_hex(&hex, 5).unwrap(), s);
        assert!(BitString::from_hex("b1", 5).is_err()); // nonzero padding
    }

    #[test]
    fn ceil_log2_values() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(1366), 11);
        assert_eq!(ceil_log2(1024), 10);
        assert_eq!(ceil_log2(12), 4);
    }

    proptest! {
        #[test]
        fn string_round_trip(bits in proptest::collection::vec(any::<bool>(), 0..200)) {
            let mut s = BitString::empty();
            for b in &bits {
                s.push(*b);
            }
            let text = s.to_string();
            let back: BitString = text.parse().unwrap();
            prop_assert_eq!(&back, &s);
            let hex = s.to_hex();
            prop_assert_eq!(BitString::from_hex(&hex, s.len()).unwrap(), s);
        }

        #[test]
        fn u64_round_trip(v in any::<u64>(), extra in 0usize..8) {
            let len = (64 - v.leading_zeros() as usize + extra).min(64).max(1);
            let val = if len == 64 { v } else { v & ((1u64 << len) - 1) };
            let s = BitString::from_u64(val, len);
            prop_assert_eq!(s.to_u64(), val);
            prop_assert_eq!(s.len(), len);
        }
    }
}
