//! Packed binary sequences.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A finite string over F2, stored 64 bits per word, bit `i` at
/// position `i % 64` of word `i / 64`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitSequence {
    words: Vec<u64>,
    len: usize,
}

impl BitSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bits: usize) -> Self {
        Self {
            words: Vec::with_capacity(bits.div_ceil(WORD)),
            len: 0,
        }
    }

    /// All-zero sequence of length `len`.
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Bit at index `i`. Panics if `i >= len`.
    #[inline]
    pub fn bit(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn get(&self, i: usize) -> Option<bool> {
        (i < self.len).then(|| self.bit(i))
    }

    #[inline]
    pub fn push(&mut self, b: bool) {
        if self.len.is_multiple_of(WORD) {
            self.words.push(0);
        }
        if b {
            self.words[self.len / WORD] |= 1 << (self.len % WORD);
        }
        self.len += 1;
    }

    /// The first `n` bits. Panics if `n > len`.
    pub fn prefix(&self, n: usize) -> BitSequence {
        assert!(n <= self.len);
        let mut words = self.words[..n.div_ceil(WORD)].to_vec();
        if !n.is_multiple_of(WORD) {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << (n % WORD)) - 1;
            }
        }
        BitSequence { words, len: n }
    }

    /// Packed storage; bits past `len` are zero.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.bit(i))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Bits unpacked one per byte, as 0 or 1.
    pub fn to_bytes01(&self) -> Vec<u8> {
        self.iter().map(u8::from).collect()
    }

    pub fn to_ascii01(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }

    /// Hex digits, 4 bits per digit, most significant bit first. A trailing
    /// partial nibble is padded with zeros.
    pub fn to_hex(&self) -> String {
        let mut out = String::with_capacity(self.len.div_ceil(4));
        for chunk in (0..self.len).step_by(4) {
            let mut nibble = 0u32;
            for off in 0..4 {
                nibble <<= 1;
                if chunk + off < self.len && self.bit(chunk + off) {
                    nibble |= 1;
                }
            }
            out.push(char::from_digit(nibble, 16).unwrap());
        }
        out
    }

    /// Parses a string of '0'/'1' characters, skipping ASCII whitespace.
    pub fn parse_ascii01(text: &str) -> Result<Self> {
        let mut seq = BitSequence::with_capacity(text.len());
        for (offset, ch) in text.char_indices() {
            match ch {
                '0' => seq.push(false),
                '1' => seq.push(true),
                c if c.is_ascii_whitespace() => {}
                found => return Err(Error::Parse { offset, found }),
            }
        }
        if seq.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(seq)
    }

    /// Parses hex digits (either case), each expanding to 4 bits MSB-first,
    /// skipping ASCII whitespace.
    pub fn parse_hex(text: &str) -> Result<Self> {
        let mut seq = BitSequence::with_capacity(4 * text.len());
        for (offset, ch) in text.char_indices() {
            if ch.is_ascii_whitespace() {
                continue;
            }
            let nibble = ch.to_digit(16).ok_or(Error::Parse { offset, found: ch })?;
            for shift in (0..4).rev() {
                seq.push((nibble >> shift) & 1 == 1);
            }
        }
        if seq.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(seq)
    }
}

impl FromIterator<bool> for BitSequence {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        let iter = iter.into_iter();
        let mut seq = BitSequence::with_capacity(iter.size_hint().0);
        for b in iter {
            seq.push(b);
        }
        seq
    }
}

impl FromStr for BitSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_ascii01(s)
    }
}

impl fmt::Display for BitSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii01())
    }
}

impl fmt::Debug for BitSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len <= 128 {
            write!(f, "BitSequence({})", self.to_ascii01())
        } else {
            write!(f, "BitSequence(len={})", self.len)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ascii_parse_skips_whitespace() {
        let s = BitSequence::parse_ascii01("01 1\n0").unwrap();
        assert_eq!(s.to_ascii01(), "0110");
    }

    #[test]
    fn ascii_parse_reports_offset() {
        match BitSequence::parse_ascii01("01x1") {
            Err(Error::Parse { offset, found }) => {
                assert_eq!(offset, 2);
                assert_eq!(found, 'x');
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn hex_expands_msb_first() {
        assert_eq!(
            BitSequence::parse_hex("69").unwrap().to_ascii01(),
            "01101001"
        );
        assert_eq!(
            BitSequence::parse_hex("aF").unwrap().to_ascii01(),
            "10101111"
        );
    }

    #[test]
    fn empty_inputs_rejected() {
        assert!(matches!(
            BitSequence::parse_ascii01(" \n"),
            Err(Error::EmptyInput)
        ));
        assert!(matches!(BitSequence::parse_hex(""), Err(Error::EmptyInput)));
    }

    #[test]
    fn prefix_clears_tail_bits() {
        let s: BitSequence = std::iter::repeat_n(true, 100).collect();
        let p = s.prefix(70);
        assert_eq!(p.len(), 70);
        assert_eq!(p.count_ones(), 70);
        assert_eq!(p, std::iter::repeat_n(true, 70).collect());
    }

    proptest! {
        #[test]
        fn text_formats_round_trip(bits in proptest::collection::vec(any::<bool>(), 1..300)) {
            let seq: BitSequence = bits.iter().copied().collect();
            prop_assert_eq!(seq.len(), bits.len());
            prop_assert_eq!(BitSequence::parse_ascii01(&seq.to_ascii01()).unwrap(), seq.clone());
            if bits.len() % 4 == 0 {
                prop_assert_eq!(BitSequence::parse_hex(&seq.to_hex()).unwrap(), seq);
            }
        }
    }
}
