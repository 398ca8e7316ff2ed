//! Generators for Thue-Morse, pattern sequences and their subsequences along
//! squares, plus ingestion of external bitstrings.
//!
//! The pattern sequence `P_k` has `p_0 = 0` and
//! `p_i = p_{i/2} + [i ≡ -1 (mod 2^k)]`; equivalently `p_i` is the parity of
//! the number of (overlapping) occurrences of `1^k` in the binary expansion
//! of `i`. `P_1` is Thue-Morse and `P_2` is Rudin-Shapiro.

use std::fs;
use std::path::{Path, PathBuf};

use crate::bits::BitSequence;
use crate::error::{check_prefix, Error, Result};

/// Text encodings accepted by [`ingest`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BitFormat {
    /// One `'0'`/`'1'` character per bit, whitespace ignored.
    Ascii01,
    /// One hex digit per 4 bits, most significant bit first.
    Hex,
}

/// Declarative description of a binary sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceSpec {
    ThueMorse,
    /// Parity of occurrences of the all-ones word of the given length.
    Pattern(u32),
    /// `(u_{i^2})_{i >= 0}` for the inner sequence `u`.
    AlongSquares(Box<SequenceSpec>),
    Literal(BitSequence),
    File {
        path: PathBuf,
        format: BitFormat,
    },
}

impl SequenceSpec {
    pub fn rudin_shapiro() -> Self {
        SequenceSpec::Pattern(2)
    }

    pub fn along_squares(inner: SequenceSpec) -> Self {
        SequenceSpec::AlongSquares(Box::new(inner))
    }

    /// `Some(k)` when this is the pattern sequence `P_k` (Thue-Morse gives 1).
    pub fn pattern_length(&self) -> Option<u32> {
        match self {
            SequenceSpec::ThueMorse => Some(1),
            SequenceSpec::Pattern(k) => Some(*k),
            _ => None,
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            SequenceSpec::Pattern(0) => Err(Error::InvalidPatternLength(0)),
            SequenceSpec::AlongSquares(inner) => inner.validate(),
            _ => Ok(()),
        }
    }
}

/// Returns the first `n` terms of the sequence described by `spec`.
pub fn generate(spec: &SequenceSpec, n: usize) -> Result<BitSequence> {
    if n == 0 {
        return Err(Error::EmptyPrefix);
    }
    spec.validate()?;
    match spec {
        SequenceSpec::ThueMorse => Ok(thue_morse(n)),
        SequenceSpec::Pattern(k) => Ok(pattern(*k, n)),
        SequenceSpec::AlongSquares(inner) => {
            let source = TermSource::resolve(inner)?;
            let mut out = BitSequence::with_capacity(n);
            for i in 0..n as u64 {
                let square = i.checked_mul(i).ok_or(Error::IndexOverflow(i))?;
                out.push(source.term(square)?);
            }
            Ok(out)
        }
        SequenceSpec::Literal(bits) => {
            check_prefix(n, bits.len())?;
            Ok(bits.prefix(n))
        }
        SequenceSpec::File { path, format } => {
            let bits = ingest(path, *format)?;
            check_prefix(n, bits.len())?;
            Ok(bits.prefix(n))
        }
    }
}

fn thue_morse(n: usize) -> BitSequence {
    let mut seq = BitSequence::with_capacity(n);
    seq.push(false);
    for i in 1..n {
        let half = seq.bit(i / 2);
        seq.push(if i % 2 == 0 { half } else { !half });
    }
    seq
}

fn all_ones(k: u32) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

fn pattern(k: u32, n: usize) -> BitSequence {
    let mask = all_ones(k);
    let mut seq = BitSequence::with_capacity(n);
    seq.push(false);
    for i in 1..n {
        let flip = (i as u64) & mask == mask;
        seq.push(seq.bit(i / 2) ^ flip);
    }
    seq
}

/// Bit `i` is the parity of the number of overlapping occurrences of `1^k`
/// in the binary expansion of `i`, counted directly on the digit string.
pub fn pattern_by_digit_count(k: u32, n: usize) -> Result<BitSequence> {
    if k == 0 {
        return Err(Error::InvalidPatternLength(k));
    }
    if n == 0 {
        return Err(Error::EmptyPrefix);
    }
    let k = k as usize;
    Ok((0..n)
        .map(|i| {
            let digits = format!("{i:b}").into_bytes();
            let occurrences = if digits.len() < k {
                0
            } else {
                digits
                    .windows(k)
                    .filter(|w| w.iter().all(|&d| d == b'1'))
                    .count()
            };
            occurrences % 2 == 1
        })
        .collect())
}

/// Reads a bitstring file.
pub fn ingest(path: impl AsRef<Path>, format: BitFormat) -> Result<BitSequence> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    match format {
        BitFormat::Ascii01 => BitSequence::parse_ascii01(&text),
        BitFormat::Hex => BitSequence::parse_hex(&text),
    }
}

/// Random-access evaluation of a single term, used for subsequences along
/// squares where materializing the inner prefix up to `(n-1)^2` is too big.
enum TermSource {
    Pattern { mask: u64 },
    Squares(Box<TermSource>),
    Bits(BitSequence),
}

impl TermSource {
    fn resolve(spec: &SequenceSpec) -> Result<Self> {
        Ok(match spec {
            SequenceSpec::ThueMorse => TermSource::Pattern { mask: 1 },
            SequenceSpec::Pattern(k) => TermSource::Pattern { mask: all_ones(*k) },
            SequenceSpec::AlongSquares(inner) => {
                TermSource::Squares(Box::new(TermSource::resolve(inner)?))
            }
            SequenceSpec::Literal(bits) => TermSource::Bits(bits.clone()),
            SequenceSpec::File { path, format } => TermSource::Bits(ingest(path, *format)?),
        })
    }

    fn term(&self, mut index: u64) -> Result<bool> {
        match self {
            // unrolls p_i = p_{i/2} + [i & mask == mask] down to p_0 = 0
            TermSource::Pattern { mask } => {
                let mut bit = false;
                while index > 0 {
                    bit ^= index & mask == *mask;
                    index >>= 1;
                }
                Ok(bit)
            }
            TermSource::Squares(inner) => {
                let square = index
                    .checked_mul(index)
                    .ok_or(Error::IndexOverflow(index))?;
                inner.term(square)
            }
            TermSource::Bits(bits) => {
                let i = usize::try_from(index).map_err(|_| Error::IndexOverflow(index))?;
                bits.get(i).ok_or(Error::PrefixTooLong {
                    requested: i.saturating_add(1),
                    available: bits.len(),
                })
            }
        }
    }
}
