//! N-th linear complexity via Berlekamp-Massey over F2.

use crate::bits::BitSequence;
use crate::error::{check_prefix, Result};
use crate::gf2::xor_shifted;
use crate::profile::ComplexityProfile;

/// A shortest linear recurrence `s_{i+L} = sum_l taps[l] * s_{i+l}` for the
/// fitted prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LfsrFit {
    pub length: usize,
    /// `taps[l]` multiplies `s_{i+l}`, for `l = 0..length`.
    pub taps: Vec<bool>,
}

impl LfsrFit {
    /// Checks the recurrence on every `0 <= i <= n - L - 1`.
    pub fn fits(&self, seq: &BitSequence, n: usize) -> bool {
        let l = self.length;
        if self.taps.len() != l || n > seq.len() {
            return false;
        }
        (0..n.saturating_sub(l)).all(|i| {
            let predicted = self
                .taps
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c)
                .fold(false, |acc, (j, _)| acc ^ seq.bit(i + j));
            predicted == seq.bit(i + l)
        })
    }
}

/// Incremental Berlekamp-Massey state over a fixed prefix.
struct Synthesizer {
    /// The input, reversed: bit `cap - 1 - i` holds `s_i`.
    reversed: Vec<u64>,
    cap: usize,
    /// Connection polynomial, bit `m` is the coefficient of `x^m`.
    conn: Vec<u64>,
    prev: Vec<u64>,
    length: usize,
    shift: usize,
    processed: usize,
}

impl Synthesizer {
    fn new(seq: &BitSequence, n: usize) -> Self {
        let words = (n + 1).div_ceil(64) + 1;
        let mut reversed = vec![0u64; words];
        for (i, b) in seq.iter().take(n).enumerate() {
            if b {
                let pos = n - 1 - i;
                reversed[pos / 64] |= 1 << (pos % 64);
            }
        }
        let mut conn = vec![0u64; words];
        conn[0] = 1;
        Synthesizer {
            reversed,
            cap: n,
            prev: conn.clone(),
            conn,
            length: 0,
            shift: 1,
            processed: 0,
        }
    }

    /// 64 bits of `reversed` starting at bit `offset`.
    #[inline]
    fn reversed_word(&self, offset: usize) -> u64 {
        let (w, r) = (offset / 64, offset % 64);
        let lo = self.reversed.get(w).copied().unwrap_or(0) >> r;
        if r == 0 {
            lo
        } else {
            lo | (self.reversed.get(w + 1).copied().unwrap_or(0) << (64 - r))
        }
    }

    /// `sum_{m=0}^{L} conn_m s_{n-m}` for the next index `n`.
    fn discrepancy(&self) -> bool {
        let n = self.processed;
        // s_{n-m} sits at reversed bit cap - 1 - n + m
        let base = self.cap - 1 - n;
        let mut acc = 0u64;
        for w in 0..=self.length / 64 {
            let mut word = self.conn[w];
            if w == self.length / 64 {
                let keep = self.length % 64 + 1;
                if keep < 64 {
                    word &= (1u64 << keep) - 1;
                }
            }
            acc ^= word & self.reversed_word(base + 64 * w);
        }
        acc.count_ones() % 2 == 1
    }

    fn step(&mut self) -> usize {
        let n = self.processed;
        if !self.discrepancy() {
            self.shift += 1;
        } else if 2 * self.length <= n {
            let saved = self.conn.clone();
            xor_shifted(&mut self.conn, &self.prev, self.shift);
            self.length = n + 1 - self.length;
            self.prev = saved;
            self.shift = 1;
        } else {
            xor_shifted(&mut self.conn, &self.prev, self.shift);
            self.shift += 1;
        }
        self.processed += 1;
        self.length
    }

    fn fit(&self) -> LfsrFit {
        let l = self.length;
        let coeff = |m: usize| (self.conn[m / 64] >> (m % 64)) & 1 == 1;
        LfsrFit {
            length: l,
            taps: (0..l).map(|j| coeff(l - j)).collect(),
        }
    }
}

/// Shortest LFSR generating the first `n` bits. The all-zero prefix gives
/// `L = 0` with no taps.
pub fn berlekamp_massey(seq: &BitSequence, n: usize) -> Result<LfsrFit> {
    check_prefix(n, seq.len())?;
    let mut synth = Synthesizer::new(seq, n);
    for _ in 0..n {
        synth.step();
    }
    Ok(synth.fit())
}

/// `L(S, N)` for every `N = 1..=nmax` in one pass.
pub fn lc_profile(seq: &BitSequence, nmax: usize) -> Result<ComplexityProfile> {
    check_prefix(nmax, seq.len())?;
    let mut synth = Synthesizer::new(seq, nmax);
    let values = (0..nmax).map(|_| synth.step()).collect();
    Ok(ComplexityProfile::from_values(values))
}
