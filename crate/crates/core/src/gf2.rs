//! Word-level helpers for packed F2 vectors (bit `i` at word `i / 64`).

/// `dst ^= src * x^shift`, dropping bits past the end of `dst`.
pub(crate) fn xor_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let (ws, bs) = (shift / 64, shift % 64);
    for i in (ws..dst.len()).rev() {
        let j = i - ws;
        let mut v = src.get(j).copied().unwrap_or(0) << bs;
        if bs != 0 && j > 0 {
            v |= src.get(j - 1).copied().unwrap_or(0) >> (64 - bs);
        }
        dst[i] ^= v;
    }
}

/// Clears bits at positions `>= len`.
pub(crate) fn truncate(words: &mut [u64], len: usize) {
    let full = len / 64;
    if full < words.len() {
        let rem = len % 64;
        words[full] &= if rem == 0 { 0 } else { (1u64 << rem) - 1 };
        for w in &mut words[full + 1..] {
            *w = 0;
        }
    }
}

/// Index of the lowest set bit at or after word `from_word`.
pub(crate) fn lowest_set_bit(words: &[u64], from_word: usize) -> Option<usize> {
    words[from_word..].iter().position(|&w| w != 0).map(|off| {
        let w = from_word + off;
        64 * w + words[w].trailing_zeros() as usize
    })
}
