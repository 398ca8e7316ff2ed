//! Truncated power series over F2 and the N-th expansion complexity.
//!
//! For a sequence with generating function `G(x) = sum s_i x^i`, `E(S, N)` is
//! the least total degree of a nonzero `h(x, y)` with
//! `h(x, G(x)) ≡ 0 (mod x^N)`, and `0` for an all-zero prefix. The search
//! adds the columns `x^i G^j mod x^N` in graded order to a reduced column
//! basis and stops at the first column that reduces to zero.

use std::collections::BTreeSet;
use std::fmt;

use crate::bits::BitSequence;
use crate::error::{check_prefix, Error, Result};
use crate::gf2::{lowest_set_bit, truncate, xor_shifted};
use crate::seqgen::SequenceSpec;

/// A power series over F2 modulo `x^N`.
#[derive(Clone, PartialEq, Eq)]
pub struct PowerSeriesF2 {
    words: Vec<u64>,
    precision: usize,
}

impl PowerSeriesF2 {
    pub fn zero(precision: usize) -> Self {
        PowerSeriesF2 {
            words: vec![0; precision.div_ceil(64)],
            precision,
        }
    }

    pub fn one(precision: usize) -> Self {
        Self::monomial(0, precision)
    }

    /// `x^i mod x^N`.
    pub fn monomial(i: usize, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if i < precision {
            s.words[i / 64] |= 1 << (i % 64);
        }
        s
    }

    /// The truncation `N`.
    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn coeff(&self, i: usize) -> bool {
        i < self.precision && (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.precision).filter(|&i| self.coeff(i)).collect()
    }

    pub fn add_assign(&mut self, other: &PowerSeriesF2) {
        debug_assert_eq!(self.precision, other.precision);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// `self * x^i mod x^N`.
    pub fn shifted(&self, i: usize) -> PowerSeriesF2 {
        let mut out = Self::zero(self.precision);
        xor_shifted(&mut out.words, &self.words, i);
        truncate(&mut out.words, self.precision);
        out
    }

    /// Truncated product, by shift-and-add over the set bits of `self`.
    pub fn mul(&self, other: &PowerSeriesF2) -> PowerSeriesF2 {
        debug_assert_eq!(self.precision, other.precision);
        let mut out = Self::zero(self.precision);
        for (w, &word) in self.words.iter().enumerate() {
            let mut rest = word;
            while rest != 0 {
                let i = 64 * w + rest.trailing_zeros() as usize;
                rest &= rest - 1;
                xor_shifted(&mut out.words, &other.words, i);
            }
        }
        truncate(&mut out.words, self.precision);
        out
    }

    /// `self^2 = sum a_i x^{2i}` (Frobenius in characteristic 2).
    pub fn square(&self) -> PowerSeriesF2 {
        let mut out = Self::zero(self.precision);
        for i in (0..self.precision.div_ceil(2)).filter(|&i| self.coeff(i)) {
            let j = 2 * i;
            out.words[j / 64] |= 1 << (j % 64);
        }
        out
    }

    pub fn pow(&self, e: usize) -> PowerSeriesF2 {
        (0..e).fold(Self::one(self.precision), |acc, _| acc.mul(self))
    }
}

impl fmt::Debug for PowerSeriesF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (mod x^{})", self.precision)
    }
}

impl fmt::Display for PowerSeriesF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .support()
            .into_iter()
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// `G(x) = sum_{i<n} s_i x^i`, truncated at `x^n`.
pub fn series_from(seq: &BitSequence, n: usize) -> Result<PowerSeriesF2> {
    check_prefix(n, seq.len())?;
    let mut words = seq.prefix(n).words().to_vec();
    words.resize(n.div_ceil(64), 0);
    Ok(PowerSeriesF2 {
        words,
        precision: n,
    })
}

/// A polynomial in `F2[x, y]` as its set of monomials `x^i y^j`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolyF2 {
    monomials: BTreeSet<(u32, u32)>,
}

impl BivariatePolyF2 {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `x^i y^j`; adding a present monomial cancels it.
    pub fn toggle(&mut self, i: u32, j: u32) {
        if !self.monomials.remove(&(i, j)) {
            self.monomials.insert((i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.monomials.iter().copied()
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.monomials.iter().map(|&(i, j)| i + j).max()
    }

    /// Adds `(x + 1)^e * x^shift * y^j`.
    fn add_binomial_term(&mut self, e: u32, shift: u32, j: u32) {
        // C(e, i) is odd iff the bits of i are a subset of the bits of e
        for i in (0..=e).filter(|i| i & e == *i) {
            self.toggle(i + shift, j);
        }
    }
}

impl FromIterator<(u32, u32)> for BivariatePolyF2 {
    fn from_iter<I: IntoIterator<Item = (u32, u32)>>(iter: I) -> Self {
        let mut p = BivariatePolyF2::new();
        for (i, j) in iter {
            p.toggle(i, j);
        }
        p
    }
}

impl fmt::Display for BivariatePolyF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<(u32, u32)> = self.monomials().collect();
        terms.sort_by_key(|&(i, j)| std::cmp::Reverse((i + j, j, i)));
        let fmt_var = |v: &str, e: u32| match e {
            0 => None,
            1 => Some(v.to_string()),
            _ => Some(format!("{v}^{e}")),
        };
        let rendered: Vec<String> = terms
            .into_iter()
            .map(|(i, j)| {
                let parts: Vec<String> = [fmt_var("x", i), fmt_var("y", j)]
                    .into_iter()
                    .flatten()
                    .collect();
                if parts.is_empty() {
                    "1".to_string()
                } else {
                    parts.join("*")
                }
            })
            .collect();
        f.write_str(&rendered.join(" + "))
    }
}

impl fmt::Debug for BivariatePolyF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivariatePolyF2({self})")
    }
}

/// `(x+1)^3 y^2 + (x+1)^2 y + x`, an annihilator of the Thue-Morse series.
pub fn witness_tm() -> BivariatePolyF2 {
    let mut h = BivariatePolyF2::new();
    h.add_binomial_term(3, 0, 2);
    h.add_binomial_term(2, 0, 1);
    h.toggle(1, 0);
    h
}

/// `(x+1)^(2^k+1) y^2 + (x+1)^(2^k) y + x^(2^k-1)`, an annihilator of the
/// generating function of `P_k`.
pub fn witness_pattern(k: u32) -> Result<BivariatePolyF2> {
    if k == 0 {
        return Err(Error::InvalidPatternLength(k));
    }
    if k > 30 {
        return Err(Error::IndexOverflow(k as u64));
    }
    let q = 1u32 << k;
    let mut h = BivariatePolyF2::new();
    h.add_binomial_term(q + 1, 0, 2);
    h.add_binomial_term(q, 0, 1);
    h.toggle(q - 1, 0);
    Ok(h)
}

/// `h(x, g(x)) mod x^N`.
pub fn eval_bivariate(h: &BivariatePolyF2, g: &PowerSeriesF2) -> PowerSeriesF2 {
    let n = g.precision();
    let max_j = h.monomials().map(|(_, j)| j).max().unwrap_or(0) as usize;
    let mut powers = Vec::with_capacity(max_j + 1);
    powers.push(PowerSeriesF2::one(n));
    for j in 1..=max_j {
        let next = powers[j - 1].mul(g);
        powers.push(next);
    }
    let mut acc = PowerSeriesF2::zero(n);
    for (i, j) in h.monomials() {
        let term = powers[j as usize].shifted(i as usize);
        acc.add_assign(&term);
    }
    acc
}

/// Outcome of [`expansion_complexity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExpansionComplexity {
    /// The prefix is all zero, so `E = 0` by convention.
    ZeroPrefix,
    /// Least degree, with the annihilator found at that degree.
    Found {
        degree: usize,
        annihilator: BivariatePolyF2,
    },
    /// No annihilator of total degree `<= cap`.
    ExceedsCap { cap: usize },
}

impl ExpansionComplexity {
    /// The complexity, or `None` when the cap was exceeded.
    pub fn value(&self) -> Option<usize> {
        match self {
            ExpansionComplexity::ZeroPrefix => Some(0),
            ExpansionComplexity::Found { degree, .. } => Some(*degree),
            ExpansionComplexity::ExceedsCap { .. } => None,
        }
    }
}

/// Degree cap used when none is given: `2^k + 4` for a pattern sequence
/// (its annihilator has degree `2^k + 3`), 32 otherwise.
pub fn default_degree_cap(spec: &SequenceSpec) -> usize {
    match spec.pattern_length() {
        Some(k) if k <= 20 => (1usize << k) + 4,
        _ => 32,
    }
}

/// Column basis kept in echelon form by lowest set bit, each column
/// remembering which monomials it combines.
struct ColumnBasis {
    rows: usize,
    /// `pivot_owner[r]` is the basis column whose lowest set bit is `r`.
    pivot_owner: Vec<Option<usize>>,
    columns: Vec<(Vec<u64>, Vec<u64>)>,
}

impl ColumnBasis {
    fn new(rows: usize) -> Self {
        ColumnBasis {
            rows,
            pivot_owner: vec![None; rows],
            columns: Vec::new(),
        }
    }

    /// Reduces `column` (tagged as monomial number `tag`) against the
    /// basis. Returns the dependency as a set of monomial numbers, or
    /// inserts the reduced column and returns `None`.
    fn insert(&mut self, mut column: Vec<u64>, tag: usize) -> Option<Vec<u64>> {
        let mut combo = vec![0u64; tag / 64 + 1];
        combo[tag / 64] |= 1 << (tag % 64);
        let mut from_word = 0;
        while let Some(pivot) = lowest_set_bit(&column, from_word) {
            debug_assert!(pivot < self.rows);
            match self.pivot_owner[pivot] {
                Some(owner) => {
                    let (bv, bc) = &self.columns[owner];
                    let w0 = pivot / 64;
                    for (a, b) in column[w0..].iter_mut().zip(&bv[w0..]) {
                        *a ^= b;
                    }
                    for (a, b) in combo.iter_mut().zip(bc) {
                        *a ^= b;
                    }
                    from_word = w0;
                }
                None => {
                    self.pivot_owner[pivot] = Some(self.columns.len());
                    self.columns.push((column, combo));
                    return None;
                }
            }
        }
        Some(combo)
    }
}

/// `E(S, N)`, searching total degrees `1..=cap`.
pub fn expansion_complexity(
    seq: &BitSequence,
    n: usize,
    cap: usize,
) -> Result<ExpansionComplexity> {
    check_prefix(n, seq.len())?;
    if cap == 0 {
        return Err(Error::ZeroDegreeCap);
    }
    let g = series_from(seq, n)?;
    if g.is_zero() {
        return Ok(ExpansionComplexity::ZeroPrefix);
    }

    let mut basis = ColumnBasis::new(n);
    let mut monomials: Vec<(u32, u32)> = vec![(0, 0)];
    let one = PowerSeriesF2::one(n);
    let independent = basis.insert(one.words.clone(), 0).is_none();
    debug_assert!(independent);
    let mut powers = vec![one];

    for d in 1..=cap {
        let next = powers[d - 1].mul(&g);
        powers.push(next);
        // graded order: within degree d, ascending power of x
        for i in 0..=d {
            let j = d - i;
            let tag = monomials.len();
            monomials.push((i as u32, j as u32));
            let column = powers[j].shifted(i).words;
            if let Some(combo) = basis.insert(column, tag) {
                let annihilator = (0..monomials.len())
                    .filter(|&t| (combo[t / 64] >> (t % 64)) & 1 == 1)
                    .map(|t| monomials[t])
                    .collect();
                return Ok(ExpansionComplexity::Found {
                    degree: d,
                    annihilator,
                });
            }
        }
    }
    Ok(ExpansionComplexity::ExceedsCap { cap })
}
