//! Binary automatic sequences and three measures of their predictability:
//! the N-th linear complexity (Berlekamp-Massey), the N-th maximum order
//! complexity (suffix automaton, with a brute-force reference) and the N-th
//! expansion complexity (incremental elimination over F2).

pub mod automaton;
pub mod bits;
pub mod error;
pub mod expansion;
pub mod formulas;
mod gf2;
pub mod linear;
pub mod moc;
pub mod profile;
pub mod seqgen;

pub use bits::BitSequence;
pub use error::{Error, Result};
pub use expansion::{
    default_degree_cap, eval_bivariate, expansion_complexity, series_from, witness_pattern,
    witness_tm, BivariatePolyF2, ExpansionComplexity, PowerSeriesF2,
};
pub use formulas::{
    pattern_moc_formula, pattern_shift_check, tm_moc_formula, tm_shift_check, MocFormulaResult,
};
pub use linear::{berlekamp_massey, lc_profile, LfsrFit};
pub use moc::{moc_automaton, moc_bruteforce, moc_profile, MocResult, Witness};
pub use profile::ComplexityProfile;
pub use seqgen::{generate, ingest, pattern_by_digit_count, BitFormat, SequenceSpec};
