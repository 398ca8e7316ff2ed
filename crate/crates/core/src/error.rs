use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("prefix length must be at least 1")]
    EmptyPrefix,

    #[error("prefix length {requested} exceeds sequence length {available}")]
    PrefixTooLong { requested: usize, available: usize },

    #[error("pattern length k must be at least 1 (got {0})")]
    InvalidPatternLength(u32),

    #[error("pattern formula needs k >= 2 (got {0}); use the Thue-Morse formula for k = 1")]
    PatternFormulaNeedsK2(u32),

    #[error("N = {n} is below the closed-form range N >= {min} for k = {k}")]
    BelowClosedFormRange { k: u32, n: u64, min: u64 },

    #[error("index {0} is out of range for this generator")]
    IndexOverflow(u64),

    #[error("invalid character {found:?} at byte offset {offset}")]
    Parse { offset: usize, found: char },

    #[error("input contains no bits")]
    EmptyInput,

    #[error("degree cap must be at least 1")]
    ZeroDegreeCap,

    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Checks `1 <= n <= available`.
pub(crate) fn check_prefix(n: usize, available: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyPrefix);
    }
    if n > available {
        return Err(Error::PrefixTooLong {
            requested: n,
            available,
        });
    }
    Ok(())
}
