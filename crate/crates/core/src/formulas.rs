//! Closed forms for the maximum order complexity of Thue-Morse and of the
//! pattern sequences `P_k`, the shift identities behind them, and the
//! linear bounds they imply. Index arithmetic is integer only.

use crate::error::{Error, Result};
use crate::seqgen::{generate, SequenceSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MocFormulaResult {
    pub value: u64,
    /// The exponent `ℓ` of the closed form (0 when the small-N table is used).
    pub ell: u32,
    pub in_theorem_range: bool,
}

/// Least `m >= 0` with `base * 2^m >= n`, i.e. `ceil(log2(n / base))`
/// clamped at zero.
fn ceil_log2_ratio(n: u64, base: u64) -> u32 {
    let mut m = 0;
    while (base as u128) << m < n as u128 {
        m += 1;
    }
    m
}

/// The exponent `ℓ` for Thue-Morse: least `ℓ >= 0` with `5 * 2^ℓ >= n`.
pub fn tm_ell(n: u64) -> u32 {
    ceil_log2_ratio(n, 5)
}

/// The exponent `ℓ` for `P_k`: `(least m with (2^k - 1) 2^m >= n) - 1`.
/// `None` when that least `m` is zero.
pub fn pattern_ell(k: u32, n: u64) -> Option<u32> {
    ceil_log2_ratio(n, (1u64 << k) - 1).checked_sub(1)
}

/// `M(T, n)`: 0 for `n = 1`, 1 for `n = 2, 3`, and `2^ℓ + 1` from `n = 4` on.
pub fn tm_moc_formula(n: u64) -> Result<MocFormulaResult> {
    match n {
        0 => Err(Error::EmptyPrefix),
        1 => Ok(MocFormulaResult {
            value: 0,
            ell: 0,
            in_theorem_range: false,
        }),
        2 | 3 => Ok(MocFormulaResult {
            value: 1,
            ell: 0,
            in_theorem_range: false,
        }),
        _ => {
            let ell = tm_ell(n);
            Ok(MocFormulaResult {
                value: (1u64 << ell) + 1,
                ell,
                in_theorem_range: true,
            })
        }
    }
}

/// Smallest `n` covered by the closed form for `P_k`: `2^(k+3) - 7`.
pub fn pattern_threshold(k: u32) -> u64 {
    (1u64 << (k + 3)) - 7
}

/// `M(P_k, n) = (2^(k-1) - 1) 2^ℓ + 1` for `k >= 2` and `n >= 2^(k+3) - 7`.
/// Below that range only the Rudin-Shapiro table (`k = 2`, `n <= 24`) is
/// available.
pub fn pattern_moc_formula(k: u32, n: u64) -> Result<MocFormulaResult> {
    if k < 2 {
        return Err(Error::PatternFormulaNeedsK2(k));
    }
    if k > 40 {
        return Err(Error::IndexOverflow(k as u64));
    }
    if n == 0 {
        return Err(Error::EmptyPrefix);
    }
    let min = pattern_threshold(k);
    if n >= min {
        // n >= 8 (2^k - 1) + 1 forces ℓ >= 3
        let ell = pattern_ell(k, n).expect("theorem range implies ell >= 3");
        let value = (((1u64 << (k - 1)) - 1) as u128) << ell;
        let value = u64::try_from(value + 1).map_err(|_| Error::IndexOverflow(n))?;
        return Ok(MocFormulaResult {
            value,
            ell,
            in_theorem_range: true,
        });
    }
    if k == 2 {
        let value = match n {
            1..=3 => 0,
            4..=9 => 3,
            _ => 6,
        };
        return Ok(MocFormulaResult {
            value,
            ell: 0,
            in_theorem_range: false,
        });
    }
    Err(Error::BelowClosedFormRange { k, n, min })
}

/// `t_i = t_{i + 3·2^(ℓ-1)}` for `0 <= i < 2^ℓ`, and `t_{2^ℓ} != t_{5·2^(ℓ-1)}`.
pub fn tm_shift_check(ell: u32) -> Result<bool> {
    if ell == 0 {
        return Err(Error::EmptyPrefix);
    }
    let half = 1usize << (ell - 1);
    let t = generate(&SequenceSpec::ThueMorse, 5 * half + 1)?;
    let period_holds = (0..2 * half).all(|i| t.bit(i) == t.bit(i + 3 * half));
    Ok(period_holds && t.bit(2 * half) != t.bit(5 * half))
}

/// `p_i = p_{i + 2^(ℓ+k-1)}` for `0 <= i < (2^(k-1) - 1) 2^ℓ`, and
/// `p_{(2^(k-1) - 1) 2^ℓ} != p_{(2^k - 1) 2^ℓ}`.
pub fn pattern_shift_check(k: u32, ell: u32) -> Result<bool> {
    if k < 2 {
        return Err(Error::PatternFormulaNeedsK2(k));
    }
    let span = ((1usize << (k - 1)) - 1) << ell;
    let shift = 1usize << (ell + k - 1);
    let far = ((1usize << k) - 1) << ell;
    let p = generate(&SequenceSpec::Pattern(k), far + 1)?;
    let period_holds = (0..span).all(|i| p.bit(i) == p.bit(i + shift));
    Ok(period_holds && p.bit(span) != p.bit(far))
}

/// `N/5 + 1 <= M <= 2(N-1)/5 + 1`, compared exactly.
pub fn tm_moc_bounds_hold(n: u64, m: u64) -> bool {
    let (n, m) = (n as u128, m as u128);
    n + 5 <= 5 * m && 5 * m <= 2 * (n - 1) + 5
}

/// With `r = (2^(k-1) - 1) / (2^k - 1)`:
/// `N/6 + 1 <= rN/2 + 1 <= M <= r(N-1) + 1 < (N+1)/2`, compared exactly.
pub fn pattern_moc_bounds_hold(k: u32, n: u64, m: u64) -> bool {
    let a = (1u128 << (k - 1)) - 1;
    let b = (1u128 << k) - 1;
    let (n, m) = (n as u128, m as u128);
    let outer_lower = n + 6 <= 6 * m;
    let inner_lower = a * n + 2 * b <= 2 * b * m;
    let inner_upper = b * m <= a * (n - 1) + b;
    let outer_upper = 2 * m < n + 1;
    outer_lower && inner_lower && inner_upper && outer_upper
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tm_small_and_derived_values() {
        let v = |n| tm_moc_formula(n).unwrap().value;
        assert_eq!((v(1), v(2), v(3)), (0, 1, 1));
        assert_eq!(v(4), 2);
        assert_eq!(v(5), 2);
        assert_eq!(v(6), 3);
        assert_eq!(v(11), 5);
        assert_eq!(v(20), 5);
        assert_eq!(v(21), 9);
        assert!(!tm_moc_formula(3).unwrap().in_theorem_range);
        assert!(tm_moc_formula(4).unwrap().in_theorem_range);
        assert!(matches!(tm_moc_formula(0), Err(Error::EmptyPrefix)));
    }

    #[test]
    fn pattern_values() {
        let v = |k, n| pattern_moc_formula(k, n).unwrap().value;
        assert_eq!(v(2, 9), 3);
        assert_eq!(v(2, 24), 6);
        assert_eq!(v(2, 25), 9);
        assert_eq!(pattern_moc_formula(2, 25).unwrap().ell, 3);
        assert_eq!(v(3, 57), 25);
        assert!(matches!(
            pattern_moc_formula(1, 30),
            Err(Error::PatternFormulaNeedsK2(1))
        ));
        assert!(matches!(pattern_moc_formula(2, 0), Err(Error::EmptyPrefix)));
        assert!(matches!(
            pattern_moc_formula(3, 56),
            Err(Error::BelowClosedFormRange {
                k: 3,
                n: 56,
                min: 57
            })
        ));
    }

    #[test]
    fn ell_brackets_n_including_boundaries() {
        for n in 6..=5000u64 {
            let ell = tm_ell(n);
            assert!(5 << ell >= n && (5 << ell) / 2 < n, "n = {n}");
        }
        for ell in 1..20 {
            assert_eq!(tm_ell(5 << ell), ell);
            assert_eq!(tm_ell((5 << ell) + 1), ell + 1);
        }
        for k in 2..=6u32 {
            let b = (1u64 << k) - 1;
            for n in pattern_threshold(k)..=5000 {
                let ell = pattern_ell(k, n).unwrap();
                assert!(b << ell < n && n <= b << (ell + 1), "k = {k}, n = {n}");
            }
            for ell in 3..20 {
                assert_eq!(pattern_ell(k, b << (ell + 1)), Some(ell));
                assert_eq!(pattern_ell(k, (b << (ell + 1)) + 1), Some(ell + 1));
            }
        }
    }

    #[test]
    fn shift_identities() {
        assert!(tm_shift_check(1).unwrap());
        assert!(tm_shift_check(5).unwrap());
        assert!(tm_shift_check(12).unwrap());
        assert!(pattern_shift_check(2, 0).unwrap());
        assert!(pattern_shift_check(3, 4).unwrap());
        assert!(pattern_shift_check(4, 6).unwrap());
        assert!(tm_shift_check(0).is_err());
    }

    #[test]
    fn bounds_are_exact_at_the_edges() {
        // N = 5·2^(ℓ-1) + 1 hits the upper bound with equality
        assert!(tm_moc_bounds_hold(11, 5));
        assert!(!tm_moc_bounds_hold(10, 5));
        // N = 5·2^ℓ hits the lower bound with equality
        assert!(tm_moc_bounds_hold(20, 5));
        assert!(!tm_moc_bounds_hold(21, 5));
        assert!(pattern_moc_bounds_hold(2, 25, 9));
        assert!(!pattern_moc_bounds_hold(2, 24, 9));
    }
}
