//! N-th maximum order complexity.
//!
//! `M(S, N)` is the least `M` such that each length-`M` window among the
//! first `N` terms determines its successor. A feedback function on `M`
//! inputs exists exactly when no window occurs twice with different
//! successors, so `M = t + 1` where `t` is the longest factor that occurs
//! with both successors. Prefixes whose first `N - 1` terms are constant
//! follow the usual convention: `0` if the last term repeats the constant,
//! `N - 1` otherwise.

use std::collections::HashMap;

use crate::automaton::SuffixAutomaton;
use crate::bits::BitSequence;
use crate::error::{check_prefix, Result};
use crate::profile::ComplexityProfile;

/// Two occurrences of the same factor with different successors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub first: usize,
    pub second: usize,
    /// Length of the shared factor.
    pub length: usize,
}

impl Witness {
    /// Replays the witness on `seq`: equal windows, differing successors.
    pub fn holds_on(&self, seq: &BitSequence) -> bool {
        let Witness {
            first,
            second,
            length,
        } = *self;
        first < second
            && second + length < seq.len()
            && (0..length).all(|i| seq.bit(first + i) == seq.bit(second + i))
            && seq.bit(first + length) != seq.bit(second + length)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MocResult {
    pub value: usize,
    /// Present iff `value >= 1`, with `value == witness.length + 1`.
    pub witness: Option<Witness>,
}

impl MocResult {
    fn from_witness(witness: Option<Witness>) -> Self {
        MocResult {
            value: witness.map_or(0, |w| w.length + 1),
            witness,
        }
    }
}

/// Maximum order complexity by direct window comparison, trying
/// `M = 1, 2, ...` until every length-`M` window has a unique successor.
/// Quadratic or worse; intended as a reference.
pub fn moc_bruteforce(seq: &BitSequence, n: usize) -> Result<MocResult> {
    check_prefix(n, seq.len())?;
    let s = seq.prefix(n).to_bytes01();
    if s.iter().all(|&b| b == s[0]) {
        return Ok(MocResult {
            value: 0,
            witness: None,
        });
    }
    // with M = n - 1 there is a single window, so the loop always returns
    for m in 1..n {
        if window_conflict(&s, m).is_none() {
            let witness = window_conflict(&s, m - 1);
            debug_assert!(witness.is_some());
            return Ok(MocResult { value: m, witness });
        }
    }
    unreachable!("a single window cannot conflict")
}

/// Smallest `(j, n)` such that the length-`t` windows at `j` and `n` match
/// and their successors differ.
fn window_conflict(s: &[u8], t: usize) -> Option<Witness> {
    // window -> (first position, its successor, first position with the other successor)
    let mut seen: HashMap<&[u8], (usize, u8, Option<usize>)> = HashMap::new();
    for i in 0..s.len() - t {
        let entry = seen.entry(&s[i..i + t]).or_insert((i, s[i + t], None));
        if entry.2.is_none() && entry.1 != s[i + t] {
            entry.2 = Some(i);
        }
    }
    seen.values()
        .filter_map(|&(first, _, other)| other.map(|second| (first, second)))
        .min()
        .map(|(first, second)| Witness {
            first,
            second,
            length: t,
        })
}

/// Maximum order complexity from the suffix automaton of the prefix:
/// `t + 1` for the deepest state with two outgoing transitions.
pub fn moc_automaton(seq: &BitSequence, n: usize) -> Result<MocResult> {
    check_prefix(n, seq.len())?;
    let mut sam = SuffixAutomaton::with_capacity(n);
    Extend::extend(&mut sam, seq.iter().take(n));
    let witness = sam.branch_witness().map(|(first, second, length)| Witness {
        first,
        second,
        length,
    });
    Ok(MocResult::from_witness(witness))
}

/// `M(S, N)` for every `N = 1..=nmax`, from a single online automaton build.
pub fn moc_profile(seq: &BitSequence, nmax: usize) -> Result<ComplexityProfile> {
    check_prefix(nmax, seq.len())?;
    let mut sam = SuffixAutomaton::with_capacity(nmax);
    let values = seq
        .iter()
        .take(nmax)
        .map(|b| {
            sam.extend(b);
            sam.deepest_branch().map_or(0, |t| t + 1)
        })
        .collect();
    Ok(ComplexityProfile::from_values(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqgen::{generate, SequenceSpec};
    use crate::Error;
    use proptest::prelude::*;

    fn bits(s: &str) -> BitSequence {
        s.parse().unwrap()
    }

    fn both(seq: &BitSequence, n: usize) -> MocResult {
        let a = moc_automaton(seq, n).unwrap();
        let b = moc_bruteforce(seq, n).unwrap();
        assert_eq!(a, b, "automaton vs brute force on {seq:?}[..{n}]");
        a
    }

    #[test]
    fn degenerate_prefixes() {
        assert_eq!(both(&bits("0001"), 4).value, 3);
        assert_eq!(both(&bits("0000"), 4).value, 0);
        assert_eq!(both(&bits("1110"), 4).value, 3);
        assert_eq!(both(&bits("0"), 1).value, 0);
        assert_eq!(both(&bits("1"), 1).value, 0);
        assert_eq!(both(&bits("01"), 2).value, 1);
        assert_eq!(
            both(&BitSequence::zeros(50), 50),
            MocResult {
                value: 0,
                witness: None
            }
        );
        let w = both(&bits("000001"), 6).witness.unwrap();
        assert_eq!(
            w,
            Witness {
                first: 0,
                second: 1,
                length: 4
            }
        );
    }

    #[test]
    fn thue_morse_small_values() {
        let tm = generate(&SequenceSpec::ThueMorse, 64).unwrap();
        let r = both(&tm, 4);
        assert_eq!(r.value, 2);
        assert_eq!(
            r.witness,
            Some(Witness {
                first: 1,
                second: 2,
                length: 1
            })
        );
        assert_eq!(both(&tm, 11).value, 5);
        assert_eq!(both(&tm, 6).value, 3);
    }

    #[test]
    fn rudin_shapiro_small_values() {
        let rs = generate(&SequenceSpec::rudin_shapiro(), 64).unwrap();
        assert_eq!(both(&rs, 9).value, 3);
        assert_eq!(both(&rs, 24).value, 6);
    }

    #[test]
    fn profile_examples() {
        let tm = generate(&SequenceSpec::ThueMorse, 8).unwrap();
        let p = moc_profile(&tm, 3).unwrap();
        assert_eq!(
            p.entries().collect::<Vec<_>>(),
            vec![(1, 0), (2, 1), (3, 1)]
        );
        let z = moc_profile(&BitSequence::zeros(5), 5).unwrap();
        assert_eq!(z.values(), &[0; 5]);
        let rs = generate(&SequenceSpec::rudin_shapiro(), 25).unwrap();
        let p = moc_profile(&rs, 25).unwrap();
        assert_eq!(p.value(24), Some(6));
        assert_eq!(p.last(), Some((25, 9)));
    }

    #[test]
    fn rejects_bad_lengths() {
        let s = bits("0101");
        assert!(matches!(moc_automaton(&s, 0), Err(Error::EmptyPrefix)));
        assert!(matches!(moc_bruteforce(&s, 0), Err(Error::EmptyPrefix)));
        assert!(matches!(moc_profile(&s, 0), Err(Error::EmptyPrefix)));
        assert!(matches!(
            moc_automaton(&s, 5),
            Err(Error::PrefixTooLong { .. })
        ));
    }

    #[test]
    fn incremental_profile_matches_fresh_builds() {
        for spec in [
            SequenceSpec::ThueMorse,
            SequenceSpec::Pattern(2),
            SequenceSpec::Pattern(3),
        ] {
            let seq = generate(&spec, 300).unwrap();
            let p = moc_profile(&seq, 300).unwrap();
            for n in 1..=300 {
                assert_eq!(p.value(n).unwrap(), moc_automaton(&seq, n).unwrap().value);
            }
        }
    }

    proptest! {
        #[test]
        fn automaton_matches_bruteforce(v in proptest::collection::vec(any::<bool>(), 1..120)) {
            let seq: BitSequence = v.into_iter().collect();
            let n = seq.len();
            let a = moc_automaton(&seq, n).unwrap();
            prop_assert_eq!(a, moc_bruteforce(&seq, n).unwrap());
            if let Some(w) = a.witness {
                prop_assert!(w.holds_on(&seq));
                prop_assert_eq!(a.value, w.length + 1);
            } else {
                prop_assert_eq!(a.value, 0);
            }
        }

        #[test]
        fn profile_is_monotone(v in proptest::collection::vec(any::<bool>(), 1..200)) {
            let seq: BitSequence = v.into_iter().collect();
            let p = moc_profile(&seq, seq.len()).unwrap();
            prop_assert!(p.is_nondecreasing());
            prop_assert_eq!(p.last().unwrap().1, moc_automaton(&seq, seq.len()).unwrap().value);
        }
    }
}
