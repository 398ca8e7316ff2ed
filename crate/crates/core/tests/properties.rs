use proptest::prelude::*;
use seqcomplexity::{
    berlekamp_massey, eval_bivariate, expansion_complexity, generate, lc_profile, moc_automaton,
    moc_profile, pattern_by_digit_count, series_from, BitSequence, ExpansionComplexity,
    SequenceSpec,
};

const BIG: usize = 1 << 16;

#[test]
fn recurrence_matches_digit_count() {
    for k in 1..=8 {
        let rec = generate(&SequenceSpec::Pattern(k), BIG).unwrap();
        let digits = pattern_by_digit_count(k, BIG).unwrap();
        assert_eq!(rec, digits, "k = {k}");
    }
}

#[test]
fn pattern_one_is_thue_morse() {
    assert_eq!(
        generate(&SequenceSpec::Pattern(1), BIG).unwrap(),
        generate(&SequenceSpec::ThueMorse, BIG).unwrap()
    );
}

#[test]
fn thue_morse_is_digit_sum_parity() {
    let tm = generate(&SequenceSpec::ThueMorse, BIG).unwrap();
    for i in 0..BIG {
        assert_eq!(tm.bit(i), i.count_ones() % 2 == 1);
    }
}

#[test]
fn along_squares_of_large_index() {
    // index (2^20 - 1)^2 is far beyond any materialized prefix
    let n = 1 << 20;
    let sq = generate(&SequenceSpec::along_squares(SequenceSpec::ThueMorse), n).unwrap();
    for i in [0usize, 1, 2, 3, 1000, 65_537, n - 1] {
        let sq_index = (i as u64) * (i as u64);
        assert_eq!(sq.bit(i), sq_index.count_ones() % 2 == 1, "i = {i}");
    }
}

#[test]
fn squaring_route_agrees_with_multiplication_on_witnesses() {
    // G^2 = G(x^2) in characteristic 2
    for k in 1..=5 {
        let seq = generate(&SequenceSpec::Pattern(k), 4096).unwrap();
        let g = series_from(&seq, 4096).unwrap();
        assert_eq!(g.mul(&g), g.square(), "k = {k}");
    }
}

fn bitstrings(max: usize) -> impl Strategy<Value = BitSequence> {
    proptest::collection::vec(any::<bool>(), 1..max).prop_map(|v| v.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn moc_never_exceeds_lc(seq in bitstrings(300)) {
        let m = moc_profile(&seq, seq.len()).unwrap();
        let l = lc_profile(&seq, seq.len()).unwrap();
        for (mv, lv) in m.values().iter().zip(l.values()) {
            prop_assert!(mv <= lv);
        }
    }

    #[test]
    fn ec_never_exceeds_lc_plus_one(seq in bitstrings(120)) {
        let n = seq.len();
        let l = berlekamp_massey(&seq, n).unwrap().length;
        let e = expansion_complexity(&seq, n, l + 1).unwrap();
        prop_assert!(e.value().is_some(), "E > L + 1 = {}", l + 1);
        if let ExpansionComplexity::Found { annihilator, degree } = e {
            let g = series_from(&seq, n).unwrap();
            prop_assert!(eval_bivariate(&annihilator, &g).is_zero());
            prop_assert_eq!(annihilator.total_degree(), Some(degree as u32));
        }
    }

    #[test]
    fn witness_replays(seq in bitstrings(400)) {
        let r = moc_automaton(&seq, seq.len()).unwrap();
        match r.witness {
            Some(w) => {
                prop_assert!(w.holds_on(&seq));
                prop_assert_eq!(r.value, w.length + 1);
            }
            None => prop_assert_eq!(r.value, 0),
        }
    }

    #[test]
    fn hex_and_ascii_agree(seq in bitstrings(200)) {
        let hex = BitSequence::parse_hex(&seq.to_hex()).unwrap();
        prop_assert_eq!(hex.prefix(seq.len()), seq);
    }
}
