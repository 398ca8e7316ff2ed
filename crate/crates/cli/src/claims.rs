//! Reproducible checks of the closed forms, bounds, annihilators and shift
//! identities, each reported as a [`Verdict`].

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use seqcomplexity::formulas::{pattern_moc_bounds_hold, pattern_threshold, tm_moc_bounds_hold};
use seqcomplexity::{
    eval_bivariate, expansion_complexity, generate, lc_profile, moc_profile, pattern_moc_formula,
    pattern_shift_check, series_from, tm_moc_formula, tm_shift_check, witness_pattern, witness_tm,
    BitSequence, ExpansionComplexity, SequenceSpec,
};

use crate::report::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum Claim {
    Theorem1,
    Theorem2,
    Remark1,
    Remark2,
    Remark3,
    WitnessTm,
    WitnessPattern,
    ShiftTm,
    ShiftPattern,
    Inequalities,
    SquaresProbe,
}

impl Claim {
    pub fn id(self) -> String {
        self.to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default()
    }

    pub fn all() -> &'static [Claim] {
        Claim::value_variants()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    /// Largest prefix length for profile-based claims and annihilator checks.
    pub nmax: usize,
    /// Largest pattern length `k`.
    pub kmax: u32,
    pub tm_ellmax: u32,
    pub pattern_ellmax: u32,
    /// Largest `N` at which expansion complexity is computed.
    pub ec_limit: usize,
    /// Largest `N` for the along-squares probe.
    pub squares_nmax: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            nmax: 5000,
            kmax: 5,
            tm_ellmax: 12,
            pattern_ellmax: 10,
            ec_limit: 4096,
            squares_nmax: 4096,
        }
    }
}

/// Runs the claims on a pool of `workers` threads, preserving input order.
pub fn run_claims(claims: &[Claim], bounds: &Bounds, workers: usize) -> Vec<Verdict> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| claims.par_iter().map(|&c| check(c, bounds)).collect())
}

pub fn check(claim: Claim, b: &Bounds) -> Verdict {
    let outcome = match claim {
        Claim::Theorem1 => theorem1(b),
        Claim::Theorem2 => theorem2(b),
        Claim::Remark1 => remark1(b),
        Claim::Remark2 => remark2(),
        Claim::Remark3 => remark3(b),
        Claim::WitnessTm => witness_tm_claim(b),
        Claim::WitnessPattern => witness_pattern_claim(b),
        Claim::ShiftTm => shift_tm(b),
        Claim::ShiftPattern => shift_pattern(b),
        Claim::Inequalities => inequalities(b),
        Claim::SquaresProbe => squares_probe(b),
    };
    let (passed, detail) = match outcome {
        Ok(Ok(detail)) => (true, detail),
        Ok(Err(detail)) => (false, detail),
        Err(e) => (false, format!("error: {e}")),
    };
    Verdict {
        claim: claim.id(),
        passed,
        exploratory: claim == Claim::SquaresProbe,
        detail,
    }
}

/// `Ok(Ok(detail))` pass, `Ok(Err(detail))` fail, `Err` computation error.
type Outcome = seqcomplexity::Result<Result<String, String>>;

fn pattern_spec(k: u32) -> SequenceSpec {
    if k == 1 {
        SequenceSpec::ThueMorse
    } else {
        SequenceSpec::Pattern(k)
    }
}

/// All `N <= 64`, a stride beyond that, the powers of two, and `limit`.
pub fn probe_points(limit: usize) -> Vec<usize> {
    let mut pts: Vec<usize> = (1..=limit.min(64)).collect();
    pts.extend((64..=limit).step_by(97));
    pts.extend(
        (0..usize::BITS)
            .map(|e| 1usize << e)
            .take_while(|&p| p <= limit),
    );
    pts.push(limit);
    pts.sort_unstable();
    pts.dedup();
    pts
}

fn theorem1(b: &Bounds) -> Outcome {
    if b.nmax < 4 {
        return Ok(Ok("vacuous: nmax < 4".into()));
    }
    let tm = generate(&SequenceSpec::ThueMorse, b.nmax)?;
    let profile = moc_profile(&tm, b.nmax)?;
    for n in 4..=b.nmax {
        let expect = tm_moc_formula(n as u64)?.value as usize;
        let got = profile.value(n).unwrap();
        if got != expect {
            return Ok(Err(format!(
                "N = {n}: computed {got}, closed form {expect}"
            )));
        }
    }
    Ok(Ok(format!("M(T,N) = 2^l + 1 for all 4 <= N <= {}", b.nmax)))
}

fn theorem2(b: &Bounds) -> Outcome {
    let mut checked = Vec::new();
    for k in 2..=b.kmax {
        let lo = pattern_threshold(k) as usize;
        if lo > b.nmax {
            checked.push(format!("k={k}: range starts at {lo}, skipped"));
            continue;
        }
        let seq = generate(&SequenceSpec::Pattern(k), b.nmax)?;
        let profile = moc_profile(&seq, b.nmax)?;
        for n in lo..=b.nmax {
            let expect = pattern_moc_formula(k, n as u64)?.value as usize;
            let got = profile.value(n).unwrap();
            if got != expect {
                return Ok(Err(format!(
                    "k = {k}, N = {n}: computed {got}, closed form {expect}"
                )));
            }
        }
        checked.push(format!("k={k}: {lo}..={}", b.nmax));
    }
    Ok(Ok(checked.join("; ")))
}

fn remark1(b: &Bounds) -> Outcome {
    let nmax = b.nmax.max(3);
    let tm = generate(&SequenceSpec::ThueMorse, nmax)?;
    let profile = moc_profile(&tm, nmax)?;
    let small: Vec<usize> = (1..=3).map(|n| profile.value(n).unwrap()).collect();
    if small != [0, 1, 1] {
        return Ok(Err(format!("M(T,1..3) = {small:?}, expected [0, 1, 1]")));
    }
    for n in 4..=nmax {
        let m = profile.value(n).unwrap() as u64;
        if !tm_moc_bounds_hold(n as u64, m) {
            return Ok(Err(format!(
                "N = {n}: M = {m} violates N/5+1 <= M <= 2(N-1)/5+1"
            )));
        }
    }
    Ok(Ok(format!(
        "small values and sandwich for 4 <= N <= {nmax}"
    )))
}

fn remark2() -> Outcome {
    let rs = generate(&SequenceSpec::rudin_shapiro(), 24)?;
    let profile = moc_profile(&rs, 24)?;
    for n in 1..=24usize {
        let table = match n {
            1..=3 => 0,
            4..=9 => 3,
            _ => 6,
        };
        let formula = pattern_moc_formula(2, n as u64)?.value as usize;
        let computed = profile.value(n).unwrap();
        if formula != table || computed != table {
            return Ok(Err(format!(
                "N = {n}: table {table}, formula path {formula}, computed {computed}"
            )));
        }
    }
    Ok(Ok(
        "M(P_2,N) = 0/3/6 on 1..3/4..9/10..24 by both paths".into()
    ))
}

fn remark3(b: &Bounds) -> Outcome {
    let mut checked = Vec::new();
    for k in 2..=b.kmax {
        let lo = pattern_threshold(k) as usize;
        if lo > b.nmax {
            continue;
        }
        let seq = generate(&SequenceSpec::Pattern(k), b.nmax)?;
        let profile = moc_profile(&seq, b.nmax)?;
        for n in lo..=b.nmax {
            let m = profile.value(n).unwrap() as u64;
            if !pattern_moc_bounds_hold(k, n as u64, m) {
                return Ok(Err(format!(
                    "k = {k}, N = {n}: M = {m} outside the sandwich"
                )));
            }
        }
        checked.push(format!("k={k}"));
    }
    Ok(Ok(format!(
        "sandwich holds for {} up to N = {}",
        checked.join(","),
        b.nmax
    )))
}

/// `h(x, G) ≡ 0 mod x^nmax`, then `E(S, N) <= cap` on the probe points.
fn annihilator_and_cap(
    spec: &SequenceSpec,
    h: &seqcomplexity::BivariatePolyF2,
    cap: usize,
    b: &Bounds,
) -> Outcome {
    let n = b.nmax.max(b.ec_limit);
    let seq = generate(spec, n)?;
    let g = series_from(&seq, b.nmax.max(1))?;
    let residue = eval_bivariate(h, &g);
    if !residue.is_zero() {
        return Ok(Err(format!("h(x,G(x)) != 0 mod x^{}", b.nmax)));
    }
    let mut prev = 0;
    for n in probe_points(b.ec_limit) {
        match expansion_complexity(&seq, n, cap)? {
            ExpansionComplexity::ExceedsCap { .. } => {
                return Ok(Err(format!("E(S,{n}) > {cap}")));
            }
            e => {
                let v = e.value().unwrap();
                if v < prev {
                    return Ok(Err(format!("E(S,N) decreased at N = {n}")));
                }
                prev = v;
            }
        }
    }
    Ok(Ok(format!(
        "annihilator vanishes mod x^{}; E <= {cap} on {} probes up to N = {} (max seen {prev})",
        b.nmax,
        probe_points(b.ec_limit).len(),
        b.ec_limit
    )))
}

fn witness_tm_claim(b: &Bounds) -> Outcome {
    annihilator_and_cap(&SequenceSpec::ThueMorse, &witness_tm(), 5, b)
}

fn witness_pattern_claim(b: &Bounds) -> Outcome {
    let mut parts = Vec::new();
    for k in 1..=b.kmax {
        let h = witness_pattern(k)?;
        match annihilator_and_cap(&pattern_spec(k), &h, (1 << k) + 3, b)? {
            Ok(_) => parts.push(format!("k={k}")),
            Err(msg) => return Ok(Err(format!("k = {k}: {msg}"))),
        }
    }
    Ok(Ok(format!(
        "annihilators vanish mod x^{} and E <= 2^k+3 up to N = {} for {}",
        b.nmax,
        b.ec_limit,
        parts.join(",")
    )))
}

fn shift_tm(b: &Bounds) -> Outcome {
    for ell in 1..=b.tm_ellmax {
        if !tm_shift_check(ell)? {
            return Ok(Err(format!("fails at l = {ell}")));
        }
    }
    Ok(Ok(format!("l = 1..={}", b.tm_ellmax)))
}

fn shift_pattern(b: &Bounds) -> Outcome {
    for k in 2..=b.kmax {
        for ell in 0..=b.pattern_ellmax {
            if !pattern_shift_check(k, ell)? {
                return Ok(Err(format!("fails at k = {k}, l = {ell}")));
            }
        }
    }
    Ok(Ok(format!(
        "k = 2..={}, l = 0..={}",
        b.kmax, b.pattern_ellmax
    )))
}

/// `M <= L` at every N and `E <= L + 1` at the probe points.
fn chain_holds(seq: &BitSequence, label: &str, ec_limit: usize) -> Outcome {
    let n = seq.len();
    let m = moc_profile(seq, n)?;
    let l = lc_profile(seq, n)?;
    if let Some((i, (a, c))) = m
        .values()
        .iter()
        .zip(l.values())
        .enumerate()
        .find(|(_, (a, c))| a > c)
    {
        return Ok(Err(format!("{label}: M = {a} > L = {c} at N = {}", i + 1)));
    }
    for p in probe_points(ec_limit.min(n)) {
        let bound = l.value(p).unwrap() + 1;
        if let ExpansionComplexity::ExceedsCap { .. } = expansion_complexity(seq, p, bound)? {
            return Ok(Err(format!("{label}: E > L + 1 = {bound} at N = {p}")));
        }
    }
    Ok(Ok(String::new()))
}

fn inequalities(b: &Bounds) -> Outcome {
    let mut tested = 0;
    for k in 1..=b.kmax {
        let seq = generate(&pattern_spec(k), b.nmax.max(1))?;
        if let Err(msg) = chain_holds(&seq, &format!("P_{k}"), b.ec_limit.min(1024))? {
            return Ok(Err(msg));
        }
        tested += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..64 {
        let len = rng.gen_range(1..=200);
        let seq: BitSequence = (0..len).map(|_| rng.gen::<bool>()).collect();
        if let Err(msg) = chain_holds(&seq, &format!("random #{trial}"), len)? {
            return Ok(Err(msg));
        }
        tested += 1;
    }
    Ok(Ok(format!("M <= L and E <= L + 1 on {tested} sequences")))
}

fn squares_probe(b: &Bounds) -> Outcome {
    let n = b.squares_nmax.max(2);
    let seq = generate(&SequenceSpec::along_squares(SequenceSpec::ThueMorse), n)?;
    let profile = moc_profile(&seq, n)?;
    // M >= sqrt(N)/2  <=>  4 M^2 >= N; N = 1 is the degenerate M = 0
    let misses: Vec<usize> = (2..=n)
        .filter(|&k| {
            let m = profile.value(k).unwrap();
            4 * m * m < k
        })
        .collect();
    let last = profile.value(n).unwrap();
    let summary = format!("M(t_(i^2), {n}) = {last}; M >= sqrt(N)/2 checked for 2 <= N <= {n}");
    if misses.is_empty() {
        Ok(Ok(summary))
    } else {
        Ok(Err(format!(
            "{summary}; fails at {} values, first N = {}",
            misses.len(),
            misses[0]
        )))
    }
}
