use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use seqcomplexity::{
    berlekamp_massey, default_degree_cap, expansion_complexity, generate, lc_profile,
    moc_automaton, moc_profile, BitSequence, ExpansionComplexity, SequenceSpec,
};
use serde_json::json;

use crate::claims::{run_claims, Bounds, Claim};
use crate::input::SeqArgs;
use crate::report::RunReport;
use crate::{default_workers, CliError};

#[derive(Debug, Parser)]
#[command(
    name = "seqcomplexity",
    version,
    about = "Complexity measures of binary automatic sequences"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the first N terms of a sequence.
    Generate(GenerateArgs),
    /// Compute one measure at one prefix length.
    Measure(MeasureArgs),
    /// Emit `N,value` CSV for N = 1..=nmax.
    Profile(ProfileArgs),
    /// Check the closed forms, bounds and annihilators.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Ascii01,
    Hex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Measure {
    /// maximum order complexity
    Moc,
    /// linear complexity
    Lc,
    /// expansion complexity
    Ec,
}

impl Measure {
    fn name(self) -> &'static str {
        match self {
            Measure::Moc => "moc",
            Measure::Lc => "lc",
            Measure::Ec => "ec",
        }
    }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub source: SeqArgs,
    #[arg(short = 'n', value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    #[arg(long, value_enum, default_value = "ascii01")]
    pub out_format: OutFormat,
    /// Write to this file instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    #[command(flatten)]
    pub source: SeqArgs,
    #[arg(long, value_enum)]
    pub measure: Measure,
    #[arg(short = 'n', value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Degree cap for `ec` (default 2^k+4 for pattern sequences, else 32).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub dmax: Option<u64>,
    /// Also print the certificate: conflicting factor pair, taps or annihilator.
    #[arg(long)]
    pub witness: bool,
    /// Print a JSON report.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    #[command(flatten)]
    pub source: SeqArgs,
    #[arg(long, value_enum)]
    pub measure: Measure,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub nmax: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub dmax: Option<u64>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Claims to check (comma separated); all when omitted.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub claims: Vec<Claim>,
    #[arg(long, default_value_t = 5000, value_parser = clap::value_parser!(u64).range(1..))]
    pub nmax: u64,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..=20))]
    pub kmax: u32,
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..=24))]
    pub tm_ellmax: u32,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(0..=20))]
    pub pattern_ellmax: u32,
    #[arg(long, default_value_t = 4096, value_parser = clap::value_parser!(u64).range(1..))]
    pub ec_limit: u64,
    #[arg(long, default_value_t = 4096, value_parser = clap::value_parser!(u64).range(2..))]
    pub squares_nmax: u64,
    /// Worker threads (default from SEQCOMPLEXITY_WORKERS, else all cores).
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

pub fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Generate(a) => cmd_generate(a),
        Command::Measure(a) => cmd_measure(a),
        Command::Profile(a) => cmd_profile(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

fn sink(path: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| {
            CliError::Failure(format!("cannot create {}: {e}", p.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_failed(e: io::Error) -> CliError {
    CliError::Failure(format!("write failed: {e}"))
}

fn to_usize(n: u64) -> Result<usize, CliError> {
    usize::try_from(n).map_err(|_| CliError::Usage(format!("{n} is too large")))
}

fn load(source: &SeqArgs, n: usize) -> Result<(SequenceSpec, BitSequence), CliError> {
    let spec = source.to_spec().map_err(CliError::Usage)?;
    let seq = generate(&spec, n)?;
    Ok((spec, seq))
}

fn cmd_generate(a: GenerateArgs) -> Result<ExitCode, CliError> {
    let (_, seq) = load(&a.source, to_usize(a.n)?)?;
    let text = match a.out_format {
        OutFormat::Ascii01 => seq.to_ascii01(),
        OutFormat::Hex => seq.to_hex(),
    };
    let mut out = sink(&a.output)?;
    writeln!(out, "{text}")
        .and_then(|_| out.flush())
        .map_err(write_failed)?;
    Ok(ExitCode::SUCCESS)
}

fn degree_cap(spec: &SequenceSpec, dmax: Option<u64>) -> Result<usize, CliError> {
    dmax.map_or(Ok(default_degree_cap(spec)), to_usize)
}

fn cmd_measure(a: MeasureArgs) -> Result<ExitCode, CliError> {
    let n = to_usize(a.n)?;
    let (spec, seq) = load(&a.source, n)?;
    let mut record = json!({ "measure": a.measure.name(), "n": n });
    let mut lines = Vec::new();
    match a.measure {
        Measure::Moc => {
            let r = moc_automaton(&seq, n)?;
            record["value"] = json!(r.value);
            lines.push(r.value.to_string());
            if a.witness {
                match r.witness {
                    Some(w) => {
                        record["witness"] =
                            json!({ "first": w.first, "second": w.second, "length": w.length });
                        lines.push(format!(
                            "witness: length-{} factor at {} and {} with different successors",
                            w.length, w.first, w.second
                        ));
                    }
                    None => {
                        record["witness"] = serde_json::Value::Null;
                        lines.push("witness: none (degenerate prefix)".into());
                    }
                }
            }
        }
        Measure::Lc => {
            let fit = berlekamp_massey(&seq, n)?;
            record["value"] = json!(fit.length);
            lines.push(fit.length.to_string());
            if a.witness {
                let taps: String = fit
                    .taps
                    .iter()
                    .map(|&c| if c { '1' } else { '0' })
                    .collect();
                record["taps"] = json!(taps);
                lines.push(format!("taps c_0..c_(L-1): {taps}"));
            }
        }
        Measure::Ec => {
            let cap = degree_cap(&spec, a.dmax)?;
            record["dmax"] = json!(cap);
            match expansion_complexity(&seq, n, cap)? {
                ExpansionComplexity::ZeroPrefix => {
                    record["value"] = json!(0);
                    lines.push("0".into());
                }
                ExpansionComplexity::Found {
                    degree,
                    annihilator,
                } => {
                    record["value"] = json!(degree);
                    lines.push(degree.to_string());
                    if a.witness {
                        record["annihilator"] = json!(annihilator.to_string());
                        lines.push(format!("annihilator: {annihilator}"));
                    }
                }
                ExpansionComplexity::ExceedsCap { cap } => {
                    record["value"] = serde_json::Value::Null;
                    record["exceeds"] = json!(cap);
                    lines.push(format!("exceeds {cap}"));
                }
            }
        }
    }

    let mut out = sink(&None)?;
    if a.json {
        let mut report = RunReport::new("measure")
            .param("sequence", a.source.describe())
            .param("measure", a.measure.name())
            .param("n", n);
        report.results.push(record);
        let text = serde_json::to_string_pretty(&report).expect("serializable report");
        writeln!(out, "{text}").map_err(write_failed)?;
    } else {
        for line in lines {
            writeln!(out, "{line}").map_err(write_failed)?;
        }
    }
    out.flush().map_err(write_failed)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_profile(a: ProfileArgs) -> Result<ExitCode, CliError> {
    let nmax = to_usize(a.nmax)?;
    let (spec, seq) = load(&a.source, nmax)?;
    let cells: Vec<String> = match a.measure {
        Measure::Moc => moc_profile(&seq, nmax)?
            .values()
            .iter()
            .map(usize::to_string)
            .collect(),
        Measure::Lc => lc_profile(&seq, nmax)?
            .values()
            .iter()
            .map(usize::to_string)
            .collect(),
        Measure::Ec => {
            let cap = degree_cap(&spec, a.dmax)?;
            (1..=nmax)
                .map(|n| {
                    Ok(match expansion_complexity(&seq, n, cap)?.value() {
                        Some(v) => v.to_string(),
                        None => format!(">{cap}"),
                    })
                })
                .collect::<Result<_, CliError>>()?
        }
    };
    let mut out = sink(&a.output)?;
    let mut body = String::with_capacity(12 * cells.len() + 8);
    body.push_str("N,value\n");
    for (i, cell) in cells.iter().enumerate() {
        body.push_str(&format!("{},{cell}\n", i + 1));
    }
    out.write_all(body.as_bytes())
        .and_then(|_| out.flush())
        .map_err(write_failed)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(a: VerifyArgs) -> Result<ExitCode, CliError> {
    let claims: Vec<Claim> = if a.claims.is_empty() {
        Claim::all().to_vec()
    } else {
        a.claims.clone()
    };
    let bounds = Bounds {
        nmax: to_usize(a.nmax)?,
        kmax: a.kmax,
        tm_ellmax: a.tm_ellmax,
        pattern_ellmax: a.pattern_ellmax,
        ec_limit: to_usize(a.ec_limit)?,
        squares_nmax: to_usize(a.squares_nmax)?,
    };
    let workers = a.workers.unwrap_or_else(default_workers);
    let mut report = RunReport::new("verify")
        .param(
            "claims",
            claims.iter().map(|c| c.id()).collect::<Vec<_>>().join(","),
        )
        .param("nmax", bounds.nmax)
        .param("kmax", bounds.kmax)
        .param("tm_ellmax", bounds.tm_ellmax)
        .param("pattern_ellmax", bounds.pattern_ellmax)
        .param("ec_limit", bounds.ec_limit)
        .param("squares_nmax", bounds.squares_nmax);
    report.verdicts = run_claims(&claims, &bounds, workers);

    let mut out = sink(&None)?;
    if a.json {
        let text = serde_json::to_string_pretty(&report).expect("serializable report");
        writeln!(out, "{text}").map_err(write_failed)?;
    } else {
        for v in &report.verdicts {
            writeln!(out, "{:<8} {:<16} {}", v.status(), v.claim, v.detail)
                .map_err(write_failed)?;
        }
    }
    out.flush().map_err(write_failed)?;
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
