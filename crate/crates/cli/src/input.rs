use std::path::PathBuf;

use clap::{Args, ValueEnum};
use seqcomplexity::{BitFormat, BitSequence, SequenceSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeqKind {
    ThueMorse,
    RudinShapiro,
    Pattern,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Ascii01,
    Hex,
}

impl From<FormatArg> for BitFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Ascii01 => BitFormat::Ascii01,
            FormatArg::Hex => BitFormat::Hex,
        }
    }
}

/// Where the bits come from: a built-in generator, a file, or a literal.
#[derive(Clone, Debug, Args)]
#[group(skip)]
pub struct SeqArgs {
    /// Built-in sequence.
    #[arg(
        long,
        value_enum,
        required_unless_present_any = ["file", "literal"],
        conflicts_with_all = ["file", "literal"]
    )]
    pub seq: Option<SeqKind>,

    /// Pattern length for `--seq pattern` (1 is Thue-Morse, 2 Rudin-Shapiro).
    #[arg(short = 'k', long = "k", value_parser = clap::value_parser!(u32).range(1..=62))]
    pub k: Option<u32>,

    /// Take the subsequence along squares, u_{i^2}.
    #[arg(long)]
    pub along_squares: bool,

    /// Read bits from a file.
    #[arg(long, conflicts_with = "literal")]
    pub file: Option<PathBuf>,

    /// File encoding.
    #[arg(long, value_enum, default_value = "ascii01")]
    pub format: FormatArg,

    /// Bits given inline, e.g. 0110.
    #[arg(long)]
    pub literal: Option<String>,
}

impl SeqArgs {
    pub fn to_spec(&self) -> Result<SequenceSpec, String> {
        let base = match (self.seq, &self.file, &self.literal) {
            (Some(kind), None, None) => match (kind, self.k) {
                (SeqKind::ThueMorse, None) => SequenceSpec::ThueMorse,
                (SeqKind::RudinShapiro, None) => SequenceSpec::rudin_shapiro(),
                (SeqKind::Pattern, Some(k)) => SequenceSpec::Pattern(k),
                (SeqKind::Pattern, None) => return Err("--seq pattern requires -k".into()),
                (_, Some(_)) => return Err("-k only applies to --seq pattern".into()),
            },
            (None, Some(path), None) => SequenceSpec::File {
                path: path.clone(),
                format: self.format.into(),
            },
            (None, None, Some(text)) => {
                let bits: BitSequence = text.parse().map_err(|e| format!("--literal: {e}"))?;
                SequenceSpec::Literal(bits)
            }
            _ => return Err("give exactly one of --seq, --file, --literal".into()),
        };
        Ok(if self.along_squares {
            SequenceSpec::along_squares(base)
        } else {
            base
        })
    }

    pub fn describe(&self) -> String {
        let mut s = match (self.seq, &self.file, &self.literal) {
            (Some(SeqKind::ThueMorse), ..) => "thue-morse".to_string(),
            (Some(SeqKind::RudinShapiro), ..) => "rudin-shapiro".to_string(),
            (Some(SeqKind::Pattern), ..) => format!("pattern(k={})", self.k.unwrap_or(0)),
            (None, Some(path), _) => format!("file:{}", path.display()),
            (None, None, Some(bits)) => format!("literal:{bits}"),
            _ => "unknown".to_string(),
        };
        if self.along_squares {
            s = format!("along-squares({s})");
        }
        s
    }
}
