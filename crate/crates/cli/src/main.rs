use std::fs::OpenOptions;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use steinhaus::regularity::{
    brute_force_regular, load_resume_state, run_scan, verify_conjecture2_at, DegreeParity,
    ResumeState, ScanConfig, Verdict, DEFAULT_BRUTE_FORCE_CAP, DEFAULT_SEARCH_CAP,
};
use steinhaus::symmetry::{
    doubly_symmetric_characterizations, enumerate_ms, is_doubly_symmetric, is_multi_symmetric,
    ms_count, multi_symmetric_characterizations,
};
use steinhaus::{degree_consistency, BinarySequence, Error, SteinhausMatrix};

const EXIT_USAGE: u8 = 2;
const EXIT_CAPPED: u8 = 3;
const EXIT_FOUND: u8 = 4;

/// Largest size scanned by `search --full`.
const FULL_RANGE_END: usize = 1500;

#[derive(Parser)]
#[command(
    name = "steinhaus",
    version,
    about = "Steinhaus graphs: matrices, symmetry checks and regularity searches"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Steinhaus matrix generated by a sequence.
    Matrix {
        /// 0/1 string with a_1 first, or `0x<hex>:<len>`.
        seq: String,
        #[arg(long, value_enum, default_value_t = Format::Grid)]
        format: Format,
    },
    /// Report symmetry predicates, degrees and the anti-diagonal identities.
    Check { seq: String },
    /// Regular-mod-4 search over multi-symmetric matrices, one JSON line per size.
    Search {
        /// Inclusive size range such as `5..40`.
        range: Option<String>,
        /// Scan 5..1500.
        #[arg(long, conflicts_with = "range")]
        full: bool,
        /// Largest constrained dimension that will be enumerated.
        #[arg(long, env = "STEINHAUS_CAP", default_value_t = DEFAULT_SEARCH_CAP)]
        cap: usize,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        /// JSONL output file (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Checkpoint file (default: `<out>.checkpoint` when `--out` is given).
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Continue an interrupted scan from `--out` and its checkpoint.
        #[arg(long, requires = "out")]
        resume: bool,
        /// Write `elapsed_ms` as 0 so output is byte-reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Check that no regular graph of odd degree exists for each even order.
    #[command(name = "verify-conjecture2")]
    VerifyConjecture2 {
        /// Inclusive range of even orders, at least 4, such as `4..52`.
        range: String,
        #[arg(long, env = "STEINHAUS_CAP", default_value_t = DEFAULT_SEARCH_CAP)]
        cap: usize,
    },
    /// Exhaustive search for regular Steinhaus graphs of one order.
    Bruteforce {
        n: usize,
        #[arg(value_enum, default_value_t = Parity::Any)]
        parity: Parity,
        #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_CAP)]
        cap: usize,
    },
    /// Number of multi-symmetric matrices per size, with an enumeration check.
    #[command(name = "count-ms")]
    CountMs {
        range: String,
        #[arg(long, env = "STEINHAUS_CAP", default_value_t = DEFAULT_SEARCH_CAP)]
        cap: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Grid,
    Triangle,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Parity {
    Any,
    Odd,
    Even,
}

impl From<Parity> for DegreeParity {
    fn from(p: Parity) -> Self {
        match p {
            Parity::Any => DegreeParity::Any,
            Parity::Odd => DegreeParity::Odd,
            Parity::Even => DegreeParity::Even,
        }
    }
}

enum Failure {
    Usage(String),
    Capped(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::InvalidOrder { .. } | Error::SizeTooSmall { .. } => {
                Failure::Usage(e.to_string())
            }
            Error::CapExceeded { .. } => Failure::Capped(e.to_string()),
            other => Failure::Other(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Capped(msg)) => {
            eprintln!("capped: {msg}");
            ExitCode::from(EXIT_CAPPED)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>, Failure> {
    let bad = || {
        Failure::Usage(format!(
            "invalid range {text:?}: expected `a..b` or a single number"
        ))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (text, text),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn parse_seq(text: &str) -> Result<BinarySequence, Failure> {
    Ok(text.parse::<BinarySequence>()?)
}

fn bits(v: &[bool]) -> String {
    v.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn run(command: Command) -> Result<u8, Failure> {
    let mut out = io::stdout().lock();
    match command {
        Command::Matrix { seq, format } => {
            let m = SteinhausMatrix::from_sequence(&parse_seq(&seq)?);
            match format {
                Format::Grid => write!(out, "{}", m.to_grid_string())?,
                Format::Triangle => write!(out, "{}", m.to_triangle_string())?,
                Format::Json => {
                    let rows: Vec<String> = m.to_grid_string().lines().map(str::to_owned).collect();
                    let v = json!({
                        "n": m.size(),
                        "sequence": m.sequence().to_string(),
                        "rows": rows,
                        "degrees": m.degrees().as_slice(),
                    });
                    writeln!(out, "{v}")?;
                }
            }
            Ok(0)
        }
        Command::Check { seq } => {
            check(&mut out, &parse_seq(&seq)?)?;
            Ok(0)
        }
        Command::Search {
            range,
            full,
            cap,
            jobs,
            out: out_path,
            checkpoint,
            resume,
            no_timing,
        } => {
            let range = match (range, full) {
                (_, true) => 5..=FULL_RANGE_END,
                (Some(r), false) => parse_range(&r)?,
                (None, false) => return Err(Failure::Usage("give a range or --full".into())),
            };
            if *range.start() < 5 {
                return Err(Failure::Usage("search needs sizes of at least 5".into()));
            }
            let checkpoint = checkpoint.or_else(|| {
                out_path.as_ref().map(|p| {
                    let mut s = p.as_os_str().to_owned();
                    s.push(".checkpoint");
                    PathBuf::from(s)
                })
            });
            let config = ScanConfig {
                range: range.clone(),
                cap,
                jobs,
                timing: !no_timing,
                checkpoint: checkpoint.clone(),
            };
            let summary = match &out_path {
                Some(path) => {
                    let state = if resume {
                        load_resume_state(&range, path, checkpoint.as_deref())?
                    } else {
                        ResumeState::default()
                    };
                    let mut file = OpenOptions::new()
                        .create(true)
                        .write(true)
                        .append(resume)
                        .truncate(!resume)
                        .open(path)?;
                    run_scan(&config, state, &mut file)?
                }
                None => run_scan(&config, ResumeState::default(), &mut out)?,
            };
            let total = summary.computed.len() + summary.resumed.len();
            eprintln!(
                "summary: sizes={} computed={} resumed={} nonzero_survivors={} capped={} bound_violations={}",
                total,
                summary.computed.len(),
                summary.resumed.len(),
                summary.nonzero_survivors.len(),
                summary.capped.len(),
                summary.bound_violations.len()
            );
            for (n, s) in &summary.nonzero_survivors {
                eprintln!("nonzero survivor: n={n} sequence={s}");
            }
            if !summary.capped.is_empty() {
                eprintln!("capped sizes: {:?}", summary.capped);
            }
            if !summary.bound_violations.is_empty() {
                eprintln!(
                    "dimension bound exceeded at: {:?}",
                    summary.bound_violations
                );
            }
            Ok(if !summary.nonzero_survivors.is_empty() {
                EXIT_FOUND
            } else if !summary.capped.is_empty() {
                EXIT_CAPPED
            } else {
                0
            })
        }
        Command::VerifyConjecture2 { range, cap } => {
            let range = parse_range(&range)?;
            for n in [*range.start(), *range.end()] {
                if n < 4 || n % 2 != 0 {
                    return Err(Error::InvalidOrder { n }.into());
                }
            }
            let mut found = false;
            for n in range.step_by(2) {
                match verify_conjecture2_at(n, cap)? {
                    Verdict::Verified => writeln!(out, "N={n} verified")?,
                    Verdict::Counterexample(s) => {
                        found = true;
                        writeln!(out, "N={n} counterexample {s}")?;
                    }
                }
            }
            Ok(if found { EXIT_FOUND } else { 0 })
        }
        Command::Bruteforce { n, parity, cap } => {
            let found = brute_force_regular(n, parity.into(), cap)?;
            for s in &found {
                let d = SteinhausMatrix::from_sequence(s).degrees().get(1);
                writeln!(out, "{s} degree={d}")?;
            }
            writeln!(out, "total={}", found.len())?;
            Ok(0)
        }
        Command::CountMs { range, cap } => {
            let range = parse_range(&range)?;
            if *range.start() == 0 {
                return Err(Failure::Usage("sizes start at 1".into()));
            }
            writeln!(out, "n\tformula\tenumerated")?;
            let mut mismatch = false;
            for n in range {
                let formula = ms_count(n).map_or_else(|| "overflow".to_string(), |c| c.to_string());
                let enumerated = match enumerate_ms(n, cap) {
                    Ok(it) => it.filter(is_multi_symmetric).count().to_string(),
                    Err(Error::CapExceeded { .. }) => "-".to_string(),
                    Err(e) => return Err(e.into()),
                };
                mismatch |= enumerated != "-" && enumerated != formula;
                writeln!(out, "{n}\t{formula}\t{enumerated}")?;
            }
            Ok(if mismatch { EXIT_FOUND } else { 0 })
        }
    }
}

fn check(out: &mut impl Write, seq: &BinarySequence) -> Result<(), Failure> {
    let m = SteinhausMatrix::from_sequence(seq);
    let n = m.size();
    let degs = m.degrees();
    writeln!(out, "n={n}")?;
    writeln!(out, "sequence={seq}")?;
    let deg_text: Vec<String> = degs.as_slice().iter().map(ToString::to_string).collect();
    writeln!(out, "degrees={}", deg_text.join(" "))?;
    writeln!(out, "recurrence={}", m.satisfies_recurrence())?;
    writeln!(
        out,
        "degree_consistency={}",
        degree_consistency(degs.as_slice())
    )?;
    writeln!(out, "regular={}", degs.is_regular())?;
    writeln!(out, "regular_mod4={}", degs.is_regular_mod(4))?;
    writeln!(out, "doubly_symmetric={}", is_doubly_symmetric(&m))?;
    writeln!(out, "multi_symmetric={}", is_multi_symmetric(&m))?;
    if n >= 3 {
        let (a, b, c) = doubly_symmetric_characterizations(&m)?;
        writeln!(out, "doubly_symmetric_conditions={}", bits(&[a, b, c]))?;
        let (a, b, c) = multi_symmetric_characterizations(&m)?;
        writeln!(out, "multi_symmetric_conditions={}", bits(&[a, b, c]))?;
    }
    for i in 1..=n / 2 {
        let (a, f, b) = m.antidiagonal_degree_identity(i)?;
        writeln!(
            out,
            "antidiagonal i={i}: entry={} forward={} backward={}",
            u8::from(a),
            u8::from(f),
            u8::from(b)
        )?;
    }
    Ok(())
}
