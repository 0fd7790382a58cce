mod output;

use std::fs;
use std::io::{self, Read};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use afdim_core::finitering::{
    af_dim, enumerate_ideals, local_structure, omega, DEFAULT_AFDIM_CAP, DEFAULT_OMEGA_CAP,
};
use afdim_core::quadorder::DEFAULT_QUOTIENT_BOUND;
use afdim_core::{
    classify_axb, classify_order, factorize, split_prime, sweep, verify_afdim_local, Capped, Error,
    ErrorKind, FieldDesc, FiniteRing, VerifyConfig,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use output::Format;

#[derive(Parser)]
#[command(
    name = "afdim",
    version,
    about = "AF-dimension of quadratic orders and finite rings"
)]
#[command(allow_negative_numbers = true)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Json, global = true)]
    format: FormatArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the order Z[r w_n].
    #[command(allow_negative_numbers = true)]
    Classify {
        #[arg(short)]
        n: i64,
        #[arg(short, default_value_t = 1)]
        r: i64,
    },
    /// Decompose p in the maximal order of Q(sqrt n).
    #[command(allow_negative_numbers = true)]
    Split {
        #[arg(short)]
        n: i64,
        #[arg(short)]
        p: i64,
    },
    /// omega of an ideal of a finite ring.
    Omega {
        /// Ring description file, or `-` for standard input.
        ring: PathBuf,
        /// Generator as comma-separated coordinates; repeat for more generators.
        #[arg(long = "gen", value_name = "COORDS", required = true)]
        generators: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_OMEGA_CAP, value_parser = clap::value_parser!(u32).range(1..))]
        cap_omega: u32,
    },
    /// AF-dimension of a finite ring.
    AfdimFinite {
        /// Ring description file, or `-` for standard input.
        ring: PathBuf,
        #[arg(long, default_value_t = DEFAULT_AFDIM_CAP, value_parser = clap::value_parser!(u32).range(1..))]
        cap_afdim: u32,
    },
    /// Classify A + X B[X] for finite products of finite fields.
    Axb {
        /// Factors of A, e.g. `2,3^2`.
        #[arg(long)]
        a: String,
        /// Factors of B.
        #[arg(long)]
        b: String,
        /// For each factor of B, the index of the factor of A below it.
        #[arg(long)]
        map: String,
    },
    /// Check the local AF-dimension at p against a finite quotient.
    #[command(allow_negative_numbers = true)]
    Verify {
        #[arg(short)]
        n: i64,
        #[arg(short)]
        r: i64,
        #[arg(short)]
        p: i64,
        /// Exponent of p in r; defaults to the actual exponent.
        #[arg(short)]
        a: Option<u32>,
        #[arg(long, default_value_t = 2)]
        exponent_margin: u32,
        #[arg(long, default_value_t = DEFAULT_QUOTIENT_BOUND, value_parser = clap::value_parser!(u64).range(1..))]
        quotient_bound: u64,
        #[arg(long, default_value_t = DEFAULT_OMEGA_CAP, value_parser = clap::value_parser!(u32).range(1..))]
        cap_omega: u32,
    },
    /// Classify every order in a range (JSON lines by default).
    Sweep {
        /// Inclusive range of n, e.g. `-30..30`. Non-squarefree n are skipped.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        n_range: RangeInclusive<i64>,
        /// Inclusive range of r, e.g. `1..12`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        r_range: RangeInclusive<i64>,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let bad = || format!("expected LO..HI, got {s:?}");
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi
        .trim()
        .trim_start_matches('=')
        .parse()
        .map_err(|_| bad())?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

enum Failure {
    Core(Error),
    Input(String),
    Disagreement,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn read_ring(path: &PathBuf) -> Result<FiniteRing, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("reading standard input: {e}")))?;
        s
    } else {
        fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("reading {}: {e}", path.display())))?
    };
    Ok(text.parse()?)
}

fn parse_list<T>(s: &str, what: &str) -> Result<Vec<T>, Failure>
where
    T: std::str::FromStr,
    T::Err: std::fmt::Display,
{
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|e| Failure::Input(format!("invalid {what} {t:?}: {e}")))
        })
        .collect()
}

#[derive(Serialize)]
struct OmegaReport {
    generators: Vec<Vec<u64>>,
    ideal_order: u64,
    omega: Capped,
}

#[derive(Serialize)]
struct FiniteReport {
    order: u64,
    rank: usize,
    ideals: usize,
    local: bool,
    af_dim: Capped,
}

fn run(cli: Cli) -> Result<(), Failure> {
    let fmt = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Table => Format::Table,
    };
    match cli.command {
        Command::Classify { n, r } => output::single(fmt, &classify_order(n, r)?),
        Command::Split { n, p } => output::single(fmt, &split_prime(n, p)?),
        Command::Omega {
            ring,
            generators,
            cap_omega,
        } => {
            let ring = read_ring(&ring)?;
            let coords: Vec<Vec<u64>> = generators
                .iter()
                .map(|g| parse_list::<u64>(g, "coordinate"))
                .collect::<Result<_, _>>()?;
            for c in &coords {
                if c.len() != ring.rank() {
                    return Err(Failure::Input(format!(
                        "generator {c:?} needs {} coordinates",
                        ring.rank()
                    )));
                }
            }
            let gens: Vec<u32> = coords.iter().map(|c| ring.index_of(c)).collect();
            let ideal = ring.ideal(&gens);
            let w = omega(&ring, &ideal, cap_omega)?;
            output::single(
                fmt,
                &OmegaReport {
                    generators: gens.iter().map(|&g| ring.coords(g)).collect(),
                    ideal_order: ideal.order(),
                    omega: w,
                },
            )
        }
        Command::AfdimFinite { ring, cap_afdim } => {
            let ring = read_ring(&ring)?;
            let report = FiniteReport {
                order: ring.order(),
                rank: ring.rank(),
                ideals: enumerate_ideals(&ring)?.len(),
                local: local_structure(&ring).is_some(),
                af_dim: af_dim(&ring, cap_afdim)?,
            };
            output::single(fmt, &report)
        }
        Command::Axb { a, b, map } => {
            let a: Vec<FieldDesc> = parse_list(&a, "field")?;
            let b: Vec<FieldDesc> = parse_list(&b, "field")?;
            let map: Vec<usize> = parse_list(&map, "map entry")?;
            output::single(fmt, &classify_axb(&a, &b, &map)?)
        }
        Command::Verify {
            n,
            r,
            p,
            a,
            exponent_margin,
            quotient_bound,
            cap_omega,
        } => {
            let a = match a {
                Some(a) => a,
                None => factorize(r)?.1.exponent_of(p.max(0) as u64),
            };
            let cfg = VerifyConfig {
                exponent_margin,
                quotient_bound,
                omega_cap: cap_omega,
            };
            let report = verify_afdim_local(n, r, p, a, &cfg)?;
            output::single(fmt, &report);
            if !report.agrees {
                return Err(Failure::Disagreement);
            }
        }
        Command::Sweep { n_range, r_range } => output::sweep(fmt, &sweep(n_range, r_range)?),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Disagreement) => {
            eprintln!("error: prediction and observation disagree");
            ExitCode::from(4)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            match e.kind() {
                ErrorKind::Domain => ExitCode::from(2),
                ErrorKind::Capacity => ExitCode::from(3),
            }
        }
    }
}
