//! Command-line interface: ingest complexes from files, run any of the
//! library computations, and emit text or JSON reports.
//!
//! Exit codes: 0 success, 2 usage, 3 input validation, 4 mode or
//! threshold errors, 5 oracle mismatch.

mod document;
mod report;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use document::ComplexDocument;
use reeshk::hkrees::{
    determine_mode, hk_rees_at, hk_rees_at_experimental, hk_rees_polynomial, AdSign, HkMode,
    NonCmData,
};
use reeshk::homology::{is_cohen_macaulay, link_torsion_primes, Characteristic};
use reeshk::lengths::{hilbert_series, postulation_number, FaceRing};
use reeshk::oracle::{
    oracle_conca, oracle_hilbert_samuel, oracle_hk_rees, oracle_sr_colength, OracleConfig,
};
use reeshk::simplicial::{
    complete_bipartite, cycle_complex, independence_complex, path_complex, rp2, simplex,
    SimplicialComplex,
};

/// Environment variable overriding the oracle enumeration budget.
const BUDGET_ENV: &str = "REESHK_ORACLE_BUDGET";

#[derive(Parser)]
#[command(name = "reeshk", version, about = "Exact Hilbert-Kunz functions of Rees algebras of Stanley-Reisner rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AdSignArg {
    Neg,
    Zero,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Bipartite,
    Rp2,
    Simplex,
}

#[derive(Subcommand)]
enum Command {
    /// Print the f-vector of a complex
    Fvector { file: PathBuf },
    /// Print the h-vector of a complex
    Hvector { file: PathBuf },
    /// Print the Hilbert series of the face ring
    Hseries { file: PathBuf },
    /// Reisner Cohen-Macaulayness test over a chosen characteristic
    Cm {
        file: PathBuf,
        /// Field characteristic: 0 or a prime
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
    },
    /// Postulation number of a Cohen-Macaulay face ring
    Postulation { file: PathBuf },
    /// Hilbert-Samuel function l(R/n^N)
    Hs {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        n: i64,
    },
    /// Generalized Hilbert-Kunz function of the face ring, l(R/n^[S])
    Conca {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        s: i64,
    },
    /// Hilbert-Kunz function of the Rees algebra at one point
    HkAt {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        s: i64,
        /// Largest |a_i(R)| over the finite a-invariants (non-CM rings)
        #[arg(long, requires = "ad_sign")]
        delta: Option<i64>,
        /// Sign of the top a-invariant a_d(R)
        #[arg(long, value_enum, requires = "delta")]
        ad_sign: Option<AdSignArg>,
        /// Also compute below the validity threshold (uncertified values)
        #[arg(long)]
        experimental: bool,
    },
    /// Fit the Hilbert-Kunz polynomial and report multiplicity and bounds
    HkPoly {
        file: PathBuf,
        #[arg(long, requires = "ad_sign")]
        delta: Option<i64>,
        #[arg(long, value_enum, requires = "delta")]
        ad_sign: Option<AdSignArg>,
        /// Emit the machine-readable report
        #[arg(long)]
        json: bool,
    },
    /// Compare every closed form against the enumeration oracle
    Verify {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        s_max: i64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        n_max: i64,
        #[arg(long, requires = "ad_sign")]
        delta: Option<i64>,
        #[arg(long, value_enum, requires = "delta")]
        ad_sign: Option<AdSignArg>,
    },
    /// Write a complex from one of the built-in families
    Gen {
        family: Family,
        /// Vertex count for path, cycle and simplex
        #[arg(long)]
        r: Option<usize>,
        /// Part sizes for the complete bipartite edge ideal
        #[arg(long)]
        alpha: Option<usize>,
        #[arg(long)]
        beta: Option<usize>,
        #[arg(short, long)]
        output: PathBuf,
    },
}

struct CliError {
    code: u8,
    err: anyhow::Error,
}

impl CliError {
    fn usage(err: anyhow::Error) -> Self {
        CliError { code: 2, err }
    }
    fn validation(err: anyhow::Error) -> Self {
        CliError { code: 3, err }
    }
    fn mode(err: anyhow::Error) -> Self {
        CliError { code: 4, err }
    }
    fn mismatch(err: anyhow::Error) -> Self {
        CliError { code: 5, err }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {:#}", e.err);
            ExitCode::from(e.code)
        }
    }
}

fn load(path: &Path) -> Result<(SimplicialComplex, Option<String>), CliError> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(CliError::validation)?;
    let doc = ComplexDocument::parse(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(CliError::validation)?;
    let (complex, dropped) = doc.build().map_err(CliError::validation)?;
    for d in dropped {
        eprintln!("warning: {d}");
    }
    Ok((complex, doc.name))
}

fn overrides(delta: Option<i64>, ad_sign: Option<AdSignArg>) -> Option<NonCmData> {
    match (delta, ad_sign) {
        (Some(delta), Some(sign)) => Some(NonCmData {
            delta,
            ad_sign: match sign {
                AdSignArg::Neg => AdSign::Negative,
                AdSignArg::Zero => AdSign::Zero,
            },
        }),
        _ => None,
    }
}

fn resolve_mode(
    k: &SimplicialComplex,
    delta: Option<i64>,
    ad_sign: Option<AdSignArg>,
) -> Result<HkMode, CliError> {
    determine_mode(k, Characteristic::Zero, overrides(delta, ad_sign))
        .map_err(|e| CliError::mode(e.into()))
}

fn vector_line(v: &[i64]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(", "))
}

fn describe_mode(mode: &HkMode) -> String {
    match mode {
        HkMode::CohenMacaulay { postulation } => format!(
            "Cohen-Macaulay, postulation number {postulation} (valid for s >= {})",
            mode.s_min()
        ),
        HkMode::NonCohenMacaulay { delta, ad_sign } => format!(
            "not Cohen-Macaulay, delta = {delta}, a_d {} (valid for s >= {})",
            match ad_sign {
                AdSign::Negative => "< 0",
                AdSign::Zero => "= 0",
            },
            mode.s_min()
        ),
    }
}

fn oracle_config() -> Result<OracleConfig, CliError> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => {
            let budget: u64 = v
                .parse()
                .map_err(|_| CliError::usage(anyhow!("{BUDGET_ENV} must be an integer, got {v:?}")))?;
            Ok(OracleConfig { budget })
        }
        Err(_) => Ok(OracleConfig::default()),
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Fvector { file } => {
            let (k, _) = load(&file)?;
            println!("{}", vector_line(&k.f_vector()));
        }
        Command::Hvector { file } => {
            let (k, _) = load(&file)?;
            let fh = reeshk::simplicial::FhData::of(&k);
            println!("{}", vector_line(&fh.h));
        }
        Command::Hseries { file } => {
            let (k, _) = load(&file)?;
            println!("{}", hilbert_series(&k));
        }
        Command::Cm { file, characteristic } => {
            let (k, _) = load(&file)?;
            let ch = Characteristic::new(characteristic)
                .map_err(|e| CliError::validation(e.into()))?;
            let verdict = is_cohen_macaulay(&k, ch);
            println!(
                "Cohen-Macaulay over characteristic {ch}: {}",
                if verdict { "yes" } else { "no" }
            );
            let primes = link_torsion_primes(&k);
            if primes.is_empty() {
                println!("link homology torsion primes: none");
            } else {
                let list: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
                println!("link homology torsion primes: {}", list.join(", "));
            }
        }
        Command::Postulation { file } => {
            let (k, _) = load(&file)?;
            let n = postulation_number(&k).map_err(|e| CliError::mode(e.into()))?;
            println!("{n}");
        }
        Command::Hs { file, n } => {
            let (k, _) = load(&file)?;
            println!("{}", reeshk::lengths::hilbert_samuel(&k, n));
        }
        Command::Conca { file, s } => {
            let (k, _) = load(&file)?;
            let v = reeshk::lengths::conca_hk(&k, s).map_err(|e| CliError::mode(e.into()))?;
            println!("{v}");
        }
        Command::HkAt { file, s, delta, ad_sign, experimental } => {
            let (k, _) = load(&file)?;
            let mode = resolve_mode(&k, delta, ad_sign)?;
            let value = if experimental {
                hk_rees_at_experimental(&k, s, &mode)
            } else {
                hk_rees_at(&k, s, &mode)
            }
            .map_err(|e| CliError::mode(e.into()))?;
            println!("{value}");
        }
        Command::HkPoly { file, delta, ad_sign, json } => {
            let (k, name) = load(&file)?;
            let mode = resolve_mode(&k, delta, ad_sign)?;
            let report = hk_rees_polynomial(&k, &mode).map_err(|e| CliError::mode(e.into()))?;
            if json {
                print!("{}", report::ReportDoc::new(name, &report).to_json());
            } else {
                let mut out = String::new();
                let label = name.unwrap_or_else(|| file.display().to_string());
                writeln!(
                    out,
                    "complex: {label} ({} vertices, ring dimension {})",
                    report.vertex_count, report.fh.d
                )
                .unwrap();
                writeln!(out, "f = {}", vector_line(&report.fh.f)).unwrap();
                writeln!(out, "h = {}", vector_line(&report.fh.h)).unwrap();
                writeln!(out, "mode: {}", describe_mode(&report.mode)).unwrap();
                let samples: Vec<String> =
                    report.samples.iter().map(|(s, v)| format!("HK({s}) = {v}")).collect();
                writeln!(out, "samples: {}", samples.join(", ")).unwrap();
                writeln!(out, "HK(s) = {}", report.polynomial).unwrap();
                writeln!(out, "      = {}", report.binomial).unwrap();
                writeln!(out, "multiplicity: {}", report.multiplicity).unwrap();
                writeln!(
                    out,
                    "bound check: leading {} vs c(d)*e = {} -> {}",
                    report.bound_check.leading,
                    report.bound_check.bound,
                    if report.bound_check.equal { "equality holds" } else { "strict inequality" }
                )
                .unwrap();
                print!("{out}");
            }
        }
        Command::Verify { file, s_max, n_max, delta, ad_sign } => {
            verify(&file, s_max, n_max, delta, ad_sign)?;
        }
        Command::Gen { family, r, alpha, beta, output } => {
            gen(family, r, alpha, beta, &output)?;
        }
    }
    Ok(())
}

fn verify(
    file: &Path,
    s_max: i64,
    n_max: i64,
    delta: Option<i64>,
    ad_sign: Option<AdSignArg>,
) -> Result<(), CliError> {
    let (k, _) = load(file)?;
    let cfg = oracle_config()?;
    let ring = FaceRing::new(&k).map_err(|e| CliError::mode(e.into()))?;
    let mut mismatches: Vec<String> = Vec::new();
    let wrap = |e: reeshk::oracle::OracleError| CliError::mode(e.into());

    let mut checked = 0usize;
    for s in 1..=s_max {
        for n in 0..=n_max {
            let oracle = oracle_sr_colength(&k, s, n, &cfg).map_err(wrap)?;
            let closed = ring.sr_colength(s, n).unwrap();
            if oracle != closed {
                mismatches.push(format!("sr_colength s={s} n={n}: oracle {oracle}, closed {closed}"));
            }
            checked += 1;
        }
    }
    println!("sr_colength: {}/{checked} match", checked - count(&mismatches, "sr_"));

    let mut checked_hs = 0usize;
    for n in 0..=n_max {
        let oracle = oracle_hilbert_samuel(&k, n, &cfg).map_err(wrap)?;
        let closed = ring.hilbert_samuel(n);
        if oracle != closed {
            mismatches.push(format!("hilbert_samuel n={n}: oracle {oracle}, closed {closed}"));
        }
        checked_hs += 1;
    }
    println!("hilbert_samuel: {}/{checked_hs} match", checked_hs - count(&mismatches, "hilbert_"));

    let mut checked_conca = 0usize;
    for s in 1..=s_max {
        let oracle = oracle_conca(&k, s, &cfg).map_err(wrap)?;
        let closed = ring.conca_hk(s).unwrap();
        if oracle != closed {
            mismatches.push(format!("conca s={s}: oracle {oracle}, closed {closed}"));
        }
        checked_conca += 1;
    }
    println!("conca: {}/{checked_conca} match", checked_conca - count(&mismatches, "conca"));

    match determine_mode(&k, Characteristic::Zero, overrides(delta, ad_sign)) {
        Ok(mode) => {
            let mut checked_hk = 0usize;
            for s in mode.s_min()..=s_max {
                let oracle = oracle_hk_rees(&k, s, &cfg).map_err(wrap)?;
                let closed = hk_rees_at(&k, s, &mode).map_err(|e| CliError::mode(e.into()))?;
                if oracle != closed {
                    mismatches.push(format!("hk_rees s={s}: oracle {oracle}, closed {closed}"));
                }
                checked_hk += 1;
            }
            println!("hk_rees: {}/{checked_hk} match (valid s up to {s_max})", checked_hk - count(&mismatches, "hk_rees"));
        }
        Err(_) => {
            println!("hk_rees: skipped (not Cohen-Macaulay; pass --delta and --ad-sign)");
        }
    }

    if mismatches.is_empty() {
        println!("all checks passed");
        Ok(())
    } else {
        for m in &mismatches {
            eprintln!("MISMATCH {m}");
        }
        Err(CliError::mismatch(anyhow!("{} oracle mismatches", mismatches.len())))
    }
}

fn count(mismatches: &[String], prefix: &str) -> usize {
    mismatches.iter().filter(|m| m.starts_with(prefix)).count()
}

fn gen(
    family: Family,
    r: Option<usize>,
    alpha: Option<usize>,
    beta: Option<usize>,
    output: &Path,
) -> Result<(), CliError> {
    let need_r = || r.ok_or_else(|| CliError::usage(anyhow!("this family needs --r")));
    let (name, complex) = match family {
        Family::Path => {
            let r = need_r()?;
            (format!("path-{r}"), path_complex(r).map_err(|e| CliError::usage(e.into()))?)
        }
        Family::Cycle => {
            let r = need_r()?;
            (format!("cycle-{r}"), cycle_complex(r).map_err(|e| CliError::usage(e.into()))?)
        }
        Family::Simplex => {
            let r = need_r()?;
            (format!("simplex-{r}"), simplex(r).map_err(|e| CliError::usage(e.into()))?)
        }
        Family::Rp2 => ("rp2".to_string(), rp2()),
        Family::Bipartite => {
            let (Some(alpha), Some(beta)) = (alpha, beta) else {
                return Err(CliError::usage(anyhow!("bipartite needs --alpha and --beta")));
            };
            let g = complete_bipartite(alpha, beta).map_err(|e| CliError::usage(e.into()))?;
            (format!("bipartite-{alpha}-{beta}"), independence_complex(&g))
        }
    };
    let doc = ComplexDocument::from_complex(Some(name), &complex);
    std::fs::write(output, doc.render_for(output))
        .with_context(|| format!("writing {}", output.display()))
        .map_err(CliError::validation)?;
    println!("wrote {}", output.display());
    Ok(())
}
