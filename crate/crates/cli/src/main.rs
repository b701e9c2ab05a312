use clap::{Parser, Subcommand};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use szpiro_cli::cache::Cache;
use szpiro_cli::commands;
use szpiro_cli::records::{parse_curve_file, parse_curves, parse_triple_file, CurveRecord};
use szpiro_cli::report::Summary;
use szpiro_cli::suite::{self, SuiteOptions};
use szpiro_core::bounds::{ledger_with, FieldContext, LedgerParams};

#[derive(Parser)]
#[command(name = "szpiro", version, about = "Invariants and explicit bound checks for curves of low genus")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args, Clone)]
struct CurvesArg {
    /// File of curves, one `[label] a1 a2 a3 a4 a6` per line.
    #[arg(long)]
    curves: Option<PathBuf>,
    /// Directory for cached global invariants.
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

#[derive(clap::Args, Clone)]
struct ParamArgs {
    /// Natural log of the constant k0.
    #[arg(long, allow_negative_numbers = true)]
    log_k0: Option<f64>,
    /// Natural log of the constant c(d).
    #[arg(long, allow_negative_numbers = true)]
    log_c_d: Option<f64>,
    /// Natural log of the constant k3'.
    #[arg(long, allow_negative_numbers = true)]
    log_k3_prime: Option<f64>,
}

impl ParamArgs {
    fn params(&self) -> LedgerParams {
        LedgerParams {
            log_k0: self.log_k0,
            log_c_d: self.log_c_d,
            log_k3_prime: self.log_k3_prime,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Minimal discriminant, conductor and local data, as JSON lines.
    Invariants(CurvesArg),
    /// Run the per-curve check suite.
    Szpiro {
        #[command(flatten)]
        input: CurvesArg,
        /// Comma-separated check names; all by default.
        #[arg(long)]
        checks: Option<String>,
        /// Number field as `d,D_K,h_K`.
        #[arg(long, default_value = "1,1,1")]
        field: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Add per-record wall time to each line.
        #[arg(long)]
        timing: bool,
    },
    /// Frey-curve chain for coprime triples `a + b = c`.
    Frey {
        /// File of `a,b,c` lines.
        #[arg(long)]
        abc: PathBuf,
        /// Natural log of the constant c4'.
        #[arg(long, allow_negative_numbers = true)]
        log_c4_prime: Option<f64>,
    },
    /// Legendre parameters and their heights.
    Lambda(CurvesArg),
    /// Theta constants and Delta_g at a period matrix (2 or 8 reals).
    Theta {
        #[arg(required = true, allow_negative_numbers = true, num_args = 2..=8)]
        tau: Vec<f64>,
    },
    /// Monte Carlo Faltings delta in genus two (8 reals).
    Delta2 {
        #[arg(required = true, allow_negative_numbers = true, num_args = 8)]
        tau: Vec<f64>,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Table of explicit constants.
    Constants {
        #[arg(long, default_value = "1,1,1")]
        field: String,
        #[arg(long, default_value_t = 1)]
        genus: u32,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Quick run of every check family on built-in data.
    Selftest,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn load_curves(arg: &CurvesArg) -> Result<Vec<CurveRecord>, String> {
    match &arg.curves {
        Some(p) => parse_curve_file(p).map_err(|e| e.to_string()),
        None => {
            let mut text = String::new();
            io::Read::read_to_string(&mut io::stdin(), &mut text).map_err(|e| e.to_string())?;
            parse_curves(&text).map_err(|e| e.to_string())
        }
    }
}

fn open_cache(arg: &CurvesArg) -> Result<Option<Cache>, String> {
    arg.cache_dir.as_deref().map(Cache::open).transpose().map_err(|e| format!("cache: {e}"))
}

fn finish(result: io::Result<Summary>) -> ExitCode {
    match result {
        Ok(s) => {
            eprintln!(
                "records {}  pass {}  fail {}  skip {}  errors {}",
                s.records, s.pass, s.fail, s.skip, s.errors
            );
            ExitCode::from(s.exit_code() as u8)
        }
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => usage(e),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match cli.cmd {
        Cmd::Invariants(arg) => {
            let (records, cache) = match load_curves(&arg).and_then(|r| Ok((r, open_cache(&arg)?))) {
                Ok(x) => x,
                Err(e) => return usage(e),
            };
            finish(suite::run_invariants(&records, cache.as_ref(), &mut out))
        }
        Cmd::Szpiro { input, checks, field, params, timing } => {
            let checks = match checks.as_deref().map(suite::parse_checks) {
                Some(Ok(c)) => c,
                Some(Err(e)) => return usage(e),
                None => suite::all_checks().into_iter().map(String::from).collect(),
            };
            let ctx = match FieldContext::parse(&field) {
                Ok(c) => c,
                Err(e) => return usage(e),
            };
            let (records, cache) = match load_curves(&input).and_then(|r| Ok((r, open_cache(&input)?))) {
                Ok(x) => x,
                Err(e) => return usage(e),
            };
            let opts = SuiteOptions {
                checks,
                ctx,
                params: params.params(),
                cache,
                timing,
            };
            finish(suite::run_suite(&records, &opts, &mut out))
        }
        Cmd::Frey { abc, log_c4_prime } => match parse_triple_file(&abc) {
            Ok(t) => finish(commands::run_frey(&t, log_c4_prime, &mut out)),
            Err(e) => return usage(e),
        },
        Cmd::Lambda(arg) => match load_curves(&arg) {
            Ok(r) => finish(commands::run_lambda(&r, &mut out)),
            Err(e) => return usage(e),
        },
        Cmd::Theta { tau } => match commands::parse_tau(&tau) {
            Ok(t) => finish(commands::run_theta(&t, &mut out)),
            Err(e) => return usage(e),
        },
        Cmd::Delta2 { tau, samples, seed } => match commands::parse_tau(&tau) {
            Ok(t) if t.genus() == 2 => finish(commands::run_delta2(&t, samples, seed, &mut out)),
            Ok(_) => return usage("delta2 needs a genus-two period matrix"),
            Err(e) => return usage(e),
        },
        Cmd::Constants { field, genus, params } => {
            if !(1..=2).contains(&genus) {
                return usage("genus must be 1 or 2");
            }
            match FieldContext::parse(&field) {
                Ok(ctx) => match write!(out, "{}", ledger_with(&ctx, genus, &params.params())) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(e) => usage(e),
                },
                Err(e) => return usage(e),
            }
        }
        Cmd::Selftest => finish(commands::run_selftest(&mut out)),
    };
    if let Err(e) = out.flush() {
        if e.kind() != io::ErrorKind::BrokenPipe {
            return usage(e);
        }
    }
    code
}
