//! Argument parsing, dispatch, caching and exit codes.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use lietrace_core::branch::BranchProblem;
use lietrace_core::charring::DEFAULT_ORBIT_CAP;
use lietrace_core::compactcert::ExtremumOptions;
use lietrace_core::poly::{parse_poly, Poly};
use lietrace_core::rootdata::{build_root_datum, RootDatum};
use lietrace_core::Error;
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::cache::Cache;
use crate::commands::{self, BranchRep};
use crate::format::{self, pretty};
use crate::render;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;
pub const EXIT_USAGE: i32 = 4;

/// Ranks above this need `--long` for the derivation-matrix pipeline.
pub const DESK_RANK: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Rep {
    Adjoint,
    ShortRoot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Simple,
    ShortRoot,
    Reduction,
}

#[derive(Parser, Debug, Clone)]
#[command(name = "lietrace", version, about = "Extreme values of characters of compact Lie groups")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Cache directory; overrides LIETRACE_CACHE_DIR.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Decimal digits for irrational values.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    pub digits: u32,
    #[arg(long, global = true, default_value_t = lietrace_core::invder::DEFAULT_RANK_CAP,
          value_parser = positive_usize)]
    pub rank_cap: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_ORBIT_CAP, value_parser = positive_u128)]
    pub orbit_cap: u128,
    #[arg(long, global = true, default_value_t = lietrace_core::algsolve::DEFAULT_PAIR_CAP,
          value_parser = positive_usize)]
    pub pair_cap: usize,
    /// Allow computations beyond desk scale.
    #[arg(long, global = true)]
    pub long: bool,
    /// Report elapsed time (JSON meta, or stderr for other formats).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Root datum summary.
    Datum {
        #[arg(long = "type")]
        ty: String,
    },
    /// Values of the fundamental characters at the corners.
    Corners {
        #[arg(long = "type")]
        ty: String,
    },
    /// The derivation matrix M, or M^sigma.
    Matrix {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        sigma: bool,
    },
    /// Certified minimum of a linear combination of fundamental characters.
    Minimize {
        #[arg(long = "type")]
        ty: String,
        /// For example "f2" or "3*f1 - 1/2*f4 + 1".
        #[arg(long, default_value = "f1")]
        objective: String,
    },
    /// Certified maximum, as for minimize.
    Maximize {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value = "f1")]
        objective: String,
    },
    /// Minimum of a restricted trace polynomial over [-2, 2]^n.
    BranchMinimize {
        #[arg(long = "type", conflicts_with = "poly_file")]
        ty: Option<String>,
        /// Polynomial in the lietrace.poly.v1 JSON format.
        #[arg(long)]
        poly_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Rep::Adjoint)]
        rep: Rep,
        /// Fix a variable, e.g. "3=+2" or "1=-2" (1-based).
        #[arg(long = "pin")]
        pins: Vec<String>,
    },
    /// Closed-form trace bounds.
    Table {
        #[arg(long, value_enum, default_value_t = Family::Simple)]
        family: Family,
        #[arg(long)]
        max_rank: Option<usize>,
    },
    /// Minima of SU(2) characters, or the limiting constant.
    Su2 {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: u32,
        #[arg(long)]
        constant: bool,
    },
    /// The limiting character X(s, t).
    Xfun {
        #[arg(long = "type")]
        ty: String,
        /// Comma-separated coordinates in the fundamental weight basis.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        /// Multiply t by i.
        #[arg(long)]
        imag_t: bool,
    },
    /// Quick consistency checks on small groups.
    Selfcheck,
}

fn positive_usize(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn positive_u128(s: &str) -> Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(e) => match e {
                Error::CapExceeded { .. }
                | Error::NotZeroDimensional
                | Error::PairLimit(_)
                | Error::Conditioning(_) => EXIT_INFEASIBLE,
                Error::Undecided { .. } => EXIT_UNDECIDED,
                _ => EXIT_USAGE,
            },
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Core(Error::CapExceeded { what, value, cap }) => format!(
                "{what} is {value}, above the cap {cap}; raise the matching --*-cap flag or pass --long"
            ),
            CliError::Core(Error::NotZeroDimensional) => {
                "the critical locus is not zero-dimensional; this objective cannot be certified".into()
            }
            CliError::Core(Error::PairLimit(n)) => {
                format!("Groebner basis exceeded {n} pairs; raise --pair-cap")
            }
            CliError::Core(e) => e.to_string(),
        }
    }
}

/// Exit status and emitted text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn parse_type(s: &str) -> Result<RootDatum, CliError> {
    let s = s.trim();
    let mut chars = s.chars();
    let kind = chars
        .next()
        .ok_or_else(|| CliError::Usage("empty type; expected something like G2".into()))?
        .to_ascii_uppercase();
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| CliError::Usage(format!("cannot read a rank from \"{s}\"; expected e.g. F4")))?;
    Ok(build_root_datum(kind, rank)?)
}

/// Objective grammar: rational multiples of `f1..fr` and a constant, joined
/// by `+` and `-`.
pub fn parse_objective(src: &str, rank: usize) -> Result<Poly, CliError> {
    let p = parse_poly(src, rank, "f").ok_or_else(|| {
        CliError::Usage(format!(
            "cannot parse objective \"{src}\"; use terms like 2*f1 - 1/3*f2 + 5 with f1..f{rank}"
        ))
    })?;
    if p.total_degree() > 1 {
        return Err(CliError::Usage(
            "objectives are linear combinations of f1..fr; products are not accepted".into(),
        ));
    }
    Ok(p)
}

fn parse_pin(s: &str, n: usize) -> Result<(usize, bool), CliError> {
    let bad = || CliError::Usage(format!("pin \"{s}\" must look like 3=+2 or 1=-2"));
    let (i, v) = s.split_once('=').ok_or_else(bad)?;
    let i: usize = i.trim().parse().map_err(|_| bad())?;
    if i == 0 || i > n {
        return Err(CliError::Usage(format!("pin variable t{i} is outside t1..t{n}")));
    }
    let plus = match v.trim() {
        "2" | "+2" => true,
        "-2" => false,
        _ => return Err(bad()),
    };
    Ok((i - 1, plus))
}

fn parse_vector(s: &str, rank: usize, imag: bool) -> Result<Vec<Complex64>, CliError> {
    let v: Vec<f64> = s
        .split(',')
        .map(|x| x.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Usage(format!("\"{s}\" is not a comma-separated list of numbers")))?;
    if v.len() != rank {
        return Err(CliError::Usage(format!("expected {rank} coordinates, got {}", v.len())));
    }
    Ok(v.into_iter()
        .map(|x| if imag { Complex64::new(0.0, x) } else { Complex64::new(x, 0.0) })
        .collect())
}

fn require_desk(cfg: &RunConfig, d: &RootDatum) -> Result<(), CliError> {
    if d.rank() > DESK_RANK && !cfg.long {
        return Err(CliError::Core(Error::CapExceeded {
            what: "rank for the derivation-matrix pipeline without --long",
            value: d.rank() as u128,
            cap: DESK_RANK as u128,
        }));
    }
    Ok(())
}

struct Payload {
    command: &'static str,
    value: Value,
    cache_hit: bool,
}

fn cached(
    cache: Option<&Cache>,
    request: Value,
    compute: impl FnOnce() -> Result<Value, CliError>,
) -> Result<(Value, bool), CliError> {
    let request = json!({ "lietrace": env!("CARGO_PKG_VERSION"), "request": request });
    if let Some(c) = cache {
        if let Some(v) = c.get(&request) {
            return Ok((v, true));
        }
    }
    let v = compute()?;
    if let Some(c) = cache {
        // a failed write only costs a recomputation later
        let _ = c.put(&request, &v);
    }
    Ok((v, false))
}

fn compute(cfg: &RunConfig) -> Result<Payload, CliError> {
    let cache = Cache::locate(cfg.cache_dir.as_deref());
    let cache = cache.as_ref();
    let digits = cfg.digits;
    let (command, (value, cache_hit)) = match &cfg.command {
        Command::Datum { ty } => {
            let d = parse_type(ty)?;
            ("datum", (commands::datum(&d), false))
        }
        Command::Corners { ty } => {
            let d = parse_type(ty)?;
            let req = json!({ "command": "corners", "type": d.name(), "digits": digits });
            ("corners", cached(cache, req, || Ok(commands::corner_table(&d, digits)?))?)
        }
        Command::Matrix { ty, sigma } => {
            let d = parse_type(ty)?;
            require_desk(cfg, &d)?;
            let req = json!({ "command": "matrix", "type": d.name(), "sigma": sigma });
            let rank_cap = cfg.rank_cap;
            ("matrix", cached(cache, req, || Ok(commands::matrix(&d, *sigma, rank_cap)?))?)
        }
        Command::Minimize { ty, objective } | Command::Maximize { ty, objective } => {
            let d = parse_type(ty)?;
            let obj = parse_objective(objective, d.rank())?;
            require_desk(cfg, &d)?;
            let req = json!({
                "command": "extremum",
                "type": d.name(),
                "objective": format::poly(&obj, "f"),
                "digits": digits,
            });
            let opts = ExtremumOptions {
                digits,
                pair_cap: cfg.pair_cap,
                rank_cap: cfg.rank_cap,
                ..ExtremumOptions::default()
            };
            let name = if matches!(cfg.command, Command::Minimize { .. }) {
                "minimize"
            } else {
                "maximize"
            };
            (name, cached(cache, req, || Ok(commands::extremum(&d, &obj, &opts)?))?)
        }
        Command::BranchMinimize {
            ty,
            poly_file,
            rep,
            pins,
        } => {
            let (source, poly) = match (ty, poly_file) {
                (Some(ty), None) => {
                    let d = parse_type(ty)?;
                    let r = match rep {
                        Rep::Adjoint => BranchRep::Adjoint,
                        Rep::ShortRoot => BranchRep::ShortRoot,
                    };
                    if d.rank() > DESK_RANK && pins.is_empty() && !cfg.long {
                        return Err(CliError::Core(Error::CapExceeded {
                            what: "variables without pins or --long",
                            value: d.rank() as u128,
                            cap: DESK_RANK as u128,
                        }));
                    }
                    (d.name(), commands::branch_polynomial(&d, r, cfg.orbit_cap)?)
                }
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(path).map_err(|e| {
                        CliError::Usage(format!("cannot read {}: {e}", path.display()))
                    })?;
                    let v: Value = serde_json::from_str(&text).map_err(|e| {
                        CliError::Usage(format!("{} is not JSON: {e}", path.display()))
                    })?;
                    let (p, _) = format::parse_poly_json(&v).map_err(CliError::Usage)?;
                    ("file".to_string(), p)
                }
                _ => {
                    return Err(CliError::Usage(
                        "give exactly one of --type and --poly-file".into(),
                    ))
                }
            };
            let mut problem = BranchProblem::new(poly);
            for p in pins {
                let (i, plus) = parse_pin(p, problem.nvars())?;
                problem = problem.with_pin(i, plus)?;
            }
            let pins_json: Vec<Value> = problem
                .pins
                .iter()
                .map(|(i, p)| json!([i, p]))
                .collect();
            let req = json!({
                "command": "branch-minimize",
                "polynomial": format::poly(&problem.poly, "t"),
                "pins": pins_json,
                "digits": digits,
            });
            let pair_cap = cfg.pair_cap;
            (
                "branch-minimize",
                cached(cache, req, || Ok(commands::branch(&source, &problem, pair_cap, digits)?))?,
            )
        }
        Command::Table { family, max_rank } => {
            let v = match family {
                Family::Simple => commands::table_simple(max_rank.unwrap_or(8))?,
                Family::Reduction => commands::table_reduction(max_rank.unwrap_or(8))?,
                Family::ShortRoot => commands::table_short_root(*max_rank)?,
            };
            ("table", (v, false))
        }
        Command::Su2 {
            max_degree,
            constant,
        } => {
            let v = if *constant {
                commands::su2_constant(digits)
            } else {
                commands::su2_table(*max_degree, digits)?
            };
            ("su2", (v, false))
        }
        Command::Xfun { ty, s, t, imag_t } => {
            let d = parse_type(ty)?;
            let s = parse_vector(s, d.rank(), false)?;
            let t = parse_vector(t, d.rank(), *imag_t)?;
            ("xfun", (commands::xfun(&d, &s, &t)?, false))
        }
        Command::Selfcheck => unreachable!("handled in run"),
    };
    Ok(Payload {
        command,
        value,
        cache_hit,
    })
}

fn render(cfg: &RunConfig, p: &Payload, elapsed_ms: u128) -> String {
    let v = &p.value;
    match cfg.format {
        Format::Json => {
            let mut meta = json!({ "cache_hit": p.cache_hit });
            if cfg.timing {
                meta["elapsed_ms"] = json!(elapsed_ms);
            }
            let out = json!({
                "schema": "lietrace.output.v1",
                "command": p.command,
                "result": v,
                "meta": meta,
            });
            pretty(&out) + "\n"
        }
        Format::Text => match p.command {
            "datum" => render::datum_text(v),
            "corners" => render::corners_text(v),
            "matrix" => render::matrix_text(v),
            "minimize" => render::extremum_text(v, true),
            "maximize" => render::extremum_text(v, false),
            "branch-minimize" => render::branch_text(v),
            "table" => render::table_text(v),
            "su2" => render::su2_text(v),
            _ => render::xfun_text(v),
        },
        Format::Csv => match p.command {
            "datum" => render::datum_csv(v),
            "corners" => render::corners_csv(v),
            "matrix" => render::matrix_csv(v),
            "minimize" => render::extremum_csv(v, true),
            "maximize" => render::extremum_csv(v, false),
            "branch-minimize" => render::branch_csv(v),
            "table" => render::table_csv(v),
            "su2" => render::su2_csv(v),
            _ => render::xfun_csv(v),
        },
    }
}

pub fn run(cfg: &RunConfig) -> Outcome {
    if matches!(cfg.command, Command::Selfcheck) {
        return crate::selfcheck::run();
    }
    let start = Instant::now();
    match compute(cfg) {
        Ok(p) => {
            let ms = start.elapsed().as_millis();
            let stdout = render(cfg, &p, ms);
            let stderr = if cfg.timing && cfg.format != Format::Json {
                format!("cache hit: {}, elapsed: {ms} ms\n", p.cache_hit)
            } else {
                String::new()
            };
            Outcome {
                code: EXIT_OK,
                stdout,
                stderr,
            }
        }
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {}\n", e.message()),
        },
    }
}

/// Parse arguments (program name first) and run.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg),
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}
