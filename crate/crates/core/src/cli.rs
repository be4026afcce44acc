//! Command-line front end. `run` parses, dispatches and maps outcomes to
//! exit codes: 0 success, 1 a hard bound failed, 2 bad usage or input.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use crate::characters::{
    character_branching, character_mn, count_ribbon_tableaux, removable_ribbons, CharacterValue,
};
use crate::config::Config;
use crate::cycle_type::CycleType;
use crate::decomposition::{
    build_thick_hook_decomposition, stairs_decomposition, validate_decomposition, ThickHookDecomposition,
};
use crate::dimensions::{dim_hlf, skew_dim_det, skew_dim_oracle_bounded, SkewShape};
use crate::error::Error;
use crate::excited::{enumerate_excited, excited_sum, naruse_ratio, skew_dim_naruse};
use crate::harness::{self, CheckReport, Format, Mismatch, SweepKind, SweepReport};
use crate::partition::Partition;
use crate::render::{self, RenderStyle};

#[derive(Debug, Parser)]
#[command(name = "youngbound", version, about = "Exact Young diagram combinatorics and character bounds")]
struct Cli {
    /// Worker threads for sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write tables here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Table format: csv or json.
    #[arg(long, global = true)]
    format: Option<Format>,
    /// key = value configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Diagram glyphs: ascii or unicode.
    #[arg(long, global = true)]
    style: Option<RenderStyle>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// d_λ by the hook length formula.
    Dim { lambda: Partition },
    /// Standard tableaux of λ\μ.
    SkewDim {
        lambda: Partition,
        mu: Partition,
        #[arg(long, value_enum, default_value_t = SkewMethod::Det)]
        method: SkewMethod,
    },
    /// Excited diagrams of μ inside λ.
    Excited {
        lambda: Partition,
        mu: Partition,
        #[command(flatten)]
        mode: ExcitedMode,
        /// Draw each listed diagram.
        #[arg(long)]
        draw: bool,
    },
    /// Thick hook or stairs decomposition.
    #[command(group = clap::ArgGroup::new("kind").required(true).args(["thick_hooks", "stairs", "cuts"]))]
    Decompose {
        lambda: Partition,
        /// Build an (a, 4a) decomposition.
        #[arg(long, value_name = "A")]
        thick_hooks: Option<usize>,
        #[arg(long)]
        stairs: bool,
        /// Check the decomposition with these cut points.
        #[arg(long, value_delimiter = ',', requires = "window")]
        cuts: Option<Vec<usize>>,
        /// Size window a,b for --cuts.
        #[arg(long, value_delimiter = ',', num_args = 1, value_name = "A,B")]
        window: Option<Vec<usize>>,
        #[arg(long)]
        draw: bool,
    },
    /// ch^λ(α).
    Char {
        lambda: Partition,
        alpha: CycleType,
        #[arg(long, value_enum, default_value_t = CharMethod::Mn)]
        method: CharMethod,
        /// Print ch/d instead of ch.
        #[arg(long)]
        normalized: bool,
    },
    /// Ribbons of size j removable from λ.
    Ribbons {
        lambda: Partition,
        j: usize,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        draw: bool,
    },
    /// |RT(λ, α)| for α in the order given.
    Tableaux { lambda: Partition, alpha: CycleType },
    /// Exhaustive checks and bound sweeps.
    Verify {
        #[arg(value_enum)]
        target: Target,
        /// Largest size swept; defaults to the configured budget.
        #[arg(long)]
        n: Option<usize>,
        /// Balance constant for thm-balanced.
        #[arg(long, default_value = "2")]
        c: BigRational,
        /// Random orders per instance for order.
        #[arg(long, default_value_t = 3)]
        orders: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct ExcitedMode {
    #[arg(long)]
    list: bool,
    #[arg(long)]
    count: bool,
    #[arg(long)]
    sum: bool,
    /// S(λ,μ)/n^{↓k}.
    #[arg(long)]
    ratio: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SkewMethod {
    Hlf,
    Oracle,
    Det,
    Naruse,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CharMethod {
    Mn,
    Branching,
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Target {
    Orthogonality,
    ThmMain,
    ThmBalanced,
    ThmDiag,
    SkewBound,
    LineBounds,
    GeneralBound,
    Sharpness,
    Compression,
    Oracle,
    Branching,
    Order,
}

impl Target {
    fn kind(self) -> SweepKind {
        match self {
            Target::Orthogonality => SweepKind::Orthogonality,
            Target::ThmMain => SweepKind::ThmMain,
            Target::ThmBalanced => SweepKind::ThmBalanced,
            Target::ThmDiag => SweepKind::ThmDiag,
            Target::SkewBound => SweepKind::SkewBound,
            Target::LineBounds => SweepKind::LineBounds,
            Target::GeneralBound => SweepKind::GeneralBound,
            Target::Sharpness => SweepKind::Sharpness,
            Target::Compression => SweepKind::Compression,
            Target::Oracle => SweepKind::Oracle,
            Target::Branching | Target::Order => SweepKind::Branching,
        }
    }
}

/// Why a command did not succeed.
enum Failure {
    Usage(String),
    Violated(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs with the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let mut cfg = match &cli.config {
        Some(path) => match Config::load(path) {
            Ok(c) => c,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
        },
        None => Config::default(),
    };
    if let Some(j) = cli.jobs {
        if j == 0 {
            let _ = writeln!(err, "error: --jobs must be at least 1");
            return 2;
        }
        cfg.jobs = j;
    }
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    if let Some(s) = cli.style {
        cfg.render = s;
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return 2;
        }
    };
    let result = dispatch(cli.command, &cfg, cli.out.as_deref(), &pool, out);
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Violated(msg)) => {
            let _ = writeln!(err, "violation: {msg}");
            1
        }
    }
}

fn dispatch(
    command: Command,
    cfg: &Config,
    out_path: Option<&Path>,
    pool: &rayon::ThreadPool,
    out: &mut dyn Write,
) -> Outcome {
    let style = cfg.render;
    match command {
        Command::Dim { lambda } => writeln!(out, "{}", dim_hlf(&lambda))?,
        Command::SkewDim { lambda, mu, method } => {
            let shape = SkewShape::new(lambda.clone(), mu.clone())?;
            let value = match method {
                SkewMethod::Hlf if mu.is_empty() => dim_hlf(&lambda),
                SkewMethod::Hlf => {
                    return Err(Failure::Usage("the hook length formula needs an empty inner shape".into()))
                }
                SkewMethod::Oracle => skew_dim_oracle_bounded(&shape, cfg.oracle_cap)?,
                SkewMethod::Det => skew_dim_det(&shape),
                SkewMethod::Naruse => skew_dim_naruse(&lambda, &mu)?,
            };
            writeln!(out, "{value}")?;
        }
        Command::Excited { lambda, mu, mode, draw } => {
            if mode.sum {
                writeln!(out, "{}", excited_sum(&lambda, &mu)?)?;
            } else if mode.ratio {
                writeln!(out, "{}", naruse_ratio(&lambda, &mu)?)?;
            } else {
                let all = enumerate_excited(&lambda, &mu)?;
                if mode.list || draw {
                    for e in &all {
                        let cells: Vec<String> = e.cells().iter().map(|c| c.to_string()).collect();
                        writeln!(out, "{{{}}} H = {}", cells.join(","), e.hook_product(&lambda))?;
                        if draw {
                            writeln!(out, "{}", render::render_excited(&lambda, e, style))?;
                        }
                    }
                } else {
                    writeln!(out, "{}", all.len())?;
                }
            }
        }
        Command::Decompose { lambda, thick_hooks, stairs, cuts, window, draw } => {
            if stairs {
                let s = stairs_decomposition(&lambda);
                for (i, line) in s.lines().iter().enumerate() {
                    writeln!(
                        out,
                        "{} {:?} diagonal {} length {} from {}",
                        i + 1,
                        line.orientation,
                        line.diagonal,
                        line.length,
                        line.anchor
                    )?;
                }
                writeln!(out, "q = {}, 2 delta = {}", s.len(), 2 * lambda.diagonal_length())?;
                if draw {
                    write!(out, "{}", render::render_stairs(&s))?;
                }
            } else {
                let d = match (thick_hooks, cuts, window.as_deref()) {
                    (Some(a), _, _) => build_thick_hook_decomposition(&lambda, a)?,
                    (None, Some(cuts), Some(&[a, b])) => ThickHookDecomposition::from_cuts(&lambda, cuts, a, b),
                    _ => return Err(Failure::Usage("--window takes two sizes a,b".into())),
                };
                let (a, b) = (d.a, d.b);
                let cuts: Vec<String> = d.cuts().iter().map(|c| c.to_string()).collect();
                let sizes: Vec<String> = d.sizes().iter().map(|c| c.to_string()).collect();
                writeln!(out, "cuts: {}", cuts.join(","))?;
                writeln!(out, "sizes: {}", sizes.join(","))?;
                match validate_decomposition(&d) {
                    Ok(()) => writeln!(out, "valid ({a},{b})")?,
                    Err(defect) => writeln!(out, "invalid: {defect}")?,
                }
                if draw {
                    write!(out, "{}", render::render_thick_hooks(&d))?;
                }
            }
        }
        Command::Char { lambda, alpha, method, normalized } => {
            let value: CharacterValue = match method {
                CharMethod::Mn => character_mn(&lambda, &alpha)?,
                CharMethod::Branching => character_branching(&lambda, &alpha)?,
            };
            if normalized {
                writeln!(out, "{}", value.normalized())?;
            } else {
                writeln!(out, "{}", value.value)?;
            }
        }
        Command::Ribbons { lambda, j, list, draw } => {
            let ribbons = removable_ribbons(&lambda, j);
            if list || draw {
                for r in &ribbons {
                    writeln!(out, "height {} leaves {}", r.height(), r.remainder())?;
                    if draw {
                        writeln!(out, "{}", render::render_ribbon(&lambda, r, style))?;
                    }
                }
            } else {
                writeln!(out, "{}", ribbons.len())?;
            }
        }
        Command::Tableaux { lambda, alpha } => writeln!(out, "{}", count_ribbon_tableaux(&lambda, &alpha)?)?,
        Command::Verify { target, n, c, orders, seed } => {
            let n = n.unwrap_or_else(|| cfg.budgets.cap(target.kind()));
            cfg.budgets.check(target.kind(), n)?;
            let seed = seed.unwrap_or(cfg.seed);
            let computed = pool.install(|| compute(target, n, &c, orders, seed))?;
            let default_path = cfg.out_dir.as_ref().map(|dir| {
                let ext = match cfg.format {
                    Format::Csv => "csv",
                    Format::Json => "json",
                };
                let name = target.to_possible_value().map_or("verify".into(), |v| v.get_name().to_string());
                dir.join(format!("{name}.{ext}"))
            });
            let path = out_path.map(Path::to_path_buf).or(default_path);
            report(computed, cfg.format, path.as_deref(), out)?;
        }
    }
    Ok(())
}

enum Computed {
    Sweep(SweepReport),
    Check(CheckReport),
}

fn compute(target: Target, n: usize, c: &BigRational, orders: usize, seed: u64) -> crate::Result<Computed> {
    Ok(match target {
        Target::ThmMain => Computed::Sweep(harness::sweep_thm_main(n)?),
        Target::ThmBalanced => Computed::Sweep(harness::sweep_thm_balanced(n, c)?),
        Target::SkewBound => Computed::Sweep(harness::sweep_skew_bound(n)?),
        Target::ThmDiag => Computed::Sweep(harness::sweep_thm_diag(n)?),
        Target::LineBounds => Computed::Sweep(harness::sweep_line_bounds(n)?),
        Target::GeneralBound => Computed::Sweep(harness::sweep_general_bound(n)?),
        Target::Compression => Computed::Sweep(harness::sweep_compression(n)?),
        Target::Sharpness => Computed::Sweep(harness::sweep_sharpness(n)?.to_sweep()),
        Target::Orthogonality => Computed::Check(harness::verify_orthogonality(n)?),
        Target::Oracle => Computed::Check(harness::check_oracle_equivalence(n)?),
        Target::Branching => Computed::Check(harness::check_branching(n)?),
        Target::Order => Computed::Check(harness::check_order_invariance(n, orders, seed)?),
    })
}

fn report(computed: Computed, format: Format, path: Option<&Path>, out: &mut dyn Write) -> Outcome {
    match computed {
        Computed::Sweep(report) => {
            emit(path, out, |w| match format {
                Format::Csv => harness::write_csv(&report, w),
                Format::Json => harness::write_json(&report, w),
            })?;
            summarize(&report, path.is_some(), out)
        }
        Computed::Check(report) => {
            emit(path, out, |w| match format {
                Format::Csv => write_mismatch_csv(&report.mismatches, w),
                Format::Json => harness::write_json(&report, w),
            })?;
            if path.is_some() {
                writeln!(out, "{}: {} checked, {} mismatches", report.check, report.checked, report.mismatches.len())?;
            }
            match report.mismatches.first() {
                None => Ok(()),
                Some(m) => Err(Failure::Violated(format!(
                    "{}: {} mismatches, first {} {}: {}",
                    report.check,
                    report.mismatches.len(),
                    m.lambda,
                    m.other,
                    m.detail
                ))),
            }
        }
    }
}

fn emit(
    path: Option<&Path>,
    out: &mut dyn Write,
    write: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> io::Result<()> {
    match path {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)?;
            }
            let mut w = BufWriter::new(File::create(p)?);
            write(&mut w)?;
            w.flush()
        }
        None => write(out),
    }
}

fn write_mismatch_csv(rows: &[Mismatch], w: &mut dyn Write) -> io::Result<()> {
    let mut csv = csv::Writer::from_writer(w);
    csv.write_record(["n", "lambda", "other", "detail"])?;
    for m in rows {
        csv.write_record([m.n.to_string(), m.lambda.clone(), m.other.clone(), m.detail.clone()])?;
    }
    csv.flush()
}

/// Fails on any asserted record that does not hold, or on an infinite
/// implied constant anywhere.
fn summarize(report: &SweepReport, to_file: bool, out: &mut dyn Write) -> Outcome {
    let s = &report.summary;
    if to_file {
        write!(
            out,
            "{}: {} records, {} satisfied, {} reported only",
            report.sweep, s.count, s.satisfied, s.reported_only
        )?;
        if let Some(c) = s.max_implied_constant_approx {
            write!(out, ", max implied constant ~{c:.4} at {}", s.argmax.as_deref().unwrap_or("-"))?;
        }
        writeln!(out)?;
    }
    let failed: Vec<_> = report
        .records
        .iter()
        .filter(|r| (!r.satisfied && !r.reported_only) || !r.implied_constant.is_finite())
        .collect();
    match failed.first() {
        None => Ok(()),
        Some(r) => Err(Failure::Violated(format!(
            "{}: {} failing records, first {} {}",
            report.sweep,
            failed.len(),
            r.lambda,
            r.alpha_or_mu
        ))),
    }
}
