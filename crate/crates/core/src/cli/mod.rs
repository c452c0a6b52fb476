//! The `ksr` command line. Every command is batch: it reads its inputs,
//! prints a result (plain text, CSV or a JSON [`Report`]) and exits with a
//! stable code.

pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::density::{
    angle_f64, approximate_vector, approximate_vector_stereo, orbit, ApproxConfig, ApproxTarget, GeneratorSet,
    DEFAULT_BUDGET,
};
use crate::error::{Error, Result};
use crate::exact::{parse_rat, Quad};
use crate::ks::{self, build_graph, bundled, nullify, search_coloring_with, snap_vectors, BranchOrder, Mode, Verdict};
use crate::sphere::{stereo_inv, Color, Direction, SpherePoint};
use crate::{Rat, VectorSet};
pub use report::{InputDigest, OrbitRow, PointRecord, Report, ReportResult, StatsRecord, TriadRecord, SCHEMA_VERSION};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const UNCOLORABLE: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const BUDGET: i32 = 3;
    pub const NOT_CERTIFIED: i32 = 4;
}

#[derive(Parser, Debug)]
#[command(name = "ksr", version, about = "Rational sphere points, z-parity colorings and Kochen-Specker sets")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ColorArg {
    Yes,
    No,
}

impl From<ColorArg> for Color {
    fn from(c: ColorArg) -> Self {
        match c {
            ColorArg::Yes => Color::Yes,
            ColorArg::No => Color::No,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Primary,
    Alternate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// z-parity color of the integer direction (x, y, z).
    Color {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
        /// Print a JSON report instead of one line of text.
        #[arg(long)]
        json: bool,
    },
    /// Certified rational approximation of a direction by a point of the
    /// requested color.
    Approx {
        /// Target center `a,b,c` (rationals `p` or `p/q`).
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        /// Enclosure radius of the target; 0 means the target is exact and
        /// is normalized if it is not a unit vector.
        #[arg(long, default_value = "0")]
        radius: String,
        #[arg(long)]
        eps: String,
        #[arg(long, value_enum, default_value = "yes")]
        color: ColorArg,
        /// Maximum generator count of the witness word.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Stereographic grid search instead; no rotation witness.
        #[arg(long)]
        fast: bool,
    },
    /// Colorability of a vector-set file (`@peres33`, `@axes` and
    /// `@two_triads` name the bundled sets).
    KsCheck {
        file: String,
        #[arg(long, default_value = "triads+pairs")]
        mode: String,
        /// Maximum number of branch decisions.
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        #[arg(long, value_enum, default_value = "primary")]
        order: OrderArg,
    },
    /// Replace every triad of a vector set by a rational triad within eps.
    Nullify {
        file: String,
        #[arg(long, default_value = "1/100")]
        eps: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Orbit of the north pole under the generators, up to a word length.
    Orbit {
        #[arg(long = "gen", default_value = "xz")]
        generators: String,
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Colored point cloud: a vector set snapped to rational points, or a
    /// stereographic grid.
    Export {
        /// Vector-set file to snap.
        #[arg(conflicts_with = "stereo_grid", required_unless_present = "stereo_grid")]
        file: Option<String>,
        /// Inverse projections of the grid `{-N..N}/N` squared.
        #[arg(long)]
        stereo_grid: Option<u32>,
        #[arg(long, default_value = "1/100")]
        eps: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::IterationBudgetExceeded { .. } | Error::BudgetExceeded { .. } => exit::BUDGET,
        Error::NotCertified => exit::NOT_CERTIFIED,
        _ => exit::INPUT,
    }
}

/// Runs one command with `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::INPUT } else { exit::OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let command: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let start = Instant::now();
    match execute(cli.cmd, &command, start, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn report(command: &[String], inputs: Vec<InputDigest>, start: Instant, result: ReportResult) -> Report {
    Report {
        schema: SCHEMA_VERSION,
        version: env!("CARGO_PKG_VERSION").to_string(),
        command: command.to_vec(),
        inputs,
        elapsed_ms: start.elapsed().as_millis() as u64,
        result,
    }
}

fn emit(out: &mut dyn Write, r: &Report) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, r).map_err(|e| Error::Parse(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.trim().parse().map_err(|_| Error::Parse(format!("malformed integer `{s}`")))
}

/// Reads a vector-set file or a bundled `@name`.
fn load_set(name: &str) -> Result<(VectorSet, InputDigest)> {
    let (text, digest) = match name.strip_prefix('@') {
        Some(b) => {
            let b = bundled::by_name(b).ok_or_else(|| Error::Parse(format!("no bundled set named `{b}`")))?;
            (b.text.to_string(), b.sha256.to_string())
        }
        None => {
            let bytes = std::fs::read(name)?;
            let digest = bundled::sha256_hex(&bytes);
            let text = String::from_utf8(bytes).map_err(|_| Error::Parse(format!("{name} is not UTF-8")))?;
            (text, digest)
        }
    };
    Ok((ks::parse_vector_set(&text)?, InputDigest { name: name.to_string(), sha256: digest }))
}

fn execute(cmd: Command, command: &[String], start: Instant, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Color { x, y, z, json } => {
            let p = SpherePoint::from_direction(Direction::new(parse_int(&x)?, parse_int(&y)?, parse_int(&z)?)?)?;
            if json {
                emit(out, &report(command, vec![], start, ReportResult::Color { point: PointRecord::new(&p) }))?;
            } else {
                writeln!(out, "{} {} n={}", p.color(), p.direction(), p.n())?;
            }
            Ok(exit::OK)
        }
        Command::Approx { target, radius, eps, color, budget, fast } => {
            let parts: Vec<&str> = target.split(',').collect();
            let [a, b, c] = parts[..] else {
                return Err(Error::Parse(format!("target `{target}` must have three components a,b,c")));
            };
            let center = [parse_rat(a)?, parse_rat(b)?, parse_rat(c)?];
            let radius = parse_rat(&radius)?;
            let eps = parse_rat(&eps)?;
            let t = make_target(&center, &radius, &eps)?;
            let color: Color = color.into();
            let (point, word, count) = if fast {
                let levels = budget.min(512) as u32;
                (approximate_vector_stereo(&t, color, levels)?.result, None, None)
            } else {
                let w = approximate_vector(&t, color, &ApproxConfig::with_budget(budget))?;
                let n = w.word.generator_count();
                (w.result, Some(w.word.to_string()), Some(n))
            };
            let result = ReportResult::Approx {
                target: center.map(|r| report::rat_string(&r)),
                radius: report::rat_string(&radius),
                eps: report::rat_string(&eps),
                requested: color,
                angle_estimate: angle_f64(&point, &t),
                point: PointRecord::new(&point),
                word,
                generator_count: count,
                certified_angle_bound: report::rat_string(t.eps()),
            };
            emit(out, &report(command, vec![], start, result))?;
            Ok(exit::OK)
        }
        Command::KsCheck { file, mode, budget, order } => {
            let mode: Mode = mode.parse()?;
            let order = match order {
                OrderArg::Primary => BranchOrder::Primary,
                OrderArg::Alternate => BranchOrder::Alternate,
            };
            let (vs, digest) = load_set(&file)?;
            let g = build_graph(&vs)?;
            let r = search_coloring_with(&g, mode, budget, order)?;
            let (colorable, coloring) = match &r.verdict {
                Verdict::Colorable(c) => (true, Some(c.colors().to_vec())),
                Verdict::Uncolorable => (false, None),
            };
            let result = ReportResult::KsCheck {
                field: vs.d(),
                vectors: vs.len(),
                edges: g.edges().len(),
                triads: g.triads().len(),
                mode,
                order,
                colorable,
                coloring,
                stats: StatsRecord::from(&r.stats),
            };
            emit(out, &report(command, vec![digest], start, result))?;
            Ok(if colorable { exit::OK } else { exit::UNCOLORABLE })
        }
        Command::Nullify { file, eps, budget } => {
            let eps = parse_rat(&eps)?;
            let (vs, digest) = load_set(&file)?;
            let r = nullify(&vs, &eps, &ApproxConfig::with_budget(budget))?;
            let triads = r
                .outcomes
                .iter()
                .map(|o| TriadRecord {
                    nodes: o.triad.map(|i| i + 1),
                    members: o.approximant.as_ref().map(|a| a.triad.members().map(PointRecord::new)),
                    words: o.approximant.as_ref().map(|a| a.witnesses.clone().map(|w| w.word.to_string())),
                    coloring: o.coloring,
                    error: o.error.clone(),
                })
                .collect();
            let clean = r.is_clean();
            let result = ReportResult::Nullify {
                field: vs.d(),
                eps: report::rat_string(&eps),
                triads,
                complete: r.complete,
                violations: r.violations,
                global_consistent: r.global_consistent,
                clean,
            };
            emit(out, &report(command, vec![digest], start, result))?;
            Ok(if clean {
                exit::OK
            } else if !r.complete {
                exit::BUDGET
            } else {
                exit::UNCOLORABLE
            })
        }
        Command::Orbit { generators, steps, format } => {
            let gens: GeneratorSet = generators.parse()?;
            let rows: Vec<OrbitRow> = orbit(steps, &gens)
                .iter()
                .map(|(w, p)| OrbitRow { word: w.to_string(), point: PointRecord::new(p) })
                .collect();
            write_points(out, command, vec![], start, format!("orbit {generators} {steps}"), rows, format)?;
            Ok(exit::OK)
        }
        Command::Export { file, stereo_grid, eps, budget, format } => {
            let (rows, inputs, source) = match (file, stereo_grid) {
                (Some(f), _) => {
                    let eps = parse_rat(&eps)?;
                    let (vs, digest) = load_set(&f)?;
                    let snapped = snap_vectors(&vs, &eps, &ApproxConfig::with_budget(budget))?;
                    let pts = snapped.sphere_points().expect("snapped sets are rational");
                    let rows = pts
                        .iter()
                        .enumerate()
                        .map(|(i, p)| OrbitRow { word: format!("v{}", i + 1), point: PointRecord::new(p) });
                    (rows.collect(), vec![digest], format!("snap {f}"))
                }
                (None, Some(n)) => (stereo_rows(n)?, vec![], format!("stereo-grid {n}")),
                (None, None) => return Err(Error::Parse("export needs a file or --stereo-grid".into())),
            };
            write_points(out, command, inputs, start, source, rows, format)?;
            Ok(exit::OK)
        }
    }
}

/// Exact target from command-line rationals. With radius 0 a non-unit
/// center is read as a direction and normalized by enclosure.
fn make_target(center: &[Rat; 3], radius: &Rat, eps: &Rat) -> Result<ApproxTarget> {
    if radius.is_zero() {
        if center.iter().all(Zero::is_zero) {
            return Err(Error::DegenerateInput("zero target direction"));
        }
        let q = center.clone().map(|r| Quad::from_rational(r, 1));
        return ApproxTarget::from_quad(&q, eps.clone());
    }
    if radius.is_negative() {
        return Err(Error::InvalidTarget("radius must be non-negative".into()));
    }
    ApproxTarget::new(center.clone(), radius.clone(), eps.clone())
}

fn stereo_rows(n: u32) -> Result<Vec<OrbitRow>> {
    if n == 0 {
        return Err(Error::Parse("--stereo-grid needs N >= 1".into()));
    }
    let n = i64::from(n);
    let mut rows = Vec::new();
    for i in -n..=n {
        for j in -n..=n {
            let (a, b) = (Rat::new(i.into(), n.into()), Rat::new(j.into(), n.into()));
            let p = stereo_inv(&a, &b);
            rows.push(OrbitRow { word: format!("{}/{} {}/{}", i, n, j, n), point: PointRecord::new(&p) });
        }
    }
    Ok(rows)
}

/// CSV header for point streams.
pub const CSV_HEADER: &str = "word,x,y,z,n,x_dec,y_dec,z_dec,color";

fn write_points(
    out: &mut dyn Write,
    command: &[String],
    inputs: Vec<InputDigest>,
    start: Instant,
    source: String,
    rows: Vec<OrbitRow>,
    format: Format,
) -> Result<()> {
    match format {
        Format::Json => emit(out, &report(command, inputs, start, ReportResult::Points { source, rows })),
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in rows {
                let p = &r.point;
                let [xd, yd, zd] = &p.decimal;
                writeln!(out, "{},{},{},{},{},{xd},{yd},{zd},{}", r.word, p.x, p.y, p.z, p.n, p.color)?;
            }
            Ok(())
        }
    }
}
