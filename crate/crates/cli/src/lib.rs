//! Command-line front end for `digimetric`.
//!
//! Exit codes: 0 success, 1 input or parse error, 2 semantic error
//! (containment, invalid shape size, mismatched images), 3 search budget
//! exceeded. `verify` exits 1 when any claim fails.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use digimetric::format::{parse_image, write_image, FormatError, ImageFormat};
use digimetric::shapes::ShapeFamily;
use digimetric::verify::{self, VerifyConfig};
use digimetric::{
    continuity_metric, eval_pseudometric, DigitalImage, ExtendedDistance, LpExponent,
    PseudometricSpec, DEFAULT_BUDGET,
};
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(
    name = "digimetric",
    version,
    about = "Metrics and pseudometrics on digital images"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Distance between two images.
    Dist(DistArgs),
    /// Write one of the named constructions to a file.
    Gen(GenArgs),
    /// Check the closed-form values of the named constructions.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MetricKind {
    /// Hausdorff metric over ℓp.
    Hausdorff,
    /// Hausdorff metric over shortest paths in --ambient.
    HausdorffPath,
    /// Difference of ℓp diameters.
    DiamDiff,
    /// Difference of path diameters, in --ambient or in each image itself.
    DiamDiffPath,
    /// Difference of Euler characteristics.
    EulerDiff,
    /// Metric of continuity over ℓp. Cannot be combined with other terms.
    Continuity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Grid,
    Coords,
}

impl From<FormatArg> for ImageFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Grid => ImageFormat::Grid,
            FormatArg::Coords => ImageFormat::Coords,
        }
    }
}

#[derive(Debug, Args)]
struct DistArgs {
    /// Term of the distance; repeat to sum several terms.
    #[arg(long = "metric", value_enum, required = true)]
    metrics: Vec<MetricKind>,
    /// Positive weight per --metric, in order. Defaults to 1 for every term.
    #[arg(long = "weight")]
    weights: Vec<f64>,
    /// Exponent of the ℓp metric.
    #[arg(long, default_value_t = 1.0)]
    p: f64,
    /// Adjacency parameter u of c_u.
    #[arg(long, default_value_t = 1)]
    u: usize,
    /// Input format; inferred from a .grid or .coords extension when omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Ambient image for path-based terms.
    #[arg(long)]
    ambient: Option<PathBuf>,
    /// Node budget for the continuity search.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    a: PathBuf,
    b: PathBuf,
}

#[derive(Debug, Args)]
struct GenArgs {
    /// Shape family.
    #[arg(value_parser = parse_family)]
    family: ShapeFamily,
    #[arg(long)]
    n: i64,
    #[arg(long, default_value_t = 1)]
    u: usize,
    #[arg(long, value_enum, default_value = "grid")]
    format: FormatArg,
    /// Output file. Pair families insert -A/-B or -X/-Y before the
    /// extension. Without it images go to stdout, separated by blank lines.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Square snake sizes to check (even). Repeatable.
    #[arg(long = "snake-n", default_values_t = [6, 4])]
    snake_n: Vec<i64>,
    /// Size of the rectangle / C-shape family.
    #[arg(long = "rect-n", default_value_t = 5)]
    rect_n: i64,
    /// Size of the square annulus.
    #[arg(long = "annulus-n", default_value_t = 2)]
    annulus_n: i64,
    /// Node budget for each continuity search.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Adds one to the expected value of the named claim.
    #[arg(long, hide = true)]
    corrupt: Option<String>,
}

fn parse_family(s: &str) -> Result<ShapeFamily, String> {
    s.parse().map_err(|e: digimetric::Error| e.to_string())
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: FormatError },
    #[error("{}: cannot infer the format from the extension; pass --format", .0.display())]
    UnknownFormat(PathBuf),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] digimetric::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. }
            | CliError::Parse { .. }
            | CliError::UnknownFormat(_)
            | CliError::Usage(_) => 1,
            CliError::Library(digimetric::Error::BudgetExceeded(_)) => 3,
            CliError::Library(_) => 2,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let result = match cli.command {
        Command::Dist(args) => dist(&args, out),
        Command::Gen(args) => gen(&args, out),
        Command::Verify(args) => return verify_claims(args, out, err),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn read_image(path: &Path, format: Option<FormatArg>, u: usize) -> Result<DigitalImage, CliError> {
    let format = match format {
        Some(f) => f.into(),
        None => match path.extension().and_then(|e| e.to_str()) {
            Some("grid") => ImageFormat::Grid,
            Some("coords") => ImageFormat::Coords,
            _ => return Err(CliError::UnknownFormat(path.to_owned())),
        },
    };
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_image(&text, format, u).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

fn dist(args: &DistArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let a = read_image(&args.a, args.format, args.u)?;
    let b = read_image(&args.b, args.format, args.u)?;
    let ambient = args
        .ambient
        .as_deref()
        .map(|p| read_image(p, args.format, args.u))
        .transpose()?;
    let p = LpExponent::new(args.p)?;

    if args.metrics.contains(&MetricKind::Continuity) {
        if args.metrics.len() > 1 || !args.weights.is_empty() {
            return Err(CliError::Usage(
                "continuity cannot be combined with other terms".into(),
            ));
        }
        let delta = continuity_metric(&a, &b, p.get(), args.budget)?;
        return print_value(out, ExtendedDistance::finite(delta.value));
    }

    let weights = match args.weights.len() {
        0 => vec![1.0; args.metrics.len()],
        n if n == args.metrics.len() => args.weights.clone(),
        n => {
            return Err(CliError::Usage(format!(
                "got {n} weights for {} metrics",
                args.metrics.len()
            )))
        }
    };
    let mut terms = Vec::with_capacity(args.metrics.len());
    for (&kind, w) in args.metrics.iter().zip(weights) {
        let term = match kind {
            MetricKind::Hausdorff => PseudometricSpec::HausdorffLp(p),
            MetricKind::HausdorffPath => PseudometricSpec::HausdorffPath(
                ambient
                    .as_ref()
                    .ok_or_else(|| CliError::Usage("hausdorff-path needs --ambient".into()))?,
            ),
            MetricKind::DiamDiff => PseudometricSpec::DiamDiffLp(p),
            MetricKind::DiamDiffPath => PseudometricSpec::DiamDiffPath(ambient.as_ref()),
            MetricKind::EulerDiff => PseudometricSpec::EulerDiff,
            MetricKind::Continuity => unreachable!("handled above"),
        };
        terms.push((w, term));
    }
    let spec = match terms.len() {
        1 if terms[0].0 == 1.0 => terms.pop().expect("one term").1,
        _ => PseudometricSpec::weighted_sum(terms)?,
    };
    print_value(out, eval_pseudometric(&spec, &a, &b)?)
}

fn print_value(out: &mut dyn Write, value: ExtendedDistance) -> Result<(), CliError> {
    writeln!(out, "{value}").map_err(|source| CliError::Io {
        path: "<stdout>".into(),
        source,
    })
}

fn labelled_path(base: &Path, label: &str, format: ImageFormat) -> PathBuf {
    if label.is_empty() {
        return base.to_owned();
    }
    let stem = base.file_stem().and_then(|s| s.to_str()).unwrap_or("image");
    let ext = base
        .extension()
        .and_then(|s| s.to_str())
        .unwrap_or(format.extension());
    base.with_file_name(format!("{stem}-{label}.{ext}"))
}

fn gen(args: &GenArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let format: ImageFormat = args.format.into();
    let images = args.family.generate(args.n, args.u)?;
    let stdout_err = |source| CliError::Io {
        path: "<stdout>".into(),
        source,
    };
    for (i, (label, image)) in images.iter().enumerate() {
        let text = write_image(image, format).map_err(|source| CliError::Parse {
            path: "<generated>".into(),
            source,
        })?;
        match &args.out {
            Some(base) => {
                let path = labelled_path(base, label, format);
                fs::write(&path, text).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?;
                writeln!(out, "{} {}", path.display(), image.len()).map_err(stdout_err)?;
            }
            None => {
                if i > 0 {
                    writeln!(out).map_err(stdout_err)?;
                }
                out.write_all(text.as_bytes()).map_err(stdout_err)?;
            }
        }
    }
    Ok(())
}

fn verify_claims(args: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let config = VerifyConfig {
        snake_sizes: args.snake_n,
        rect_n: args.rect_n,
        annulus_n: args.annulus_n,
        budget: args.budget,
        corrupt: args.corrupt,
    };
    match verify::run(&config) {
        Ok(report) => {
            let _ = write!(out, "{report}");
            if report.all_passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let e = CliError::from(e);
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
