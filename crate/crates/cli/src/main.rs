//! `arrangement-lab`: construct, analyze, verify and export hyperplane
//! arrangements.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 invalid input.

mod range;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use arrangement_lab::arrangement::{check_simple, CellSignature};
use arrangement_lab::constructions::ConstructionSpec;
use arrangement_lab::statistics::{analyze, default_grid, run_suite, PropId, RandomSuite};
use arrangement_lab::{export, Arrangement};
use clap::{Parser, Subcommand, ValueEnum};

use crate::range::ParamRange;

const THREADS_ENV: &str = "ARRANGEMENT_LAB_THREADS";

#[derive(Parser, Debug)]
#[command(name = "arrangement-lab", version, about = "Exact bounded-cell census of simple hyperplane arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build one of the explicit families and write it as JSON.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(short = 'd', long = "dim")]
        d: Option<usize>,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a seeded random simple arrangement with integer coefficients.
    Random {
        #[arg(short = 'd', long = "dim")]
        d: usize,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Coefficients are drawn from [-bound, bound].
        #[arg(long, default_value_t = 100)]
        bound: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate bounded cells and write the census report.
    Analyze {
        input: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
        /// Include one record per bounded cell.
        #[arg(long)]
        cells: bool,
    },
    /// Check closed forms and bounds against enumeration.
    Verify {
        /// P1..P7, H, S or all.
        #[arg(long, default_value = "all")]
        prop: String,
        /// Parameter grid such as "n=4..12" or "d=2..6,n=8".
        #[arg(long)]
        range: Option<String>,
        /// JSON file overriding the random instance list.
        #[arg(long)]
        seeds: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a planar arrangement as SVG or one cell of a spatial one as OFF.
    Export {
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Sign vector of the bounded cell to export (OFF only), e.g. "+-++-+".
        #[arg(long)]
        cell: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Cyclic,
    Ao2,
    Ao3,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Svg,
    Off,
}

/// Verification ran but something failed; every other error is invalid input.
#[derive(Debug)]
struct VerificationFailed;

impl std::fmt::Display for VerificationFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("verification failed")
    }
}

impl std::error::Error for VerificationFailed {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = std::panic::catch_unwind(|| configure_threads().and_then(|()| run(cli)));
    match outcome {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(e)) if e.is::<VerificationFailed>() => ExitCode::from(1),
        Ok(Err(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(_) => ExitCode::from(2),
    }
}

fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var(THREADS_ENV) else { return Ok(()) };
    let threads: usize = value.trim().parse().with_context(|| format!("{THREADS_ENV} must be a positive integer"))?;
    if threads == 0 {
        bail!("{THREADS_ENV} must be a positive integer");
    }
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().context("configuring thread pool")
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Construct { family, d, n, out } => {
            let spec = match family {
                Family::Cyclic => ConstructionSpec::CyclicStar { d: d.context("--family cyclic needs -d")?, n },
                Family::Ao2 => ConstructionSpec::Ao2 { n },
                Family::Ao3 => ConstructionSpec::Ao3 { n },
            };
            if let (Some(d), Family::Ao2 | Family::Ao3) = (d, family) {
                if d != spec.dim() {
                    bail!("family {} has dimension {}, not {d}", spec.family_name(), spec.dim());
                }
            }
            let arr = spec.build()?;
            let eps = spec.epsilon().map_or_else(|| "none".to_string(), |e| e.to_string());
            println!("{spec}: n={} d={} epsilon={eps}", arr.len(), arr.dim());
            emit(out.as_deref(), &(arr.to_json() + "\n"))
        }
        Command::Random { d, n, seed, bound, out } => {
            let spec = ConstructionSpec::Random { d, n, seed, bound };
            let arr = spec.build()?;
            println!("{spec}: n={} d={} bound={bound}", arr.len(), arr.dim());
            emit(out.as_deref(), &(arr.to_json() + "\n"))
        }
        Command::Analyze { input, report, cells } => {
            let arr = load(&input)?;
            let analysis = analyze(&arr)?;
            let census = analysis.census(cells);
            let text = serde_json::to_string_pretty(&census)? + "\n";
            if report.is_some() {
                println!("I={} delta={} ({})", census.bounded_cells, census.delta, census.delta_decimal);
            }
            emit(report.as_deref(), &text)
        }
        Command::Verify { prop, range, seeds, out } => {
            let props: Vec<PropId> =
                if prop.eq_ignore_ascii_case("all") { PropId::ALL.to_vec() } else { vec![prop.parse()?] };
            let explicit = range.as_deref().map(ParamRange::parse).transpose()?.map(|r| r.grid());
            let grid: Vec<_> = props
                .iter()
                .flat_map(|&p| explicit.clone().unwrap_or_else(|| default_grid(p)).into_iter().map(move |q| (p, q)))
                .collect();
            let suite = match seeds {
                Some(path) => serde_json::from_str::<RandomSuite>(&read(&path)?)
                    .with_context(|| format!("parsing seeds file {}", path.display()))?,
                None => RandomSuite::default(),
            };
            let summary = run_suite(&grid, &suite)?;
            let text = serde_json::to_string_pretty(&summary)? + "\n";
            if out.is_some() {
                for r in &summary.results {
                    let params = [r.params.d.map(|d| format!("d={d}")), r.params.n.map(|n| format!("n={n}"))];
                    let params: Vec<String> = params.into_iter().flatten().collect();
                    println!("{} {} {}", r.prop, params.join(","), if r.passed() { "pass" } else { "FAIL" });
                    for note in &r.notes {
                        println!("    {note}");
                    }
                }
                println!("{} of {} passed", summary.passed, summary.total);
            }
            emit(out.as_deref(), &text)?;
            if summary.all_pass {
                Ok(())
            } else {
                Err(VerificationFailed.into())
            }
        }
        Command::Export { input, format, out, cell } => {
            let arr = load(&input)?;
            let text = match format {
                Format::Svg => {
                    if arr.dim() != 2 {
                        bail!("svg export needs a planar arrangement, input has dimension {}", arr.dim());
                    }
                    export::render_svg(&analyze(&arr)?)?
                }
                Format::Off => {
                    if arr.dim() != 3 {
                        bail!("off export needs a spatial arrangement, input has dimension {}", arr.dim());
                    }
                    let cell = cell.context("off export needs --cell SIGNATURE")?;
                    let signature = CellSignature::parse(&cell)
                        .filter(|s| s.signs().len() == arr.len())
                        .with_context(|| format!("{cell:?} is not a sign vector of length {}", arr.len()))?;
                    export::render_off(&analyze(&arr)?, &signature)?
                }
            };
            emit(out.as_deref(), &text)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Parses an arrangement file and rejects non-simple input with its witness.
fn load(path: &Path) -> Result<Arrangement> {
    let arr = Arrangement::from_json(&read(path)?).with_context(|| format!("loading {}", path.display()))?;
    if let Some(witness) = check_simple(&arr).witness {
        bail!("{} is not simple: {witness}", path.display());
    }
    Ok(arr)
}

/// Writes to `path` atomically (temp file in the same directory, then
/// rename), or to stdout when no path is given.
fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    let Some(path) = path else {
        std::io::stdout().write_all(text.as_bytes())?;
        return Ok(());
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).with_context(|| format!("writing {}", path.display()))?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}
