//! Command implementations behind the `hypchaos` binary.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use hypchaos::chaos_game::{run, RunConfig, Variant, DEFAULT_BURN_IN};
use hypchaos::io::csv::write_csv;
use hypchaos::io::raster::{rasterize, write_ppm};
use hypchaos::{parse_spec, systems, HypError, Hyperbolic, HyperbolicIfs, Interval};

mod report;
pub mod verify;

pub use report::{entropy_json, entropy_text};

#[derive(Debug, Parser)]
#[command(
    name = "hypchaos",
    version,
    about = "Chaos games and entropy on the hyperbolic plane"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a chaos game and write the point cloud and/or a density image.
    Generate(GenerateArgs),
    /// Report weak/strong entropies and the combined-distribution inequalities.
    Entropy(EntropyArgs),
    /// Check attractor membership, selection tallies and D-chaos decoupling.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// IFS spec JSON, or the name of a bundled spec (sierpinski.json, sierpinski_hpd2.json).
    #[arg(long)]
    pub spec: PathBuf,
    /// classical, hyperbolic or d-chaos
    #[arg(long)]
    pub variant: Variant,
    #[arg(long)]
    pub iterations: u64,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_BURN_IN)]
    pub burn_in: u64,
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Binary PPM output.
    #[arg(long)]
    pub image: Option<PathBuf>,
    #[arg(long, default_value_t = 512)]
    pub resolution: usize,
    /// e1min,e2min,e1max,e2max (default 0,0,1,1)
    #[arg(long, value_parser = parse_extent)]
    pub extent: Option<Interval>,
}

#[derive(Debug, Args)]
pub struct EntropyArgs {
    #[arg(long)]
    pub spec: PathBuf,
    /// Print a JSON object instead of text.
    #[arg(long)]
    pub json: bool,
    /// Report entropies in bits instead of nats.
    #[arg(long)]
    pub bits: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub spec: PathBuf,
    #[arg(long)]
    pub iterations: u64,
    #[arg(long)]
    pub seed: u64,
}

fn parse_extent(s: &str) -> Result<Interval, String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()?;
    let [a, b, c, d] = v[..] else {
        return Err("expected four comma-separated numbers".into());
    };
    let lo = Hyperbolic::new(a, b).map_err(|e| e.to_string())?;
    let hi = Hyperbolic::new(c, d).map_err(|e| e.to_string())?;
    Interval::new(lo, hi).map_err(|e| e.to_string())
}

/// Failure classes, mapped to exit codes 1 and 2.
#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Io(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Io(m) => m,
        }
    }
}

impl From<HypError> for CliError {
    fn from(e: HypError) -> Self {
        CliError::Validation(e.to_string())
    }
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |e| CliError::Io(format!("{}: {e}", path.display()))
}

/// Reads a spec from disk, falling back to the bundled specs by file name.
pub fn load_spec(path: &Path) -> Result<HyperbolicIfs, CliError> {
    let bytes = match fs::read(path) {
        Ok(b) => b,
        Err(e) if e.kind() == io::ErrorKind::NotFound => {
            let bundled = path
                .to_str()
                .and_then(systems::bundled_spec)
                .ok_or_else(|| CliError::Io(format!("{}: {e}", path.display())))?;
            bundled.as_bytes().to_vec()
        }
        Err(e) => return Err(io_err(path)(e)),
    };
    parse_spec(&bytes).map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))
}

pub fn generate(args: &GenerateArgs, out: &mut impl Write) -> Result<(), CliError> {
    let ifs = load_spec(&args.spec)?;
    let cfg = RunConfig::new(args.variant, args.seed, args.iterations).with_burn_in(args.burn_in);
    let cloud = run(&ifs, &cfg)?;

    if let Some(path) = &args.csv {
        let file = fs::File::create(path).map_err(io_err(path))?;
        write_csv(&cloud.points, file).map_err(io_err(path))?;
    }
    let mut overflow = None;
    if let Some(path) = &args.image {
        let extent = args.extent.unwrap_or(Interval::UNIT);
        let grid = rasterize(&cloud.points, args.resolution, &extent)?;
        let file = fs::File::create(path).map_err(io_err(path))?;
        write_ppm(&grid, file).map_err(io_err(path))?;
        overflow = Some(grid.overflow());
    }

    let stdout_err = |e: io::Error| CliError::Io(format!("stdout: {e}"));
    writeln!(
        out,
        "{} game: {} points recorded ({} iterations, burn-in {}, seed {})",
        cfg.variant,
        cloud.len(),
        cfg.iterations,
        cfg.burn_in,
        cfg.seed
    )
    .map_err(stdout_err)?;
    if let Some(o) = overflow {
        writeln!(out, "points outside extent: {o}").map_err(stdout_err)?;
    }
    Ok(())
}

pub fn entropy(args: &EntropyArgs, out: &mut impl Write) -> Result<(), CliError> {
    let ifs = load_spec(&args.spec)?;
    let text = if args.json {
        entropy_json(ifs.dist(), args.bits)
    } else {
        entropy_text(ifs.dist(), args.bits)
    };
    writeln!(out, "{text}").map_err(|e| CliError::Io(format!("stdout: {e}")))
}

/// Returns whether every check passed.
pub fn verify(args: &VerifyArgs, out: &mut impl Write) -> Result<bool, CliError> {
    let ifs = load_spec(&args.spec)?;
    let checks = verify::run_checks(&ifs, args.iterations, args.seed)?;
    for c in &checks {
        writeln!(out, "{c}").map_err(|e| CliError::Io(format!("stdout: {e}")))?;
    }
    Ok(checks.iter().all(|c| c.passed))
}

/// Executes a parsed command line and returns the process exit code.
pub fn execute(cli: &Cli) -> i32 {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match &cli.command {
        Command::Generate(a) => generate(a, &mut out),
        Command::Entropy(a) => entropy(a, &mut out),
        Command::Verify(a) => match verify(a, &mut out) {
            Ok(true) => Ok(()),
            Ok(false) => Err(CliError::Validation("verification failed".into())),
            Err(e) => Err(e),
        },
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}
