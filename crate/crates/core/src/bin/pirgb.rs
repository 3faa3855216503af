use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pirgb::bench::{modulus_preset, run_bench, suite};
use pirgb::parse::parse_basis_text;
use pirgb::split_lift::{strong_gb_over_zn, strong_gb_over_zn_parallel};
use pirgb::verify::{default_degree, is_strong_gb};
use pirgb::{read_ideal_file, Engine, Error, GeneratorSet, IdealFile, MonomialOrder};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "pirgb", version, about = "Strong Gröbner bases over Z/nZ")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the minimal normalized strong Gröbner basis of an ideal file.
    Gb(GbArgs),
    /// Check a basis against an ideal up to a degree bound.
    Verify(VerifyArgs),
    /// Time the engines on the bundled systems.
    Bench(BenchArgs),
}

#[derive(Args)]
struct GbArgs {
    file: PathBuf,
    /// Factor the modulus by trial division first.
    #[arg(long, conflicts_with = "classic")]
    naive: bool,
    /// Run the full ring algorithm without splitting.
    #[arg(long)]
    classic: bool,
    /// Override the order given in the file.
    #[arg(long)]
    order: Option<MonomialOrder>,
    /// Print the split tree to stderr.
    #[arg(long)]
    trace: bool,
    /// Run independent split branches on separate threads.
    #[arg(long)]
    parallel: bool,
    /// Print modulus, vars and order lines before the basis.
    #[arg(long)]
    header: bool,
}

#[derive(Args)]
struct VerifyArgs {
    file: PathBuf,
    /// Basis to check: polynomial lines or a full ideal file.
    #[arg(long)]
    basis: PathBuf,
    /// Degree bound (default: two above the largest input degree).
    #[arg(long)]
    degree: Option<u32>,
}

#[derive(Args)]
struct BenchArgs {
    /// `all`, `small`, or one system name.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Preset name or an integer.
    #[arg(long, default_value = "squarefree-small")]
    modulus: String,
    /// Comma-separated engines to time.
    #[arg(long, value_delimiter = ',', default_value = "split,naive,classic")]
    engines: Vec<Engine>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gb(args) => gb(args),
        Command::Verify(args) => verify(args),
        Command::Bench(args) => bench(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("pirgb: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn load(path: &PathBuf) -> Result<IdealFile, String> {
    read_ideal_file(path).map_err(|e| match e {
        Error::Parse { .. } => format!("{}: {e}", path.display()),
        other => other.to_string(),
    })
}

fn gb(args: GbArgs) -> Result<ExitCode, String> {
    let mut file = load(&args.file)?;
    if let Some(order) = args.order {
        file.order = order;
        file.generators = file.generators.iter().map(|g| g.with_order(order)).collect();
    }
    let gens = GeneratorSet::from_file(&file).map_err(|e| e.to_string())?;
    let engine = if args.naive {
        Engine::Naive
    } else if args.classic {
        Engine::Classic
    } else {
        Engine::Split
    };

    let basis = if engine == Engine::Split {
        let (basis, tree) = if args.parallel {
            strong_gb_over_zn_parallel(&gens)
        } else {
            strong_gb_over_zn(&gens)
        }
        .map_err(|e| e.to_string())?;
        if args.trace {
            eprint!("{tree}");
        }
        basis
    } else {
        let basis = engine.run(&gens).map_err(|e| e.to_string())?;
        if args.trace {
            eprintln!("Z/{}: {engine}, basis size {}", gens.modulus(), basis.len());
        }
        basis
    };

    let mut out = std::io::stdout().lock();
    let text = if args.header {
        IdealFile::new(file.ring, file.vars.clone(), file.order, basis.elements().to_vec()).to_string()
    } else {
        basis.display(&file.vars).to_string()
    };
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())?;
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let file = load(&args.file)?;
    let text = std::fs::read_to_string(&args.basis).map_err(|e| format!("{}: {e}", args.basis.display()))?;
    let basis = parse_basis_text(&text, &file).map_err(|e| format!("{}: {e}", args.basis.display()))?;
    let degree = args.degree.unwrap_or_else(|| default_degree(&basis, &file.generators));
    match is_strong_gb(&basis, &file.generators, degree) {
        Ok(()) => {
            println!("ok: strong Gröbner basis up to degree {degree}");
            Ok(ExitCode::SUCCESS)
        }
        Err(failure) => {
            println!("not a strong Gröbner basis: {}", failure.reason());
            println!("counterexample: {}", failure.counterexample().display(&file.vars));
            Ok(ExitCode::from(EXIT_VERIFY_FAILED))
        }
    }
}

fn bench(args: BenchArgs) -> Result<ExitCode, String> {
    let systems = suite(&args.suite).map_err(|e| e.to_string())?;
    let modulus = modulus_preset(&args.modulus).map_err(|e| e.to_string())?;
    println!(
        "{:<10} {:>12} {:<8} {:>10} {:>6}",
        "system", "modulus", "engine", "seconds", "size"
    );
    for name in systems {
        // One system at a time so rows appear as they finish.
        for record in run_bench(&[name], modulus, &args.engines).map_err(|e| e.to_string())? {
            println!(
                "{:<10} {:>12} {:<8} {:>10.3} {:>6}",
                record.system,
                record.modulus,
                record.engine.name(),
                record.elapsed.as_secs_f64(),
                record.basis_size
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}
