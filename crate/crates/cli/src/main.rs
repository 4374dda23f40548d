//! Command line front end: enumeration streams, X-ray queries, the
//! bijection maps, reconstruction, and the invariant suite.
//!
//! Exit codes: 0 success, 1 failed verification, 2 usage error, 3 domain
//! error (stderr then carries the stable error tag, e.g. `ColSum: ...`).

use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use asm_xray::bijection::{inverse_a, map_a, map_m, shadow_path};
use asm_xray::enumerate::{all_asms, all_dsasms, all_dyck_paths, determined_asms, xray_histogram};
use asm_xray::reconstruct::find_asms_with_xray;
use asm_xray::{verify, Asm, DyckPath, RenderStyle, XRay};

#[derive(Parser)]
#[command(
    name = "asm-xray",
    version,
    about = "Alternating sign matrices, antidiagonal X-rays, and their Dyck path bijection"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every object of one size as JSON lines, or just count them
    Enumerate {
        #[arg(value_enum)]
        kind: Kind,
        /// Object size (matrix side length / path semilength)
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Raise the size cap; enumeration cost grows steeply with n
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
    /// Read matrix JSON on stdin and print its antidiagonal X-ray
    Xray,
    /// Apply a bijection map to the object on stdin
    Map {
        #[arg(value_enum)]
        which: WhichMap,
        /// Print result matrices as text grids instead of JSON
        #[arg(long, value_enum)]
        style: Option<Style>,
    },
    /// Find all matrices casting the given X-ray
    Reconstruct {
        /// Slash-separated sums, e.g. 0/2/-1/2/0
        xray: String,
        /// Report every match (the default)
        #[arg(long, conflicts_with = "limit")]
        all: bool,
        /// Stop after this many matches
        #[arg(long)]
        limit: Option<usize>,
        /// Print matches as text grids instead of JSON
        #[arg(long, value_enum)]
        style: Option<Style>,
    },
    /// X-ray census of one size as CSV (columns xray,count)
    Histogram {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
    /// Run the exhaustive invariant suite for one size and print the census
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// Alternating sign matrices
    Asm,
    /// Diagonally symmetric alternating sign matrices
    Dsasm,
    /// Dyck paths
    Dyck,
    /// Matrices uniquely determined by their X-ray
    Determined,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Count,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichMap {
    /// Dyck path (text) to its determined matrix
    A,
    /// Matrix to the Dyck path it determines, when it does
    InverseA,
    /// Diagonally symmetric matrix to its X-ray twin
    M,
    /// Matrix to its shadow path
    Shadow,
}

#[derive(Clone, Copy, ValueEnum)]
enum Style {
    Signs,
    Integers,
}

impl From<Style> for RenderStyle {
    fn from(s: Style) -> Self {
        match s {
            Style::Signs => RenderStyle::Signs,
            Style::Integers => RenderStyle::Integers,
        }
    }
}

enum Failure {
    Usage(String),
    Domain { name: &'static str, message: String },
}

fn domain(name: &'static str, err: impl std::fmt::Display) -> Failure {
    Failure::Domain { name, message: err.to_string() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain { name, message }) => {
            eprintln!("{name}: {message}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Enumerate { kind, n, format, max_n } => {
            check_size(n, max_n)?;
            cmd_enumerate(kind, n, format);
        }
        Command::Xray => {
            let a = read_matrix()?;
            println!("{}", a.xray());
        }
        Command::Map { which, style } => cmd_map(which, style)?,
        Command::Reconstruct { xray, all: _, limit, style } => {
            let x: XRay = xray.parse().map_err(|e: asm_xray::XRayError| domain(e.name(), e))?;
            let found = find_asms_with_xray(&x, limit);
            print_matrices(&found, style);
        }
        Command::Histogram { n, max_n } => {
            check_size(n, max_n)?;
            print!("{}", xray_histogram(n).to_csv());
        }
        Command::Verify { n, max_n } => {
            check_size(n, max_n)?;
            let v = verify::run(n);
            println!(
                "{}",
                serde_json::to_string(&v.report).expect("census serialization cannot fail")
            );
            if !v.passed() {
                for f in &v.failures {
                    eprintln!("check failed: {f}");
                }
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn check_size(n: usize, max_n: usize) -> Result<(), Failure> {
    if n < 1 || n > max_n {
        return Err(Failure::Usage(format!(
            "n must be between 1 and {max_n} (raise the cap with --max-n)"
        )));
    }
    Ok(())
}

fn cmd_enumerate(kind: Kind, n: usize, format: Format) {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let items: Box<dyn Iterator<Item = String>> = match kind {
        Kind::Asm => Box::new(all_asms(n).map(|a| a.to_json_string())),
        Kind::Dsasm => Box::new(all_dsasms(n).map(|a| a.to_json_string())),
        Kind::Determined => Box::new(determined_asms(n).into_iter().map(|a| a.to_json_string())),
        Kind::Dyck => Box::new(all_dyck_paths(n).map(|p| {
            serde_json::to_string(&p.to_string()).expect("string serialization cannot fail")
        })),
    };
    match format {
        Format::Count => {
            writeln!(out, "{}", items.count()).expect("stdout write failed");
        }
        Format::Json => {
            for line in items {
                writeln!(out, "{line}").expect("stdout write failed");
            }
        }
    }
    out.flush().expect("stdout flush failed");
}

fn cmd_map(which: WhichMap, style: Option<Style>) -> Result<(), Failure> {
    match which {
        WhichMap::A => {
            let input = read_stdin()?;
            let p: DyckPath = input
                .trim()
                .parse()
                .map_err(|e: asm_xray::DyckPathError| domain(e.name(), e))?;
            print_matrices(&[map_a(&p)], style);
        }
        WhichMap::M => {
            let a = read_matrix()?;
            let b = map_m(&a).map_err(|e| domain(e.name(), e))?;
            print_matrices(&[b], style);
        }
        WhichMap::InverseA => {
            let a = read_matrix()?;
            let p = inverse_a(&a).map_err(|e| domain(e.name(), e))?;
            println!("{p}");
        }
        WhichMap::Shadow => {
            let a = read_matrix()?;
            let p = shadow_path(&a).map_err(|e| domain(e.name(), e))?;
            println!("{p}");
        }
    }
    Ok(())
}

fn print_matrices(matrices: &[Asm], style: Option<Style>) {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for (i, a) in matrices.iter().enumerate() {
        match style {
            None => writeln!(out, "{}", a.to_json_string()),
            Some(s) => {
                if i > 0 {
                    writeln!(out).and_then(|()| writeln!(out, "{}", a.render(s.into())))
                } else {
                    writeln!(out, "{}", a.render(s.into()))
                }
            }
        }
        .expect("stdout write failed");
    }
    out.flush().expect("stdout flush failed");
}

fn read_stdin() -> Result<String, Failure> {
    let mut buf = String::new();
    io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| domain("ParseError", format!("cannot read stdin: {e}")))?;
    Ok(buf)
}

fn read_matrix() -> Result<Asm, Failure> {
    let input = read_stdin()?;
    Asm::from_json_str(input.trim()).map_err(|e| domain(e.name(), e))
}
