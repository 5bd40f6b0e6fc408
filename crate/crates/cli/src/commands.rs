use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use quasiorth::{
    random_orthogonal_binary_matrix, search_table, verify_quasi_inverse, FieldSpec,
    GeneratorConfig, QuasiBinaryMatrix, DEFAULT_ITERATIONS,
};

use crate::bench;
use crate::document::{Matrix, MatrixDocument};
use crate::error::CliError;
use crate::render::{self, Palette};

#[derive(Debug, Parser)]
#[command(
    name = "quasiorth",
    version,
    about = "Generate, invert, verify and export quasi-binary quasi-orthogonal matrices",
    after_help = "Exit status: 0 on success or PASS, 1 on verification FAIL, 2 on usage or input errors."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a random orthogonal binary matrix, optionally substituted
    Gen(GenArgs),
    /// Emit the quasi-inverse of a quasi-binary document
    Invert(InvertArgs),
    /// Check a document with the dense reference product
    Verify(VerifyArgs),
    /// List (n, k, rot) triplets for even n in a range
    Search(SearchArgs),
    /// Export a document as PBM (binary) or PPM (quasi-binary)
    Render(RenderArgs),
    /// Time support-set generation against dense matmul construction
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dense,
    Csv,
    Tsv,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    /// Seed for the ChaCha8 stream; drawn from the clock when omitted
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_ITERATIONS)]
    pub iterations: usize,
    /// Value substituted for 0 entries
    #[arg(long)]
    pub a: Option<u32>,
    /// Value substituted for 1 entries
    #[arg(long)]
    pub b: Option<u32>,
    /// Field degree
    #[arg(long)]
    pub m: Option<u32>,
    /// Irreducible polynomial with its leading bit, hex (0x19) or decimal
    #[arg(long, value_parser = parse_int)]
    pub poly: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InvertArgs {
    /// Input document, or - for stdin
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Input document, or - for stdin
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, default_value_t = 8)]
    pub min: usize,
    #[arg(long, default_value_t = 256)]
    pub max: usize,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Input document, or - for stdin
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Use the inverse palette (c blue, d yellow) for quasi-binary input
    #[arg(long)]
    pub inverse: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 20)]
    pub reps: usize,
    #[arg(long, default_value_t = DEFAULT_ITERATIONS)]
    pub iterations: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Accepts `0x`-prefixed hex or decimal.
pub fn parse_int(s: &str) -> Result<u32, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u32::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid integer `{s}`: {e}"))
}

/// Outcome of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    Fail,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::Fail => 1,
        }
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let io_err = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io_err)
    }
}

fn write_output(path: Option<&Path>, bytes: &[u8], stdout: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, bytes).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => stdout.write_all(bytes).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

fn load(path: &Path) -> Result<(MatrixDocument, Matrix), CliError> {
    let doc = MatrixDocument::parse(&read_input(path)?)?;
    let matrix = doc.to_matrix()?;
    Ok((doc, matrix))
}

pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<Status, CliError> {
    match cli.command {
        Command::Gen(args) => cmd_gen(&args, stdout),
        Command::Invert(args) => cmd_invert(&args, stdout),
        Command::Verify(args) => cmd_verify(&args, stdout),
        Command::Search(args) => cmd_search(&args, stdout),
        Command::Render(args) => cmd_render(&args, stdout),
        Command::Bench(args) => cmd_bench(&args, stdout),
    }
}

fn clock_seed() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_nanos() as u64)
        .unwrap_or(0)
}

pub fn cmd_gen(args: &GenArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let seed = args.seed.unwrap_or_else(clock_seed);
    let substitution = match (args.a, args.b, args.m, args.poly) {
        (None, None, None, None) => None,
        (Some(a), Some(b), Some(m), Some(poly)) => Some((a, b, m, poly)),
        _ => {
            return Err(CliError::Usage(
                "--a, --b, --m and --poly must be given together".into(),
            ))
        }
    };
    // validate the field before spending time on generation
    let field = substitution
        .map(|(_, _, m, poly)| FieldSpec::new(m, poly))
        .transpose()?;

    let cfg = GeneratorConfig::new(args.n, seed).with_iterations(args.iterations);
    let backbone = random_orthogonal_binary_matrix(&cfg)?;
    let matrix = match (substitution, field) {
        (Some((a, b, _, _)), Some(field)) => Matrix::Quasi(QuasiBinaryMatrix::substitute(
            backbone,
            field.element(a)?,
            field.element(b)?,
            field,
        )?),
        _ => Matrix::Binary(backbone),
    };
    let text = match args.format {
        Format::Json => MatrixDocument::from_matrix(&matrix, Some(seed)).emit(),
        Format::Dense => render::dense_text(&matrix, " "),
        Format::Csv => render::dense_text(&matrix, ","),
        Format::Tsv => render::dense_text(&matrix, "\t"),
    };
    write_output(args.output.as_deref(), text.as_bytes(), stdout)?;
    Ok(Status::Success)
}

pub fn cmd_invert(args: &InvertArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let (doc, matrix) = load(&args.input)?;
    let Matrix::Quasi(q) = matrix else {
        return Err(CliError::Usage(
            "invert needs a quasi-binary document; the inverse of a binary orthogonal matrix is its transpose".into(),
        ));
    };
    let inv = q.quasi_inverse()?;
    let text = MatrixDocument::quasi(&inv, doc.seed).emit();
    write_output(args.output.as_deref(), text.as_bytes(), stdout)?;
    Ok(Status::Success)
}

pub fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let (_, matrix) = load(&args.input)?;
    let (pass, line) = match &matrix {
        Matrix::Binary(p) => {
            let ok = p.to_dense().is_orthogonal();
            (ok, format!("P * P^T = I over GF(2), n = {}", p.n()))
        }
        Matrix::Quasi(q) => {
            let inv = q.quasi_inverse()?;
            let ok = verify_quasi_inverse(q, &inv)?;
            (
                ok,
                format!(
                    "P_{{a,b}} * (P_{{a,b}})^T_{{c,d}} = I over {}, n = {}, (a, b) = ({}, {}), (c, d) = ({}, {})",
                    q.field(),
                    q.n(),
                    q.a(),
                    q.b(),
                    inv.a(),
                    inv.b()
                ),
            )
        }
    };
    let verdict = if pass { "PASS" } else { "FAIL" };
    write_output(None, format!("{verdict}: {line}\n").as_bytes(), stdout)?;
    Ok(if pass { Status::Success } else { Status::Fail })
}

pub fn cmd_search(args: &SearchArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    if args.min > args.max {
        return Err(CliError::Usage(format!(
            "--min {} exceeds --max {}",
            args.min, args.max
        )));
    }
    let table = search_table(args.min, args.max);
    let text = match args.format {
        Format::Json => {
            let rows: Vec<String> = table
                .iter()
                .map(|t| format!("{{\"n\":{},\"k\":{},\"rot\":{}}}", t.n, t.k, t.rot))
                .collect();
            format!("[{}]\n", rows.join(","))
        }
        fmt => {
            let sep = match fmt {
                Format::Csv => ",",
                Format::Tsv => "\t",
                _ => " ",
            };
            table
                .iter()
                .map(|t| format!("{}{sep}{}{sep}{}\n", t.n, t.k, t.rot))
                .collect()
        }
    };
    write_output(args.output.as_deref(), text.as_bytes(), stdout)?;
    Ok(Status::Success)
}

pub fn cmd_render(args: &RenderArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let (_, matrix) = load(&args.input)?;
    let palette = if args.inverse {
        Palette::Inverse
    } else {
        Palette::Forward
    };
    write_output(
        args.output.as_deref(),
        &render::raster(&matrix, palette),
        stdout,
    )?;
    Ok(Status::Success)
}

pub fn cmd_bench(args: &BenchArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let report = bench::run(args.n, args.reps, args.iterations, args.seed)?;
    write_output(None, report.to_string().as_bytes(), stdout)?;
    Ok(Status::Success)
}
