use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use ratgenus::dsl::{parse, run, ReportFormat, RunOptions, SpecFile};
use ratgenus::value::{parse_rational, Rational};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Evaluate rational-genus spec files and run the verification suites.
#[derive(Debug, Parser)]
#[command(version, about)]
struct Args {
    /// Spec file; omit to run only the suites named with --suite.
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    report: Format,
    /// Threshold used by the catalog suite, e.g. 1/402 or 1/50.
    #[arg(long, default_value = "1/402", value_parser = threshold)]
    threshold: Rational,
    /// Extra suite to run: constants, catalog, families (also `lemma34`), bounds.
    #[arg(long = "suite")]
    suites: Vec<String>,
    #[arg(long)]
    jobs: Option<usize>,
    /// Working precision of the interval certifier, in bits.
    #[arg(long, default_value_t = ratgenus::certify::DEFAULT_PRECISION)]
    precision: u32,
    /// Also write the report here.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn threshold(s: &str) -> Result<Rational, String> {
    match parse_rational(s) {
        Some(r) if r > Rational::from_integer(0) => Ok(r),
        _ => Err(format!("`{s}` is not a positive rational like 1/402")),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let file = match &args.file {
        Some(path) => {
            let src = match std::fs::read_to_string(path) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            };
            match parse(&src) {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("{}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
        }
        None => SpecFile::default(),
    };
    let opts = RunOptions { threshold: args.threshold, precision: args.precision, jobs: args.jobs, suites: args.suites };
    let report = run(&file, &opts);
    let format = match args.report {
        Format::Text => ReportFormat::Text,
        Format::Json => ReportFormat::Json,
    };
    let out = report.render(format);
    print!("{out}");
    if let Some(path) = &args.output {
        if let Err(e) = std::fs::write(path, &out) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(report.exit_code() as u8)
}
