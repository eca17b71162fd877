//! Command-line front end. Thin dispatch onto the library; exit codes are
//! a stable contract for scripts: 0 success/verified, 1 verification
//! failure, 2 input error, 3 internal invariant breach.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use revparity::bench::{pla_files_in, run_suite, Source};
use revparity::{
    complete_permutation, convert_irreversible, convert_reversible, count_parity_preserving,
    enumerate_parity_preserving, min_extra_bits, rd_generate, verify, write_csv, write_pla,
    write_report, write_table_pla, ConversionPlan, ConversionReport, ParityProfile, ParseOptions,
    ParsedPla, ReportFormat, TruthTable,
};

const EXIT_OK: u8 = 0;
const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_INPUT_ERROR: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "revparity",
    version,
    about = "Convert Boolean specifications into parity-preserving reversible specifications"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ParseFlags {
    /// Treat parse warnings (uncovered minterms, output don't-cares) as errors
    #[arg(long)]
    strict: bool,
    /// Raise the input-count cap for PLA files (default 24)
    #[arg(long = "max-n", value_name = "K")]
    max_n: Option<usize>,
}

impl ParseFlags {
    fn options(&self) -> ParseOptions {
        ParseOptions {
            strict: self.strict,
            max_inputs: self.max_n.unwrap_or(revparity::pla::DEFAULT_MAX_INPUTS),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the parity profile and the minimum extra bits for an input
    Analyze {
        /// PLA file or generator spec such as rd:8
        input: String,
        #[command(flatten)]
        parse: ParseFlags,
    },
    /// Convert an input into a parity-preserving reversible PLA
    Convert {
        /// PLA file or generator spec such as rd:8
        input: String,
        /// Write the converted PLA here instead of stdout
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
        /// Extend the result to a full permutation of the widened space
        #[arg(long)]
        complete: bool,
        /// Also write a conversion report ("-" for stdout)
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
        /// Report as CSV
        #[arg(long)]
        csv: bool,
        /// Report as key-value text (the default)
        #[arg(long, conflicts_with = "csv")]
        text: bool,
        #[command(flatten)]
        parse: ParseFlags,
    },
    /// Check that a square specification is reversible and parity-preserving
    Verify {
        /// PLA file or generator spec such as rd:8
        input: String,
        #[command(flatten)]
        parse: ParseFlags,
    },
    /// Print the exact number of n-variable parity-preserving reversible functions
    Count {
        n: usize,
        /// Cross-check against brute-force enumeration (n <= 3)
        #[arg(long)]
        oracle: bool,
    },
    /// Convert many inputs (files, directories, rd:N specs) and emit CSV
    Bench {
        /// PLA files, directories of .pla files, or generator specs
        sources: Vec<String>,
        /// Write the CSV here instead of stdout
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
        #[command(flatten)]
        parse: ParseFlags,
    },
    /// Write the input-weight function rdN_K as a plain PLA
    Rdgen {
        n: usize,
        /// Write the PLA here instead of stdout
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()))
}

fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Analyze { input, parse } => cmd_analyze(&input, &parse.options()),
        Command::Convert {
            input,
            output,
            complete,
            report,
            csv,
            text: _,
            parse,
        } => cmd_convert(&input, output, complete, report, csv, &parse.options()),
        Command::Verify { input, parse } => cmd_verify(&input, &parse.options()),
        Command::Count { n, oracle } => cmd_count(n, oracle),
        Command::Bench {
            sources,
            output,
            parse,
        } => cmd_bench(&sources, output, &parse.options()),
        Command::Rdgen { n, output } => cmd_rdgen(n, output),
    }
}

/// A loaded input: table plus, for files, which minterms were covered.
struct Input {
    name: String,
    table: TruthTable,
    parsed: Option<ParsedPla>,
}

fn load_input(spec: &str, options: &ParseOptions) -> Result<Input, String> {
    match Source::parse(spec) {
        Source::Generator { inputs } => {
            let table = rd_generate(inputs).map_err(|e| e.to_string())?;
            Ok(Input {
                name: revparity::rd_name(inputs),
                table,
                parsed: None,
            })
        }
        Source::Pla(path) => {
            let text =
                std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
            let parsed = revparity::parse_pla(&text, options)
                .map_err(|e| format!("{}: {e}", path.display()))?;
            for warning in &parsed.warnings {
                eprintln!("warning: {}: {warning}", path.display());
            }
            Ok(Input {
                name: Source::Pla(path).name(),
                table: parsed.table.clone(),
                parsed: Some(parsed),
            })
        }
    }
}

fn cmd_analyze(spec: &str, options: &ParseOptions) -> u8 {
    let input = match load_input(spec, options) {
        Ok(input) => input,
        Err(message) => {
            eprintln!("error: {message}");
            return EXIT_INPUT_ERROR;
        }
    };
    let table = &input.table;
    let profile = ParityProfile::of(table);
    let plan = ConversionPlan::from_profile(&profile);

    println!("function: {}", input.name);
    println!("inputs: {}", table.num_inputs());
    println!("outputs: {}", table.num_outputs());
    println!("rows: {}", table.row_count());
    println!("distinct output patterns: {}", profile.distinct_patterns());
    println!("largest parity class: {}", profile.max_class());
    println!("reversible: {}", table.is_reversible());
    match table.is_parity_preserving() {
        Ok(pp) => println!("parity_preserving: {pp}"),
        Err(_) => println!("parity_preserving: n/a (not square)"),
    }
    println!("minimum extra bits: {}", min_extra_bits(&profile));
    println!("planned garbage: {}", plan.garbage());
    println!("planned ancilla: {}", plan.ancilla());

    const GROUP_LISTING_LIMIT: usize = 64;
    if profile.distinct_patterns() <= GROUP_LISTING_LIMIT {
        println!("pattern  match  mismatch");
        for group in profile.groups() {
            println!(
                "{:<8} {:<6} {}",
                group.pattern().to_string(),
                group.match_count(),
                group.mismatch_count()
            );
        }
    } else {
        println!(
            "({} groups; listing suppressed)",
            profile.distinct_patterns()
        );
    }
    EXIT_OK
}

fn cmd_convert(
    spec: &str,
    output: Option<PathBuf>,
    complete: bool,
    report_path: Option<PathBuf>,
    csv: bool,
    options: &ParseOptions,
) -> u8 {
    let input = match load_input(spec, options) {
        Ok(input) => input,
        Err(message) => {
            eprintln!("error: {message}");
            return EXIT_INPUT_ERROR;
        }
    };
    let table = &input.table;

    let start = Instant::now();
    let mut converted = if table.is_reversible() {
        convert_reversible(table).expect("reversibility checked")
    } else {
        convert_irreversible(table)
    };
    if complete {
        converted = match complete_permutation(&converted) {
            Ok(completed) => completed,
            Err(e) => {
                eprintln!("internal error: {e}");
                return EXIT_INTERNAL;
            }
        };
    }
    let runtime_ms = start.elapsed().as_secs_f64() * 1e3;

    let verdict = verify(&converted);
    if !verdict.passed() {
        eprintln!("internal error: converted table failed verification: {verdict:?}");
        return EXIT_INTERNAL;
    }

    if let Err(e) = emit(output.as_deref(), &write_pla(&converted)) {
        eprintln!("error: {e}");
        return EXIT_INPUT_ERROR;
    }

    if let Some(path) = report_path {
        let report = ConversionReport::summarize(&input.name, table, &converted, runtime_ms);
        let format = if csv {
            ReportFormat::Csv
        } else {
            ReportFormat::Text
        };
        if let Err(e) = emit(Some(&path), &write_report(&report, format)) {
            eprintln!("error: {e}");
            return EXIT_INPUT_ERROR;
        }
    }
    EXIT_OK
}

fn cmd_verify(spec: &str, options: &ParseOptions) -> u8 {
    let input = match load_input(spec, options) {
        Ok(input) => input,
        Err(message) => {
            eprintln!("error: {message}");
            return EXIT_INPUT_ERROR;
        }
    };
    let table = &input.table;
    if !table.is_square() {
        eprintln!(
            "error: not square ({} inputs, {} outputs); nothing to verify",
            table.num_inputs(),
            table.num_outputs()
        );
        return EXIT_INPUT_ERROR;
    }

    // For files that cover only part of the minterm space (a partial
    // annotated specification), verify the listed rows only.
    let covered: Vec<bool> = match &input.parsed {
        Some(parsed) if !parsed.fully_covered() => {
            eprintln!(
                "note: {} of {} rows listed; verifying those",
                parsed.covered_count(),
                table.row_count()
            );
            parsed.covered.clone()
        }
        _ => vec![true; table.row_count()],
    };

    let n = table.num_inputs();
    let mut seen = vec![false; table.row_count()];
    for minterm in 0..table.row_count() as u64 {
        if !covered[minterm as usize] {
            continue;
        }
        let output = table.output(minterm);
        let input_row = table.input_row(minterm);
        if input_row.parity() != output.parity() {
            println!("parity violation at row {input_row} -> {output}");
            return EXIT_VERIFY_FAILED;
        }
        if seen[output.value() as usize] {
            let earlier = (0..minterm)
                .find(|&v| covered[v as usize] && table.output_value(v) == output.value())
                .expect("duplicate has an earlier occurrence");
            println!(
                "duplicate output {output} for rows {} and {input_row}",
                revparity::BitRow::new(earlier, n).expect("row fits")
            );
            return EXIT_VERIFY_FAILED;
        }
        seen[output.value() as usize] = true;
    }
    println!("ok: reversible and parity-preserving");
    EXIT_OK
}

fn cmd_count(n: usize, oracle: bool) -> u8 {
    if n == 0 || n > 32 {
        eprintln!("error: n must be between 1 and 32");
        return EXIT_INPUT_ERROR;
    }
    let count = count_parity_preserving(n);
    println!("{count}");
    if oracle {
        match enumerate_parity_preserving(n) {
            Ok(enumerated) => {
                if num_bigint::BigUint::from(enumerated) == count {
                    println!("enumeration agrees: {enumerated}");
                } else {
                    eprintln!(
                        "internal error: enumeration found {enumerated}, formula says {count}"
                    );
                    return EXIT_INTERNAL;
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_INPUT_ERROR;
            }
        }
    }
    EXIT_OK
}

fn cmd_bench(specs: &[String], output: Option<PathBuf>, options: &ParseOptions) -> u8 {
    let mut sources = Vec::new();
    for spec in specs {
        let path = PathBuf::from(spec);
        if path.is_dir() {
            match pla_files_in(&path) {
                Ok(files) => sources.extend(files.into_iter().map(Source::Pla)),
                Err(e) => {
                    eprintln!("error: {}: {e}", path.display());
                    return EXIT_INPUT_ERROR;
                }
            }
        } else {
            sources.push(Source::parse(spec));
        }
    }

    let records = run_suite(&sources, options);
    let mut reports = Vec::new();
    for record in &records {
        match &record.result {
            Ok(report) => reports.push(report.clone()),
            Err(reason) => eprintln!("failed: {}: {reason}", record.source),
        }
    }
    if let Err(e) = emit(output.as_deref(), &write_csv(&reports)) {
        eprintln!("error: {e}");
        return EXIT_INPUT_ERROR;
    }
    EXIT_OK
}

fn cmd_rdgen(n: usize, output: Option<PathBuf>) -> u8 {
    let table = match rd_generate(n) {
        Ok(table) => table,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT_ERROR;
        }
    };
    if let Err(e) = emit(output.as_deref(), &write_table_pla(&table)) {
        eprintln!("error: {e}");
        return EXIT_INPUT_ERROR;
    }
    EXIT_OK
}

/// Write to the path, or to stdout when the path is absent or "-".
fn emit(path: Option<&std::path::Path>, content: &str) -> std::io::Result<()> {
    match path {
        Some(p) if p != std::path::Path::new("-") => std::fs::write(p, content),
        _ => std::io::stdout().write_all(content.as_bytes()),
    }
}
