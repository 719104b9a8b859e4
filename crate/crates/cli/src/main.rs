//! Command-line surface for the shuffle-product enumerator: streaming
//! enumeration, oracle verification, tree export, exact count/storage
//! formulas, the Tic-Tac-Toe demo, and a micro-benchmark harness.

use clap::{Parser, Subcommand, ValueEnum};
use riffle::oracle::{self, VerificationReport};
use riffle::treegraph::TraversalTree;
use riffle::{formulas, Bitmask, EdgeKind, EnumerationEvent, Error, ShuffleSpec};
use serde::Serialize;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

mod cpu;

#[derive(Parser)]
#[command(
    name = "riffle",
    version,
    about = "Enumerate two-set shuffle products as fixed-popcount binary integers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every permutation of the shuffle product
    Enumerate {
        /// Elements encoded as 0 bits
        #[arg(long, short = 'a')]
        zeros: u32,
        /// Elements encoded as 1 bits
        #[arg(long, short = 'b')]
        ones: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::DecimalLines)]
        format: OutputFormat,
        #[arg(long, value_enum, default_value_t = EmitOrder::Emit)]
        order: EmitOrder,
    },
    /// Check the enumerator against the brute-force oracles
    Verify {
        #[arg(long, short = 'a')]
        zeros: u32,
        #[arg(long, short = 'b')]
        ones: u32,
        #[arg(long, value_enum, default_value_t = OracleChoice::Both)]
        oracle: OracleChoice,
        /// Also check the swapped-input complement identity
        #[arg(long)]
        check_swap: bool,
    },
    /// Export the traversal tree as DOT or JSON
    Tree {
        #[arg(long, short = 'a')]
        zeros: u32,
        #[arg(long, short = 'b')]
        ones: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Dot)]
        format: OutputFormat,
    },
    /// Exact number of permutations in the shuffle product of two sets
    Count {
        /// Size of the set encoded as 0 bits
        x: u64,
        /// Size of the set encoded as 1 bits
        y: u64,
    },
    /// Exact bytes needed to store the complete shuffle product
    Storage { x: u64, y: u64 },
    /// Enumerate all 126 end-state Tic-Tac-Toe boards
    Tictactoe {
        /// Draw each board as a 3x3 grid of X/O instead of a bit line
        #[arg(long)]
        render: bool,
    },
    /// Time symmetric instances with a counting visitor and emit CSV
    Bench {
        /// Largest symmetric set size to time (1..=16)
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=16))]
        max: u32,
        /// Timed runs per set size
        #[arg(long, default_value_t = 3)]
        repeats: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    DecimalLines,
    BinaryLines,
    JsonLines,
    Dot,
    JsonTree,
    Csv,
}

impl OutputFormat {
    fn name(self) -> &'static str {
        match self {
            Self::DecimalLines => "decimal-lines",
            Self::BinaryLines => "binary-lines",
            Self::JsonLines => "json-lines",
            Self::Dot => "dot",
            Self::JsonTree => "json-tree",
            Self::Csv => "csv",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmitOrder {
    /// Traversal order, exactly as produced
    Emit,
    /// Ascending by value
    Sorted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleChoice {
    Scan,
    Lex,
    Both,
}

enum CliError {
    Usage(String),
    TooLarge(String),
    VerificationFailed,
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(err: io::Error) -> Self {
        Self::Io(err)
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::VerificationFailed) => ExitCode::from(1),
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::TooLarge(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(3)
        }
        // The consumer closed the stream; everything written so far is good.
        Err(CliError::Io(err)) if err.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Io(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Enumerate {
            zeros,
            ones,
            format,
            order,
        } => cmd_enumerate(zeros, ones, format, order),
        Command::Verify {
            zeros,
            ones,
            oracle,
            check_swap,
        } => cmd_verify(zeros, ones, oracle, check_swap),
        Command::Tree {
            zeros,
            ones,
            format,
        } => cmd_tree(zeros, ones, format),
        Command::Count { x, y } => cmd_count(x, y),
        Command::Storage { x, y } => cmd_storage(x, y),
        Command::Tictactoe { render } => cmd_tictactoe(render),
        Command::Bench {
            max,
            repeats,
            format,
        } => cmd_bench(max, repeats, format),
    }
}

fn make_spec(zeros: u32, ones: u32) -> Result<ShuffleSpec, CliError> {
    ShuffleSpec::new(zeros, ones).map_err(|err| CliError::TooLarge(err.to_string()))
}

fn too_large(err: Error) -> CliError {
    CliError::TooLarge(err.to_string())
}

fn cmd_enumerate(
    zeros: u32,
    ones: u32,
    format: OutputFormat,
    order: EmitOrder,
) -> Result<(), CliError> {
    if !matches!(
        format,
        OutputFormat::DecimalLines | OutputFormat::BinaryLines | OutputFormat::JsonLines
    ) {
        return Err(CliError::Usage(format!(
            "format `{}` is not an enumeration stream format (use decimal-lines, binary-lines or json-lines)",
            format.name()
        )));
    }
    let spec = make_spec(zeros, ones)?;
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    match order {
        EmitOrder::Emit => {
            let mut status = Ok(());
            riffle::enumerate(spec, |event| {
                if status.is_ok() {
                    status = write_event(&mut out, spec, event, format);
                }
            });
            status?;
        }
        EmitOrder::Sorted => {
            let mut events: Vec<EnumerationEvent> = Vec::new();
            riffle::enumerate(spec, |event| events.push(*event));
            events.sort_by_key(|event| event.value);
            for event in &events {
                write_event(&mut out, spec, event, format)?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

/// One enumeration event on the json-lines wire.
#[derive(Serialize)]
struct EventRecord {
    index: u64,
    value: u64,
    binary: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    parent_index: Option<u64>,
    edge: EdgeKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    subtrahend: Option<u64>,
    shift_count: u32,
    subtract_count: u32,
}

impl EventRecord {
    fn new(spec: ShuffleSpec, event: &EnumerationEvent) -> Self {
        Self {
            index: event.index,
            value: event.value.value(),
            binary: event.value.to_binary(spec.width()),
            parent_index: event.parent_index,
            edge: event.edge,
            subtrahend: event.subtrahend_used.map(|v| v.value()),
            shift_count: event.shift_count,
            subtract_count: event.subtract_count,
        }
    }
}

fn write_event<W: Write>(
    out: &mut W,
    spec: ShuffleSpec,
    event: &EnumerationEvent,
    format: OutputFormat,
) -> io::Result<()> {
    match format {
        OutputFormat::DecimalLines => writeln!(out, "{}", event.value),
        OutputFormat::BinaryLines => writeln!(out, "{}", event.value.to_binary(spec.width())),
        OutputFormat::JsonLines => {
            let record = EventRecord::new(spec, event);
            let line = serde_json::to_string(&record).expect("event serialization cannot fail");
            writeln!(out, "{line}")
        }
        _ => unreachable!("stream formats are validated before enumeration"),
    }
}

fn cmd_verify(
    zeros: u32,
    ones: u32,
    oracle: OracleChoice,
    check_swap: bool,
) -> Result<(), CliError> {
    let spec = make_spec(zeros, ones)?;
    println!(
        "instance: zeros={} ones={} (width {})",
        spec.zeros(),
        spec.ones(),
        spec.width()
    );

    let mut all_passed = true;
    let mut verified = 0u64;

    if matches!(oracle, OracleChoice::Scan | OracleChoice::Both) {
        let report = oracle::verify_against_oracle(spec).map_err(too_large)?;
        print_report("scan", &report);
        all_passed &= report.passed;
        verified = report.algorithm_count;
    }
    if matches!(oracle, OracleChoice::Lex | OracleChoice::Both) {
        let values = oracle::lex_enumerate(spec).map_err(too_large)?;
        let report = oracle::compare_with(spec, &values);
        print_report("lex", &report);
        all_passed &= report.passed;
        verified = report.algorithm_count;
    }
    if check_swap {
        let ok = oracle::verify_swap_isomorphism(spec);
        println!("swap isomorphism: {}", if ok { "PASS" } else { "FAIL" });
        all_passed &= ok;
    }

    if all_passed {
        println!("PASS: {verified} permutations verified");
        Ok(())
    } else {
        println!("FAIL");
        Err(CliError::VerificationFailed)
    }
}

fn print_report(name: &str, report: &VerificationReport) {
    println!(
        "{name} oracle: {} algorithm={} oracle={} missing={} extra={} duplicates={}",
        if report.passed { "PASS" } else { "FAIL" },
        report.algorithm_count,
        report.oracle_count,
        report.missing.len(),
        report.extra.len(),
        report.duplicates.len(),
    );
    list_values("missing", &report.missing);
    list_values("extra", &report.extra);
    list_values("duplicates", &report.duplicates);
}

fn list_values(label: &str, values: &[Bitmask]) {
    if values.is_empty() {
        return;
    }
    let shown: Vec<String> = values.iter().take(16).map(Bitmask::to_string).collect();
    let ellipsis = if values.len() > 16 { ", ..." } else { "" };
    println!("  {label}: {}{ellipsis}", shown.join(", "));
}

fn cmd_tree(zeros: u32, ones: u32, format: OutputFormat) -> Result<(), CliError> {
    let spec = make_spec(zeros, ones)?;
    let tree = TraversalTree::build(spec).map_err(too_large)?;
    let text = match format {
        OutputFormat::Dot => tree.to_dot(),
        OutputFormat::JsonTree => tree.to_json(),
        other => {
            return Err(CliError::Usage(format!(
                "format `{}` is not a tree format (use dot or json-tree)",
                other.name()
            )))
        }
    };
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn cmd_count(x: u64, y: u64) -> Result<(), CliError> {
    println!("{}", formulas::shuffle_count(x, y));
    Ok(())
}

fn cmd_storage(x: u64, y: u64) -> Result<(), CliError> {
    match formulas::storage_bytes(x, y) {
        Ok(bytes) => {
            println!("{bytes}");
            Ok(())
        }
        Err(err @ Error::StorageUndefinedForEmptySets) => Err(CliError::Usage(err.to_string())),
        Err(err) => Err(CliError::TooLarge(err.to_string())),
    }
}

fn cmd_tictactoe(render: bool) -> Result<(), CliError> {
    // 4 Os for the second player, 5 Xs for the first: a 9-bit board.
    let spec = ShuffleSpec::new(4, 5).expect("a 9-bit board always fits");
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    let mut status = Ok(());
    riffle::enumerate(spec, |event| {
        if status.is_ok() {
            let bits = event.value.to_binary(spec.width());
            status = if render {
                write_board(&mut out, &bits)
            } else {
                writeln!(out, "{bits}")
            };
        }
    });
    status?;
    out.flush()?;
    Ok(())
}

/// Draws one board from its 9-bit string: most significant bit is the
/// top-left cell, row-major, 1 = X and 0 = O.
fn write_board<W: Write>(out: &mut W, bits: &str) -> io::Result<()> {
    for row in 0..3 {
        let cells: String = bits[row * 3..row * 3 + 3]
            .chars()
            .map(|bit| if bit == '1' { 'X' } else { 'O' })
            .collect();
        writeln!(out, "{cells}")?;
    }
    writeln!(out)
}

/// One timed run of a symmetric instance.
struct BenchRecord {
    zeros: u32,
    ones: u32,
    repeat_index: u32,
    elapsed_cpu_seconds: f64,
    emitted_count: u64,
}

impl BenchRecord {
    const CSV_HEADER: &'static str = "zeros,ones,repeat,cpu_seconds,count";

    fn to_csv(&self) -> String {
        format!(
            "{},{},{},{:.9},{}",
            self.zeros, self.ones, self.repeat_index, self.elapsed_cpu_seconds, self.emitted_count
        )
    }
}

fn cmd_bench(max: u32, repeats: u32, format: OutputFormat) -> Result<(), CliError> {
    if format != OutputFormat::Csv {
        return Err(CliError::Usage(format!(
            "format `{}` is not a bench format (use csv)",
            format.name()
        )));
    }
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    writeln!(out, "{}", BenchRecord::CSV_HEADER)?;
    for size in 1..=max {
        let spec = ShuffleSpec::new(size, size).expect("bench sizes stay far below the limit");
        for repeat_index in 0..repeats {
            // Counting visitor only: timings measure the traversal, not
            // storage of its output.
            let started = cpu::process_cpu_seconds();
            let emitted_count = riffle::enumerate(spec, |_| {});
            let elapsed_cpu_seconds = cpu::process_cpu_seconds() - started;
            let record = BenchRecord {
                zeros: size,
                ones: size,
                repeat_index,
                elapsed_cpu_seconds,
                emitted_count,
            };
            writeln!(out, "{}", record.to_csv())?;
        }
    }
    out.flush()?;
    Ok(())
}
