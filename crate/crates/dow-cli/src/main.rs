//! `dow`: command-line front end for double occurrence words.
//!
//! Subcommands cover counting tables, exhaustive enumeration, word
//! classification, the enumeration-vs-recurrence verification suite, gene
//! arrangement mapping and realizability, and SVG diagram rendering.
//!
//! Exit codes: 0 success, 1 verification or internal failure, 2 usage or
//! parse error, 3 exhaustive-operation budget exceeded. The `DOW_BUDGET`
//! environment variable overrides the default size ceiling for exhaustive
//! operations; a `--budget` flag overrides both.

use std::fmt;
use std::fs;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use dow::classify;
use dow::count::{Method, SequenceId, Sequences};
use dow::enumerate::{count_by_enumeration, enumerate, ClassFilter};
use dow::genome::{rho, GenomeError, MicronuclearArrangement, RealizabilityChecker};
use dow::render::{render_svg, DiagramSpec, DiagramStyle, Geometry};
use dow::seqio::{emit_table, EmitFormat};
use dow::{Budget, Dow};

#[derive(Parser)]
#[command(
    name = "dow",
    version,
    about = "Enumerate, classify, count, and draw double occurrence words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print counting tables for word classes
    Count {
        /// Comma-separated classes: all, palindrome, irreducible,
        /// irreducible-palindrome, strong, strong-palindrome, diagrams-all,
        /// diagrams-irreducible, diagrams-strong, arrangements
        #[arg(long, value_delimiter = ',', required = true)]
        classes: Vec<String>,
        /// Largest size to tabulate
        #[arg(long)]
        n_max: usize,
        /// Smallest size to tabulate
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        /// Use the closed form instead of the recurrence where both exist
        #[arg(long)]
        closed_form: bool,
        /// Output format: aligned, csv, json-lines, or bfile (single class)
        #[arg(long, default_value = "aligned")]
        format: String,
        /// Output path, `-` for standard output
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// List canonical words of one size, lexicographically
    Enumerate {
        #[arg(long)]
        n: usize,
        /// all, palindrome, irreducible, irreducible-palindrome, strong,
        /// or strong-palindrome
        #[arg(long, default_value = "all")]
        class: String,
        /// Size ceiling for this run (also settable via DOW_BUDGET)
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Report the structural properties of one word
    Classify {
        /// Word text: contiguous digits (121323) or separated ids (1 10 1 10)
        word: String,
    },
    /// Compare enumeration against the recurrences for every class
    Verify {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Map a gene arrangement (M3 -M1 M2 ...) to its pointer word
    MapArrangement {
        /// Arrangements may start with an inverted segment like -M2
        #[arg(allow_hyphen_values = true)]
        arrangement: String,
    },
    /// Search for an arrangement whose pointer word is the given word
    Realizable {
        word: String,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Draw a word as an SVG chord or linked diagram
    Render {
        word: String,
        /// chord or linked
        #[arg(long, default_value = "chord")]
        style: String,
        /// Output path, `-` for standard output
        #[arg(short, long, default_value = "-")]
        output: String,
        /// Canvas side length
        #[arg(long)]
        canvas: Option<f64>,
        /// Circle radius (chord) or half baseline length (linked)
        #[arg(long)]
        span: Option<f64>,
        #[arg(long)]
        font_size: Option<f64>,
        /// Leave out the base-point mark
        #[arg(long)]
        no_base_mark: bool,
    },
}

enum CliError {
    Usage(String),
    Budget(String),
    Failure(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Failure(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Budget(m) | CliError::Failure(m) => f.write_str(m),
        }
    }
}

impl From<dow::BudgetError> for CliError {
    fn from(e: dow::BudgetError) -> Self {
        CliError::Budget(e.to_string())
    }
}

impl From<dow::WordError> for CliError {
    fn from(e: dow::WordError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<GenomeError> for CliError {
    fn from(e: GenomeError) -> Self {
        match e {
            GenomeError::Budget(b) => CliError::Budget(b.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn effective_budget(flag: Option<usize>) -> Budget {
    match flag {
        Some(n) => Budget {
            enumeration: n,
            arrangements: n,
        },
        None => Budget::from_env(),
    }
}

/// Standard output vanishing mid-stream (`dow enumerate ... | head`) is a
/// normal way for a run to end, not a failure.
fn stdout_result(r: std::io::Result<()>) -> Result<(), CliError> {
    match r {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(CliError::Failure(format!("write failed: {e}"))),
    }
}

fn say(args: fmt::Arguments<'_>) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    stdout_result(out.write_fmt(args).and_then(|()| out.write_all(b"\n")))
}

/// `println!` that reports write errors instead of panicking.
macro_rules! outln {
    ($($t:tt)*) => { say(format_args!($($t)*))? };
}

/// Writes to the path, or to standard output when the path is `-`.
fn write_output(path: &str, text: &str) -> Result<(), CliError> {
    if path == "-" {
        stdout_result(std::io::stdout().write_all(text.as_bytes()))
    } else {
        fs::write(path, text).map_err(|e| CliError::Failure(format!("{path}: {e}")))
    }
}

fn parse_word(text: &str) -> Result<Dow, CliError> {
    let w: Dow = text.parse()?;
    Ok(w)
}

fn cmd_count(
    classes: &[String],
    n_min: usize,
    n_max: usize,
    closed_form: bool,
    format: &str,
    output: &str,
) -> Result<(), CliError> {
    if n_min < 1 || n_max < n_min {
        return Err(CliError::Usage(format!(
            "size range {n_min}..{n_max} is empty or starts below 1"
        )));
    }
    let format = EmitFormat::parse(format)
        .ok_or_else(|| CliError::Usage(format!("unknown format `{format}`")))?;
    let method = if closed_form {
        Method::ClosedForm
    } else {
        Method::Recurrence
    };
    let mut seq = Sequences::new();
    let mut tables = Vec::new();
    for class in classes {
        let id = SequenceId::parse(class)
            .ok_or_else(|| CliError::Usage(format!("unknown class `{class}`")))?;
        let table = seq
            .table(id, n_min, n_max, method)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        tables.push(table);
    }
    let text = emit_table(&tables, format).map_err(|e| CliError::Usage(e.to_string()))?;
    write_output(output, &text)
}

fn cmd_enumerate(n: usize, class: &str, budget: Option<usize>) -> Result<(), CliError> {
    let filter = ClassFilter::parse(class)
        .ok_or_else(|| CliError::Usage(format!("unknown class `{class}`")))?;
    let budget = effective_budget(budget);
    budget.check_enumeration(n, "enumeration")?;
    let stdout = std::io::stdout();
    let mut lock = std::io::BufWriter::new(stdout.lock());
    for w in enumerate(n, filter) {
        stdout_result(writeln!(lock, "{w}"))?;
    }
    stdout_result(lock.flush())
}

fn cmd_classify(word: &str) -> Result<(), CliError> {
    let w = parse_word(word)?;
    if w.is_empty() {
        return Err(CliError::Usage(
            "cannot classify the empty word".to_string(),
        ));
    }
    let canonical = w.canonicalize();
    let nonempty = "word is nonempty";
    let factors = classify::irreducible_factors(&canonical).expect(nonempty);
    let graph = classify::circle_graph(&canonical);
    // show each factor as it sits inside the canonical word, not relabeled;
    // factor lengths fix the boundaries
    let mut segments = Vec::with_capacity(factors.len());
    let mut start = 0usize;
    for f in &factors {
        let slice = canonical.letters()[start..start + f.len()].to_vec();
        start += f.len();
        segments.push(Dow::new(slice).expect("a factor covers each of its letters twice"));
    }
    outln!("canonical: {canonical}");
    outln!("size: {}", canonical.size());
    outln!("palindrome: {}", canonical.is_palindrome());
    outln!(
        "irreducible: {}",
        classify::is_irreducible(&canonical).expect(nonempty)
    );
    outln!(
        "factors: {}",
        segments
            .iter()
            .map(Dow::to_string)
            .collect::<Vec<_>>()
            .join(" | ")
    );
    outln!(
        "strongly-irreducible: {}",
        classify::is_strongly_irreducible(&canonical).expect(nonempty)
    );
    outln!("circle-graph-connected: {}", graph.is_connected());
    outln!(
        "circle-graph-edges: {}",
        graph
            .edges()
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect::<Vec<_>>()
            .join(" ")
    );
    Ok(())
}

fn cmd_verify(n_max: usize, budget: Option<usize>) -> Result<(), CliError> {
    if n_max < 1 {
        return Err(CliError::Usage("--n-max must be at least 1".to_string()));
    }
    let budget = effective_budget(budget);
    budget.check_enumeration(n_max, "verification")?;
    let mut seq = Sequences::new();
    let mut failures = 0usize;
    for n in 1..=n_max {
        for id in [
            SequenceId::All,
            SequenceId::Palindrome,
            SequenceId::Irreducible,
            SequenceId::IrreduciblePalindrome,
            SequenceId::StronglyIrreducible,
            SequenceId::StronglyIrreduciblePalindrome,
        ] {
            let filter = id.filter().expect("word classes have filters");
            let enumerated = count_by_enumeration(n, filter, &budget)?;
            let computed = seq
                .value(id, n, Method::Recurrence)
                .expect("n >= 1 and recurrences are total there");
            let verdict = if enumerated == computed {
                "PASS"
            } else {
                "FAIL"
            };
            if verdict == "FAIL" {
                failures += 1;
            }
            outln!("{n} {} {enumerated} {computed} {verdict}", id.name());
        }
    }
    if failures > 0 {
        Err(CliError::Failure(format!(
            "{failures} sequence checks failed"
        )))
    } else {
        Ok(())
    }
}

fn cmd_map_arrangement(text: &str) -> Result<(), CliError> {
    let arrangement = MicronuclearArrangement::parse(text)?;
    let word = rho(&arrangement)?;
    outln!("{word}");
    Ok(())
}

fn cmd_realizable(word: &str, budget: Option<usize>) -> Result<(), CliError> {
    let w = parse_word(word)?;
    if w.is_empty() {
        return Err(CliError::Usage(
            "realizability needs a nonempty word".to_string(),
        ));
    }
    let budget = effective_budget(budget);
    let mut checker = RealizabilityChecker::new();
    match checker.realize(&w, &budget)? {
        Some(witness) => outln!("realizable: {witness}"),
        None => outln!("not realizable"),
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_render(
    word: &str,
    style: &str,
    output: &str,
    canvas: Option<f64>,
    span: Option<f64>,
    font_size: Option<f64>,
    no_base_mark: bool,
) -> Result<(), CliError> {
    let w = parse_word(word)?;
    let style = DiagramStyle::parse(style)
        .ok_or_else(|| CliError::Usage(format!("unknown style `{style}`")))?;
    let mut spec = DiagramSpec::new(w, style);
    let defaults = Geometry::default();
    spec.geometry = Geometry {
        canvas: canvas.unwrap_or(defaults.canvas),
        span: span.unwrap_or(defaults.span),
        font_size: font_size.unwrap_or(defaults.font_size),
    };
    spec.base_point_mark = !no_base_mark;
    let svg = render_svg(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
    write_output(output, &svg)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Count {
            classes,
            n_max,
            n_min,
            closed_form,
            format,
            output,
        } => cmd_count(&classes, n_min, n_max, closed_form, &format, &output),
        Command::Enumerate { n, class, budget } => cmd_enumerate(n, &class, budget),
        Command::Classify { word } => cmd_classify(&word),
        Command::Verify { n_max, budget } => cmd_verify(n_max, budget),
        Command::MapArrangement { arrangement } => cmd_map_arrangement(&arrangement),
        Command::Realizable { word, budget } => cmd_realizable(&word, budget),
        Command::Render {
            word,
            style,
            output,
            canvas,
            span,
            font_size,
            no_base_mark,
        } => cmd_render(
            &word,
            &style,
            &output,
            canvas,
            span,
            font_size,
            no_base_mark,
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
