//! The `trel` command line.
//!
//! [`run`] does all the work and hands back what would be printed, so tests
//! can drive the tool without spawning a process.
//!
//! Exit codes: 0 success, 1 usage/parse/internal error, 2 valid input with a
//! negative verdict, 3 for a tableau that stays open.

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use trel_core::{
    analyze, check_equivalence, eval3, parse, refute, table, Assignment, Classification, Error,
    Exec, Formula, Options, Outcome, Strategy, TableMode, VarSet,
};

pub mod doc;

use doc::{CheckDoc, EvalDoc, ParseDoc, RelevanceDoc, TableDoc, TableauDoc};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;
pub const EXIT_OPEN: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    /// Graphviz; tableau only.
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "trel", version, about = "Truth-relevance analysis for propositional formulas")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest variable count for exhaustive enumeration.
    #[arg(long, global = true, env = "TREL_MAX_VARS", value_name = "N")]
    pub max_vars: Option<usize>,

    /// Node budget for tableau construction.
    #[arg(long, global = true, env = "TREL_MAX_NODES", value_name = "N")]
    pub max_nodes: Option<usize>,

    /// Read one formula per line from standard input and print one report per
    /// line, in input order.
    #[arg(long, global = true)]
    pub each: bool,

    /// Run enumeration on a single thread.
    #[arg(long, global = true)]
    pub sequential: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Classical,
    Three,
    Partial,
}

impl From<ModeArg> for TableMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Classical => TableMode::Classical,
            ModeArg::Three => TableMode::Three,
            ModeArg::Partial => TableMode::Partial,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Default,
    Reversed,
    Exhaustive,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Default => Strategy::Default,
            StrategyArg::Reversed => Strategy::Reversed,
            StrategyArg::Exhaustive => Strategy::Exhaustive,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a formula and print it in canonical form.
    Parse {
        /// Formula text, or `-` for standard input.
        #[arg(default_value = "-")]
        formula: String,
    },
    /// Evaluate under an assignment such as `P=T,Q=X`.
    Eval {
        formula: String,
        assignment: String,
    },
    /// Print a truth table.
    Table {
        #[arg(default_value = "-")]
        formula: String,
        /// Defaults to `partial` when `--vary` is given and `three` otherwise.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Variables ranging over T/F in partial mode; the rest are unknown.
        #[arg(long, value_name = "P,Q")]
        vary: Option<String>,
        /// Add a column for every connective.
        #[arg(long)]
        steps: bool,
    },
    /// Report minimal determining sets, redundant variables and t-relevance.
    Relevance {
        #[arg(default_value = "-")]
        formula: String,
    },
    /// Build a refutation tableau.
    Tableau {
        #[arg(default_value = "-")]
        formula: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Default)]
        strategy: StrategyArg,
    },
    /// Compare a formula with the conjunction of `R | ~R` over a set of its
    /// variables.
    Check {
        #[arg(default_value = "-")]
        formula: String,
        #[arg(long, value_name = "R1,R2", required_unless_present = "from_tableau")]
        set: Option<String>,
        /// Use the closing set of the refutation tableau.
        #[arg(long, conflicts_with = "set")]
        from_tableau: bool,
        /// Tableau strategy for `--from-tableau`.
        #[arg(long, value_enum, default_value_t = StrategyArg::Default)]
        strategy: StrategyArg,
    },
}

/// What a run printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// A failure with the message to print on standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure(pub String);

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure(msg.into())
    }

    fn core(err: Error, input: &str) -> Self {
        match err {
            Error::Parse(e) => Failure(e.annotate(input)),
            other => Failure(other.to_string()),
        }
    }
}

/// One command result, renderable in every supported format.
struct Report {
    text: String,
    line: String,
    dot: Option<String>,
    json: String,
    compact: String,
    code: i32,
}

impl Report {
    fn new<D: Serialize>(doc: &D, text: String, line: String, code: i32) -> Self {
        let json = render_json(doc);
        let compact = serde_json::to_string(doc).expect("documents serialize");
        Report { text, line, dot: None, json, compact, code }
    }
}

pub fn options(cli: &Cli) -> Options {
    let mut opts = Options::default();
    if let Some(n) = cli.max_vars {
        opts = opts.with_max_vars(n);
    }
    if let Some(n) = cli.max_nodes {
        opts = opts.with_max_nodes(n);
    }
    if cli.sequential {
        opts = opts.with_exec(Exec::Sequential);
    }
    opts
}

fn parse_formula(text: &str) -> Result<Formula, Failure> {
    parse(text).map_err(|e| Failure(e.annotate(text)))
}

fn command_formula(cmd: &Command) -> &str {
    match cmd {
        Command::Parse { formula }
        | Command::Eval { formula, .. }
        | Command::Table { formula, .. }
        | Command::Relevance { formula }
        | Command::Tableau { formula, .. }
        | Command::Check { formula, .. } => formula,
    }
}

fn run_one(cmd: &Command, text: &str, opts: &Options) -> Result<Report, Failure> {
    let f = parse_formula(text)?;
    let core = |e: Error| Failure::core(e, text);
    let formula = f.to_string();
    match cmd {
        Command::Parse { .. } => {
            let doc = ParseDoc::new(&f);
            Ok(Report::new(&doc, format!("{formula}\n"), formula, EXIT_OK))
        }
        Command::Eval { assignment, .. } => {
            let given: Assignment = assignment.parse().map_err(core)?;
            let vars = f.vars();
            if let Some(extra) = given.variables().find(|v| !vars.contains(v)) {
                return Err(core(Error::UnknownVariable(extra.name().to_owned())));
            }
            let values = given.project(&vars).map_err(core)?;
            let a = Assignment::from_values(&vars, &values);
            let value = eval3(&f, &a).map_err(core)?;
            let doc = EvalDoc { formula: formula.clone(), assignment: a.to_string(), value };
            Ok(Report::new(&doc, format!("{value}\n"), format!("{formula}\t{value}"), EXIT_OK))
        }
        Command::Table { mode, vary, steps, .. } => {
            let mode = match (mode, vary) {
                (Some(m), _) => TableMode::from(*m),
                (None, Some(_)) => TableMode::Partial,
                (None, None) => TableMode::Three,
            };
            if vary.is_some() && mode != TableMode::Partial {
                return Err(Failure::usage("--vary only applies to --mode partial"));
            }
            let varied = match vary {
                Some(list) => VarSet::parse(&f.vars(), list).map_err(core)?,
                None => VarSet::default(),
            };
            let t = table(&f, mode, &varied, opts).map_err(core)?;
            let doc = TableDoc::new(&t, *steps);
            let line = format!("{formula}\t{}", doc.values());
            Ok(Report::new(&doc, t.render_tsv(*steps), line, EXIT_OK))
        }
        Command::Relevance { .. } => {
            let report = analyze(&f, opts).map_err(core)?;
            let doc = RelevanceDoc::new(&report);
            let code = if report.classification == Classification::TRelevantTautology {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            };
            let line = format!("{formula}\t{}\t{}", report.classification, doc.sets());
            Ok(Report::new(&doc, format!("{report}\n"), line, code))
        }
        Command::Tableau { strategy, .. } => {
            let t = refute(&f, Strategy::from(*strategy), opts).map_err(core)?;
            let doc = TableauDoc::new(&t);
            let code = match t.outcome {
                Outcome::ProvedTrue => EXIT_OK,
                Outcome::ProvedNotFalse => EXIT_NEGATIVE,
                Outcome::Open => EXIT_OPEN,
            };
            let line = format!("{formula}\t{}\t{}", t.outcome, doc.closing_set_text());
            let mut report = Report::new(&doc, t.render_text(), line, code);
            report.dot = Some(t.render_dot());
            Ok(report)
        }
        Command::Check { set, strategy, .. } => {
            let r = match set {
                Some(list) => VarSet::parse(&f.vars(), list).map_err(core)?,
                None => refute(&f, Strategy::from(*strategy), opts)
                    .map_err(core)?
                    .closing_set
                    .ok_or_else(|| Failure::usage("the tableau does not close, so there is no closing set"))?,
            };
            let verdict = check_equivalence(&f, &r, opts).map_err(core)?;
            let doc = CheckDoc::new(&f, &r, &verdict);
            let set_text = doc.set_text();
            let text = format!("formula: {formula}\nset: {set_text}\nverdict: {verdict}\n");
            let line = format!("{formula}\t{set_text}\t{verdict}");
            let code = if verdict.holds { EXIT_OK } else { EXIT_NEGATIVE };
            Ok(Report::new(&doc, text, line, code))
        }
    }
}

/// Pretty JSON followed by a newline.
pub fn render_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn render(report: &Report, format: Format) -> Result<String, Failure> {
    match format {
        Format::Text => Ok(report.text.clone()),
        Format::Json => Ok(report.json.clone()),
        Format::Dot => report
            .dot
            .clone()
            .ok_or_else(|| Failure::usage("--format dot is only available for the tableau command")),
    }
}

fn read_all(stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut buf = String::new();
    stdin
        .read_to_string(&mut buf)
        .map_err(|e| Failure(format!("cannot read standard input: {e}")))?;
    Ok(buf)
}

fn run_single(cli: &Cli, opts: &Options, stdin: &mut dyn Read) -> Output {
    let arg = command_formula(&cli.command);
    let text = if arg == "-" {
        match read_all(stdin) {
            Ok(s) => s.trim().to_owned(),
            Err(Failure(msg)) => return error_output(msg),
        }
    } else {
        arg.to_owned()
    };
    match run_one(&cli.command, &text, opts).and_then(|r| Ok((render(&r, cli.format)?, r.code))) {
        Ok((stdout, code)) => Output { stdout, stderr: String::new(), code },
        Err(Failure(msg)) => error_output(msg),
    }
}

fn run_batch(cli: &Cli, opts: &Options, stdin: &mut dyn Read) -> Output {
    if command_formula(&cli.command) != "-" {
        return error_output("--each reads formulas from standard input; pass `-` as the formula".into());
    }
    if cli.format == Format::Dot {
        return error_output("--format dot cannot be combined with --each".into());
    }
    let input = match read_all(stdin) {
        Ok(s) => s,
        Err(Failure(msg)) => return error_output(msg),
    };
    let lines: Vec<(usize, &str)> = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let results = trel_core::par::map_slice(opts.exec, &lines, |(_, l)| run_one(&cli.command, l, opts));

    let mut out = Output::default();
    for ((lineno, _), result) in lines.iter().zip(results) {
        match result {
            Ok(report) => {
                match cli.format {
                    Format::Json => out.stdout.push_str(&report.compact),
                    _ => out.stdout.push_str(&report.line),
                }
                out.code = combine(out.code, report.code);
            }
            Err(Failure(msg)) => {
                let first = msg.lines().next().unwrap_or_default();
                match cli.format {
                    Format::Json => out.stdout.push_str(&serde_json::json!({ "error": first }).to_string()),
                    _ => out.stdout.push_str(&format!("error: {first}")),
                }
                out.stderr.push_str(&format!("line {lineno}: {msg}\n"));
                out.code = combine(out.code, EXIT_ERROR);
            }
        }
        out.stdout.push('\n');
    }
    out
}

/// Batch exit status: any error wins, then an open tableau, then a negative
/// verdict.
fn combine(acc: i32, code: i32) -> i32 {
    let rank = |c: i32| match c {
        EXIT_ERROR => 3,
        EXIT_OPEN => 2,
        EXIT_NEGATIVE => 1,
        _ => 0,
    };
    if rank(code) > rank(acc) {
        code
    } else {
        acc
    }
}

fn error_output(msg: String) -> Output {
    Output { stdout: String::new(), stderr: format!("error: {msg}\n"), code: EXIT_ERROR }
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Output { stdout: String::new(), stderr: rendered, code: EXIT_ERROR }
            } else {
                Output { stdout: rendered, stderr: String::new(), code: EXIT_OK }
            };
        }
    };
    let opts = options(&cli);
    if cli.each {
        run_batch(&cli, &opts, stdin)
    } else {
        run_single(&cli, &opts, stdin)
    }
}
