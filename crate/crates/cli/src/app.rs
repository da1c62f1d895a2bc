//! Command-line interface.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use bnfix_core::graphs::{self, circumference, feedback_number, tree_info, MAX_EXHAUSTIVE};
use bnfix_core::network::MAX_MATERIALIZED;
use bnfix_core::oracle::{self, enumerate_networks, Cost, Predicate};
use bnfix_core::synth::{self, FamilySpec};
use bnfix_core::{words, BooleanNetwork, Digraph, Word};

use crate::dot;
use crate::format::{self, ParseError};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "bnfix", version, about = "Fixing words for Boolean networks")]
pub struct Cli {
    /// Print `key=value` lines.
    #[arg(long, global = true)]
    porcelain: bool,
    /// Lift the size bounds of exhaustive searches.
    #[arg(long, global = true)]
    accept_cost: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fixed points, structural properties and graph statistics.
    Analyze { net: PathBuf },
    /// Does the word fix the network?
    Verify {
        net: PathBuf,
        #[arg(short, long, allow_hyphen_values = true)]
        word: String,
    },
    /// Build a fixing word for a family.
    Synth(SynthArgs),
    /// Exact values by exhaustive search.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Universal words, path words and Gray codes.
    #[command(subcommand)]
    Words(WordsCommand),
    /// Graphviz output.
    ExportDot {
        #[arg(value_enum)]
        kind: DotKind,
        /// A network file, or a digraph file for `graph`.
        file: PathBuf,
    },
}

#[derive(Debug, Args)]
struct SynthArgs {
    #[arg(long, value_enum)]
    family: SynthFamily,
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Network file; repeat for a family.
    #[arg(long)]
    net: Vec<PathBuf>,
    #[arg(short)]
    n: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SynthFamily {
    /// Monotone networks on a loop-full tree (`--graph`).
    Tree,
    /// Monotone networks on any digraph (`--graph`).
    Feedback,
    /// Conjunctive networks on symmetric digraphs (`-n`).
    SymmetricConj,
    /// Asynchronous-acyclic networks (`-n`).
    PathUniversal,
    /// One asynchronous-acyclic network (`--net`).
    AcyclicInstance,
    /// Any fixable networks (`--net`, repeatable, or every network with `-n`).
    Greedy,
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Fixing length of one network.
    MinLength { net: PathBuf },
    /// Fixing length of a whole family.
    FamilyMinLength {
        #[arg(long, value_enum)]
        family: FamilyKind,
        #[arg(short)]
        n: Option<usize>,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long, default_value_t = 20)]
        budget: usize,
    },
    /// Least length of an (n,k)-universal word.
    Lambda {
        #[arg(short)]
        n: usize,
        #[arg(short, default_value_t = 0)]
        k: usize,
    },
    /// Least length of a path-universal word.
    BigLambda {
        #[arg(short)]
        n: usize,
    },
    /// Fraction of fixable networks.
    Phi {
        #[arg(short)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyKind {
    All,
    Monotone,
    AsyncAcyclic,
    MonotoneOn,
    Conjunctive,
    ConjunctiveSymmetric,
}

#[derive(Debug, Subcommand)]
enum WordsCommand {
    CheckUniversal {
        word: String,
        #[arg(short)]
        n: usize,
        #[arg(short, default_value_t = 0)]
        k: usize,
    },
    CheckPathWord {
        word: String,
        #[arg(short)]
        n: usize,
    },
    CheckPathUniversal {
        word: String,
        #[arg(short)]
        n: usize,
    },
    Gray {
        #[arg(short)]
        n: usize,
    },
    Zigzag {
        #[arg(short)]
        n: usize,
        #[arg(short, default_value_t = 0)]
        k: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DotKind {
    Async,
    Interaction,
    Graph,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] bnfix_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use bnfix_core::Error as E;
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(e) if e.is_infeasible() => EXIT_INFEASIBLE,
            CliError::Core(E::ExceedsBudget { .. }) => EXIT_INFEASIBLE,
            CliError::Core(
                E::NotFixable { .. } | E::NotAsyncAcyclic | E::NotLoopFullTree(_),
            ) => EXIT_PRECONDITION,
            CliError::Core(_) => EXIT_USAGE,
        }
    }
}

/// Lines of output plus whether the property asked about holds.
struct Report {
    entries: Vec<(&'static str, String)>,
    holds: bool,
    raw: Option<String>,
}

impl Report {
    fn new() -> Self {
        Report { entries: Vec::new(), holds: true, raw: None }
    }

    fn raw(text: String) -> Self {
        Report { entries: Vec::new(), holds: true, raw: Some(text) }
    }

    fn add(&mut self, key: &'static str, value: impl ToString) -> &mut Self {
        self.entries.push((key, value.to_string()));
        self
    }

    fn verdict(&mut self, key: &'static str, holds: bool) -> &mut Self {
        self.holds = holds;
        self.add(key, holds)
    }

    fn word(&mut self, w: &Word) -> &mut Self {
        self.add("word", if w.is_empty() { "ε".to_string() } else { w.to_string() });
        self.add("length", w.len())
    }

    fn render(&self, porcelain: bool) -> String {
        if let Some(raw) = &self.raw {
            return raw.clone();
        }
        let sep = if porcelain { "=" } else { ": " };
        self.entries.iter().map(|(k, v)| format!("{k}{sep}{v}\n")).collect()
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn load_network(path: &Path) -> Result<BooleanNetwork, CliError> {
    format::parse_network(&read(path)?).map_err(|source| CliError::Parse { path: path.into(), source })
}

fn load_digraph(path: &Path) -> Result<Digraph, CliError> {
    format::parse_digraph(&read(path)?).map_err(|source| CliError::Parse { path: path.into(), source })
}

fn parse_word(text: &str, n: usize) -> Result<Word, CliError> {
    Word::parse(text, n).map_err(|e| CliError::Usage(format!("bad word `{text}`: {e}")))
}

fn need<T>(value: Option<T>, what: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("missing {what}")))
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let v: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if v.is_empty() {
        "none".into()
    } else {
        v.join(" ")
    }
}

fn analyze(f: &BooleanNetwork, cost: Cost) -> Result<Report, CliError> {
    let mut r = Report::new();
    let fixed = f.fixed_points();
    let ig = f.interaction_graph();
    r.add("n", f.n())
        .add("fixed_points", join(&fixed))
        .add("fixed_point_count", fixed.len())
        .add("fixable", f.is_fixable())
        .add("monotone", f.is_monotone())
        .add("async_acyclic", f.is_async_acyclic())
        .add("interaction_arcs", ig.arc_count())
        .add("interaction_loops", ig.loop_count())
        .add("interaction_symmetric", graphs::is_symmetric(&ig));
    if f.n() <= MAX_EXHAUSTIVE {
        r.add("circumference", circumference(&ig)?).add("tau2", feedback_number(&ig, 2)?);
    }
    if f.n() <= MAX_MATERIALIZED {
        r.add("async_arcs", f.async_graph()?.arc_count());
    }
    match oracle::min_fixing_length(f, cost) {
        Ok(Some(l)) => {
            r.add("fixing_length", l);
        }
        Ok(None) => {}
        Err(e) if e.is_infeasible() => {}
        Err(e) => return Err(e.into()),
    }
    Ok(r)
}

fn synth(args: &SynthArgs, cost: Cost) -> Result<Report, CliError> {
    let mut r = Report::new();
    match args.family {
        SynthFamily::Tree => {
            let g = load_digraph(need(args.graph.as_deref(), "--graph")?)?;
            let info = tree_info(&g)?;
            let w = synth::tree_word(&g)?;
            r.word(&w).add("leaves", info.leaf_count()).add("root", info.root);
        }
        SynthFamily::Feedback => {
            let g = load_digraph(need(args.graph.as_deref(), "--graph")?)?;
            let fw = synth::feedback_word(&g)?;
            let tau = fw.feedback_set.len();
            let n = g.n();
            r.word(&fw.word)
                .add("feedback_set", join(&fw.feedback_set))
                .add("tau2", tau)
                .add("bound", tau * n * n + 3 * n);
        }
        SynthFamily::SymmetricConj => {
            r.word(&synth::symmetric_conjunctive_word(need(args.n, "-n")?)?);
        }
        SynthFamily::PathUniversal => {
            r.word(&words::path_universal_word(need(args.n, "-n")?)?);
        }
        SynthFamily::AcyclicInstance => {
            let path = need(args.net.first(), "--net")?;
            let f = load_network(path)?;
            let w = synth::acyclic_instance_word(&f)?;
            r.word(&w).add("fixed_point_count", f.fixed_points().len());
        }
        SynthFamily::Greedy => {
            let family = if args.net.is_empty() {
                FamilySpec::All(need(args.n, "--net or -n")?)
            } else {
                FamilySpec::Explicit(args.net.iter().map(|p| load_network(p)).collect::<Result<_, _>>()?)
            };
            r.word(&synth::greedy_fix_word(&family, cost)?);
        }
    }
    Ok(r)
}

fn oracle_command(cmd: &OracleCommand, cost: Cost) -> Result<Report, CliError> {
    let mut r = Report::new();
    match cmd {
        OracleCommand::MinLength { net } => {
            let f = load_network(net)?;
            match oracle::shortest_fixing_word(&f, cost)? {
                Some(w) => {
                    r.verdict("fixable", true).add("fixing_length", w.len()).word(&w);
                }
                None => {
                    r.verdict("fixable", false);
                }
            }
        }
        OracleCommand::FamilyMinLength { family, n, graph, budget } => {
            let (n, predicate) = match family {
                FamilyKind::MonotoneOn => {
                    let g = load_digraph(need(graph.as_deref(), "--graph")?)?;
                    (g.n(), Predicate::MonotoneOn(g))
                }
                kind => {
                    let n = need(*n, "-n")?;
                    let p = match kind {
                        FamilyKind::All => Predicate::All,
                        FamilyKind::Monotone => Predicate::Monotone,
                        FamilyKind::AsyncAcyclic => Predicate::AsyncAcyclic,
                        FamilyKind::Conjunctive => Predicate::Conjunctive,
                        _ => Predicate::ConjunctiveSymmetric,
                    };
                    (n, p)
                }
            };
            let family = enumerate_networks(n, predicate, cost)?;
            let members = family.members();
            if let Some(m) = members.iter().position(|f| !f.is_fixable()) {
                return Err(bnfix_core::Error::NotFixable { member: m }.into());
            }
            let (len, w) = family.min_fixing_length(*budget)?;
            r.add("members", members.len()).add("fixing_length", len).word(&w);
        }
        OracleCommand::Lambda { n, k } => {
            let (len, w) = oracle::min_universal_length(*n, *k, cost)?;
            r.add("lambda", len).word(&w);
        }
        OracleCommand::BigLambda { n } => {
            let (len, w) = oracle::min_path_universal_length(*n, cost)?;
            r.add("big_lambda", len).word(&w);
        }
        OracleCommand::Phi { n } => {
            let phi = oracle::fixable_fraction(*n, cost)?;
            r.add("phi", phi).add("phi_decimal", *phi.numer() as f64 / *phi.denom() as f64);
        }
    }
    Ok(r)
}

fn words_command(cmd: &WordsCommand) -> Result<Report, CliError> {
    let mut r = Report::new();
    match cmd {
        WordsCommand::CheckUniversal { word, n, k } => {
            let w = parse_word(word, *n)?;
            r.verdict("universal", words::is_k_universal(&w, *n, *k)?);
        }
        WordsCommand::CheckPathWord { word, n } => {
            let w = parse_word(word, *n)?;
            r.verdict("path_word", words::is_path_word(&w, *n));
        }
        WordsCommand::CheckPathUniversal { word, n } => {
            let w = parse_word(word, *n)?;
            r.verdict("path_universal", words::is_path_universal(&w, *n)?);
        }
        WordsCommand::Gray { n } => {
            let w = words::gray_word(*n)?;
            r.word(&w).add("max_multiplicity", words::max_multiplicity(&w));
        }
        WordsCommand::Zigzag { n, k } => {
            r.word(&words::zigzag_universal(*n, *k)?);
        }
    }
    Ok(r)
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    let cost = if cli.accept_cost { Cost::Accept } else { Cost::Bounded };
    match &cli.command {
        Command::Analyze { net } => analyze(&load_network(net)?, cost),
        Command::Verify { net, word } => {
            let f = load_network(net)?;
            let w = parse_word(word, f.n())?;
            let mut r = Report::new();
            r.verdict("fixes", f.fixes(&w));
            Ok(r)
        }
        Command::Synth(args) => synth(args, cost),
        Command::Oracle(cmd) => oracle_command(cmd, cost),
        Command::Words(cmd) => words_command(cmd),
        Command::ExportDot { kind, file } => Ok(Report::raw(match kind {
            DotKind::Async => dot::async_dot(&load_network(file)?)?,
            DotKind::Interaction => dot::digraph_dot(&load_network(file)?.interaction_graph(), "interaction"),
            DotKind::Graph => dot::digraph_dot(&load_digraph(file)?, "G"),
        })),
    }
}

/// Runs the program on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_TRUE };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let _ = out.write_all(report.render(cli.porcelain).as_bytes());
            if report.holds {
                EXIT_TRUE
            } else {
                EXIT_FALSE
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
