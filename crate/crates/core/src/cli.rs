//! Command-line front end.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 search budget exceeded,
//! 4 input violates a procedure's hypothesis, 5 a proven bound failed (bug).

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::budget::{Budget, DEFAULT_BUDGET};
use crate::conjecture::{
    self, caro_pepper_bound, check_named_statements, fit_linear_upper_bounds, Hypothesis, Invariant,
    InvariantRow,
};
use crate::constructive::{self, ConstructionError};
use crate::enumerate;
use crate::families::{self, FamilySpec};
use crate::graph::{parse_edge_list, parse_graph6, serialize_graph6, Graph};
use crate::Rational;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_HYPOTHESIS: i32 = 4;
pub const EXIT_THEOREM: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "zfcover", version, about = "Zero forcing and vertex cover toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Clawfree,
    DeltaBound,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Input file; reads stdin when omitted.
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
    /// Search budget in elementary steps, per graph.
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact invariants for each input graph.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        /// Emit CSV instead of text.
        #[arg(long)]
        csv: bool,
    },
    /// Run a constructive procedure and print its report.
    Construct {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Generate family members as graph6 with a metadata line.
    Gen {
        #[command(subcommand)]
        family: GenCommand,
    },
    /// Check the named statements over a corpus.
    Verify {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Fit and rank linear upper bounds over a corpus.
    Conjecture {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[arg(long)]
        hypothesis: String,
        /// Emit the invariant table as CSV before the records.
        #[arg(long)]
        csv: bool,
    },
    /// List all graphs on `n` vertices up to isomorphism.
    Enumerate {
        n: usize,
        #[arg(long)]
        connected: bool,
    },
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// K_n with pendants on the first p vertices.
    Construction1 { n: usize, p: usize },
    /// Cycle C_k with cliques of the given comma-separated sizes.
    Construction2 {
        k: usize,
        #[arg(value_delimiter = ',')]
        sizes: Vec<usize>,
    },
    /// K_{1,k}.
    Star { k: usize },
    /// K_{1,k} followed by (k−1)-LSVAs.
    Tstar {
        k: usize,
        #[arg(long, value_delimiter = ',')]
        ops: Vec<usize>,
    },
    /// K_{2,3} followed by 2-LSVAs.
    Gstar {
        #[arg(long, value_delimiter = ',')]
        ops: Vec<usize>,
    },
    /// K_1 followed by k-LSVAs.
    Klsva {
        k: usize,
        #[arg(long, value_delimiter = ',')]
        ops: Vec<usize>,
    },
    /// Join of two graph6 graphs.
    Join { g: String, h: String },
    /// Random connected-or-not graphs with independent edges.
    Random {
        #[arg(long)]
        n: usize,
        /// Edge probability.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut out = String::new();
    let result = dispatch(cli.command, stdin, &mut out);
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, stdin: &mut dyn Read, out: &mut String) -> Outcome {
    match cmd {
        Command::Solve { input, csv } => cmd_solve(&input, stdin, csv, out),
        Command::Construct { input, mode } => cmd_construct(&input, stdin, mode, out),
        Command::Gen { family } => cmd_gen(family, out),
        Command::Verify { input } => cmd_verify(&input, stdin, out),
        Command::Conjecture {
            input,
            lhs,
            rhs,
            hypothesis,
            csv,
        } => cmd_conjecture(&input, stdin, &lhs, &rhs, &hypothesis, csv, out),
        Command::Enumerate { n, connected } => cmd_enumerate(n, connected, out),
    }
}

fn read_input(input: &InputArgs, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut text = String::new();
    match &input.input {
        Some(path) => {
            text = std::fs::read_to_string(path)
                .map_err(|e| Failure::new(EXIT_USAGE, format!("cannot read {}: {e}", path.display())))?;
        }
        None => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::new(EXIT_USAGE, format!("cannot read stdin: {e}")))?;
        }
    }
    Ok(text)
}

/// Parses the input into `(id, graph)` pairs. graph6 input holds one graph
/// per line, and the line itself is the id; edge-list input is one graph.
fn read_graphs(input: &InputArgs, stdin: &mut dyn Read) -> Result<Vec<(String, Graph)>, Failure> {
    let text = read_input(input, stdin)?;
    let graphs = match input.format {
        Format::Graph6 => {
            let mut graphs = Vec::new();
            for (idx, raw) in text.lines().enumerate() {
                let line = raw.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let g = parse_graph6(line)
                    .map_err(|e| Failure::new(EXIT_USAGE, format!("line {}: {e}", idx + 1)))?;
                let id = line.strip_prefix(">>graph6<<").unwrap_or(line).to_string();
                graphs.push((id, g));
            }
            graphs
        }
        Format::Edgelist => {
            if text.lines().all(|l| l.trim().is_empty() || l.trim().starts_with('#')) {
                Vec::new()
            } else {
                let g = parse_edge_list(&text).map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
                let id = input
                    .input
                    .as_ref()
                    .and_then(|p| p.file_name())
                    .map_or_else(|| "stdin".to_string(), |s| s.to_string_lossy().into_owned());
                vec![(id, g)]
            }
        }
    };
    if graphs.is_empty() {
        return Err(Failure::new(EXIT_USAGE, "empty input: no graphs to process"));
    }
    Ok(graphs)
}

fn caro_pepper_text(g: &Graph) -> String {
    caro_pepper_bound::<Rational>(g).map_or_else(|_| "-".to_string(), |v| v.to_string())
}

fn collect_rows(graphs: &[(String, Graph)], budget: u64) -> Result<Vec<InvariantRow>, Failure> {
    conjecture::compute_rows(graphs, budget)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .map_err(|u| Failure::new(EXIT_BUDGET, format!("graph {}: {}", u.id, u.reason)))
}

fn cmd_solve(input: &InputArgs, stdin: &mut dyn Read, csv: bool, out: &mut String) -> Outcome {
    let graphs = read_graphs(input, stdin)?;
    let rows = collect_rows(&graphs, input.budget)?;
    if csv {
        let _ = writeln!(out, "{},caro_pepper", InvariantRow::CSV_HEADER);
    }
    for (row, (_, g)) in rows.iter().zip(&graphs) {
        let cp = caro_pepper_text(g);
        if csv {
            let _ = writeln!(out, "{},{cp}", row.to_csv());
        } else {
            let _ = writeln!(
                out,
                "{} n={} maxdeg={} mindeg={} alpha={} beta={} z={} clawfree={} caro_pepper={cp}",
                row.id, row.n, row.max_degree, row.min_degree, row.alpha, row.beta, row.z, row.claw_free
            );
        }
    }
    Ok(EXIT_OK)
}

fn construction_code(e: &ConstructionError) -> i32 {
    match e {
        ConstructionError::Budget(_) => EXIT_BUDGET,
        ConstructionError::Invariant(_) => EXIT_THEOREM,
        ConstructionError::Cover(_) => EXIT_USAGE,
        ConstructionError::NotClawFree(_)
        | ConstructionError::Disconnected
        | ConstructionError::Trivial
        | ConstructionError::MaxDegreeTooSmall(_) => EXIT_HYPOTHESIS,
    }
}

fn cmd_construct(input: &InputArgs, stdin: &mut dyn Read, mode: Mode, out: &mut String) -> Outcome {
    let graphs = read_graphs(input, stdin)?;
    for (id, g) in &graphs {
        let budget = Budget::new(input.budget);
        let report = match mode {
            Mode::Clawfree => constructive::clawfree_forcing_set(g, &budget),
            Mode::DeltaBound => constructive::delta_bound_forcing_set(g, &budget),
        }
        .map_err(|e| Failure::new(construction_code(&e), format!("graph {id}: {e}")))?;
        out.push_str(&report.to_text(id));
        if !report.valid {
            return Err(Failure::new(EXIT_THEOREM, format!("graph {id}: constructed set is not valid")));
        }
    }
    Ok(EXIT_OK)
}

fn emit_family(spec: &FamilySpec, out: &mut String) -> Outcome {
    let g = spec
        .build()
        .map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
    let _ = writeln!(out, "{}", serialize_graph6(&g));
    let _ = write!(out, "# family={spec} n={}", g.n());
    if let Some(e) = spec.expected() {
        let _ = write!(out, " expected z={} beta={}", e.z, e.beta);
    }
    out.push('\n');
    Ok(EXIT_OK)
}

fn cmd_gen(family: GenCommand, out: &mut String) -> Outcome {
    let spec = match family {
        GenCommand::Construction1 { n, p } => FamilySpec::Construction1 { clique: n, pendants: p },
        GenCommand::Construction2 { k, sizes } => {
            if sizes.len() != k {
                return Err(Failure::new(
                    EXIT_USAGE,
                    format!("expected {k} clique sizes, got {}", sizes.len()),
                ));
            }
            FamilySpec::Construction2 { sizes }
        }
        GenCommand::Star { k } => FamilySpec::Star { leaves: k },
        GenCommand::Tstar { k, ops } => FamilySpec::TStar { k, ops },
        GenCommand::Gstar { ops } => FamilySpec::GStar { ops },
        GenCommand::Klsva { k, ops } => FamilySpec::KLsvaChain { k, ops },
        GenCommand::Join { g, h } => {
            let parse = |s: &str| parse_graph6(s).map_err(|e| Failure::new(EXIT_USAGE, format!("{s}: {e}")));
            let joined = families::join(&parse(&g)?, &parse(&h)?)
                .map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
            let _ = writeln!(out, "{}", serialize_graph6(&joined));
            let _ = writeln!(out, "# family=join({g};{h}) n={}", joined.n());
            return Ok(EXIT_OK);
        }
        GenCommand::Random { n, p, count, seed } => {
            if !(1..=crate::MAX_VERTICES).contains(&n) {
                return Err(Failure::new(EXIT_USAGE, format!("order {n} out of range")));
            }
            if !(0.0..=1.0).contains(&p) {
                return Err(Failure::new(EXIT_USAGE, format!("edge probability {p} out of range")));
            }
            let _ = writeln!(out, "# seed={seed} n={n} p={p} count={count}");
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                let edges: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|_| rng.gen_bool(p))
                    .collect();
                let g = Graph::from_edges(n, edges).expect("valid random graph");
                let _ = writeln!(out, "{}", serialize_graph6(&g));
            }
            return Ok(EXIT_OK);
        }
    };
    emit_family(&spec, out)
}

fn cmd_verify(input: &InputArgs, stdin: &mut dyn Read, out: &mut String) -> Outcome {
    let graphs = read_graphs(input, stdin)?;
    let mut rows = Vec::with_capacity(graphs.len());
    let mut unavailable = Vec::new();
    for r in conjecture::compute_rows(&graphs, input.budget) {
        match r {
            Ok(row) => rows.push(row),
            Err(u) => unavailable.push(u.id),
        }
    }
    let report = check_named_statements(&rows);
    let _ = writeln!(out, "graphs: {} unavailable: {}", graphs.len(), unavailable.len());
    out.push_str(&report.to_string());
    if report.theorem_violation() {
        return Err(Failure::new(
            EXIT_THEOREM,
            "a proven bound failed on the corpus; this indicates an implementation bug",
        ));
    }
    if !unavailable.is_empty() {
        return Err(Failure::new(
            EXIT_BUDGET,
            format!("exceeded search budget on: {}", unavailable.join(" ")),
        ));
    }
    Ok(EXIT_OK)
}

fn cmd_conjecture(
    input: &InputArgs,
    stdin: &mut dyn Read,
    lhs: &str,
    rhs: &str,
    hypothesis: &str,
    csv: bool,
    out: &mut String,
) -> Outcome {
    let usage = |e: conjecture::ConjectureError| Failure::new(EXIT_USAGE, e.to_string());
    let lhs: Invariant = lhs.parse().map_err(usage)?;
    let rhs: Invariant = rhs.parse().map_err(usage)?;
    let hypothesis: Hypothesis = hypothesis.parse().map_err(usage)?;
    let graphs = read_graphs(input, stdin)?;
    let rows = collect_rows(&graphs, input.budget)?;
    if csv {
        let _ = writeln!(out, "{}", InvariantRow::CSV_HEADER);
        for r in &rows {
            let _ = writeln!(out, "{}", r.to_csv());
        }
    }
    let records = fit_linear_upper_bounds::<Rational>(&rows, hypothesis, lhs, rhs).map_err(usage)?;
    for (rank, rec) in records.iter().enumerate() {
        let _ = writeln!(out, "{}. {rec}", rank + 1);
    }
    Ok(EXIT_OK)
}

fn cmd_enumerate(n: usize, connected: bool, out: &mut String) -> Outcome {
    if !(1..=10).contains(&n) {
        return Err(Failure::new(EXIT_USAGE, format!("order {n} out of range 1..=10")));
    }
    let graphs = if connected {
        enumerate::connected_graphs(n)
    } else {
        enumerate::all_graphs(n)
    };
    for g in &graphs {
        let _ = writeln!(out, "{}", serialize_graph6(g));
    }
    Ok(EXIT_OK)
}
