use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use spantd::budget;
use spantd::decomposition::{write_td, DecompositionError};
use spantd::graph::{read_gr, Graph};
use spantd::paths::{max_disjoint_paths, PathsError, Terminals};
use spantd::separators::{balanced_x_separator, SeparatorAudit};
use spantd::solvers::{solve_set, solve_size, Problem, SolveError, Witness};
use spantd_oracle::flow::maxflow_disjoint;
use spantd_oracle::solve::{brute_solve, OracleProblem};
use spantd_oracle::td::{td_validate, Decomposition};
use spantd_oracle::{gen, OracleGraph};

/// Space-lean tree decompositions and dynamic programs for graphs of small
/// treewidth. Vertices are 1-indexed on the command line, as in `.gr` files.
#[derive(Parser)]
#[command(name = "spantd", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream a tree decomposition of width at most 8k+6 to a `.td` file.
    Td(TdArgs),
    /// Up to k good internally disjoint s-t paths, one per line.
    Paths(PathsArgs),
    /// A balanced X-separator of at most 2k+2 vertices.
    Separator(SeparatorArgs),
    /// Optimise a problem over the streamed decomposition.
    Solve(SolveArgs),
    /// Check a result against the brute-force oracles.
    Oracle(OracleArgs),
    /// Write a generated graph in `.gr` format.
    Gen(GenArgs),
}

#[derive(Args)]
struct TdArgs {
    #[arg(long)]
    gr: PathBuf,
    #[arg(long)]
    k: usize,
    /// Output file; without it the decomposition is only checked for existence.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Audit the written file: coverage, connectedness, width, shape, height.
    #[arg(long, requires = "out")]
    validate: bool,
}

#[derive(Args)]
struct PathsArgs {
    #[arg(long)]
    gr: PathBuf,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    t: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Args)]
struct SeparatorArgs {
    #[arg(long)]
    gr: PathBuf,
    #[arg(long)]
    k: usize,
    /// Vertices to balance, comma separated; empty balances vertices only.
    #[arg(long, value_delimiter = ',')]
    x: Vec<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProblemKind {
    Vc,
    Is,
    Ds,
    Maxcut,
    Qcolor,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    gr: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum)]
    problem: ProblemKind,
    /// Colours for `qcolor`.
    #[arg(long, default_value_t = 3)]
    q: usize,
    /// Also print an optimal solution.
    #[arg(long)]
    witness: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Td,
    Paths,
    Solve,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    gr: PathBuf,
    #[arg(long, value_enum)]
    check: CheckKind,
    #[arg(long)]
    k: usize,
    /// Decomposition to audit for `--check td`; computed when absent.
    #[arg(long)]
    td: Option<PathBuf>,
    #[arg(long, required_if_eq("check", "paths"))]
    s: Option<usize>,
    #[arg(long, required_if_eq("check", "paths"))]
    t: Option<usize>,
    #[arg(long, value_enum, required_if_eq("check", "solve"))]
    problem: Option<ProblemKind>,
    #[arg(long, default_value_t = 3)]
    q: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Ktree,
    Gnp,
    Path,
    Cycle,
    Grid,
}

#[derive(Args)]
struct GenArgs {
    kind: GenKind,
    #[arg(long, default_value_t = 10)]
    n: usize,
    /// Width of a k-tree.
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Edge probability for `gnp`; edge deletion probability for `ktree`.
    #[arg(long, default_value_t = 0.0)]
    p: f64,
    #[arg(long, default_value_t = 3)]
    rows: usize,
    #[arg(long, default_value_t = 3)]
    cols: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(error: E) -> Self {
        let error = error.into();
        let too_wide = error.chain().any(|cause| {
            matches!(cause.downcast_ref::<DecompositionError>(), Some(DecompositionError::TreewidthExceeded(_)))
                || matches!(cause.downcast_ref::<SolveError>(), Some(SolveError::Decomposition(DecompositionError::TreewidthExceeded(_))))
        });
        Failure { code: if too_wide { 2 } else { 1 }, error }
    }
}

fn too_wide(k: usize) -> Failure {
    Failure { code: 2, error: DecompositionError::TreewidthExceeded(k).into() }
}

fn load(path: &Path) -> anyhow::Result<Graph> {
    read_gr(path).with_context(|| format!("reading {}", path.display()))
}

fn load_oracle(path: &Path) -> anyhow::Result<OracleGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(OracleGraph::parse_gr(&text)?)
}

/// A 1-indexed vertex argument as a 0-based id.
fn vertex(g_n: usize, v: usize) -> anyhow::Result<usize> {
    if v == 0 || v > g_n {
        bail!("vertex {v} outside 1..={g_n}");
    }
    Ok(v - 1)
}

fn problem(kind: ProblemKind, q: usize) -> Problem {
    match kind {
        ProblemKind::Vc => Problem::VertexCover,
        ProblemKind::Is => Problem::IndependentSet,
        ProblemKind::Ds => Problem::DominatingSet,
        ProblemKind::Maxcut => Problem::MaxCut,
        ProblemKind::Qcolor => Problem::Colouring(q),
    }
}

fn oracle_problem(kind: ProblemKind, q: usize) -> OracleProblem {
    match kind {
        ProblemKind::Vc => OracleProblem::VertexCover,
        ProblemKind::Is => OracleProblem::IndependentSet,
        ProblemKind::Ds => OracleProblem::DominatingSet,
        ProblemKind::Maxcut => OracleProblem::MaxCut,
        ProblemKind::Qcolor => OracleProblem::Coloring(q),
    }
}

fn joined(vertices: impl IntoIterator<Item = usize>) -> String {
    vertices.into_iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn height_bound(n: usize) -> usize {
    (3.0 * (n.max(1) as f64).log2() + 2.0).floor() as usize
}

fn run_td(args: TdArgs, out: &mut impl Write) -> Result<(), Failure> {
    let g = load(&args.gr)?;
    let Some(path) = args.out else {
        spantd::decomposition::emit_td(&mut spantd::decomposition::TdIterator::new(&g, args.k)?, io::sink())?;
        writeln!(out, "treewidth of G is at most {}", 8 * args.k + 6)?;
        return Ok(());
    };
    let summary = write_td(&g, args.k, &path)?;
    log::info!("{summary:?}");
    if args.validate {
        let og = load_oracle(&args.gr)?;
        let td = Decomposition::parse(&fs::read_to_string(&path)?)?;
        let report = td_validate(&td, &og, 8 * args.k + 6, height_bound(g.n()));
        writeln!(out, "{report:?}")?;
        if !report.all() {
            return Err(anyhow::anyhow!("{} fails validation", path.display()).into());
        }
    }
    Ok(())
}

fn run_paths(args: PathsArgs, out: &mut impl Write) -> Result<(), Failure> {
    let g = load(&args.gr)?;
    let (s, t) = (vertex(g.n(), args.s)?, vertex(g.n(), args.t)?);
    let inst = Terminals::new(&g, s, t)?;
    let witness = max_disjoint_paths(&g, s, t, args.k)?;
    for path in witness.paths(&inst).map_err(anyhow::Error::from)? {
        writeln!(out, "{}", joined(path))?;
    }
    Ok(())
}

fn run_separator(args: SeparatorArgs, out: &mut impl Write) -> Result<(), Failure> {
    let g = load(&args.gr)?;
    let mut x = args.x.iter().map(|&v| vertex(g.n(), v)).collect::<anyhow::Result<Vec<_>>>()?;
    x.sort_unstable();
    x.dedup();
    let Some(sep) = balanced_x_separator(&g, &x, args.k)? else {
        return Err(too_wide(args.k));
    };
    let audit = SeparatorAudit::of(&g, &x, sep.set());
    log::info!("{audit:?}");
    writeln!(out, "{}", joined(sep.vertices()))?;
    Ok(())
}

fn run_solve(args: SolveArgs, out: &mut impl Write) -> Result<(), Failure> {
    let g = load(&args.gr)?;
    let p = problem(args.problem, args.q);
    if !args.witness {
        let (value, stats) = solve_size(&g, args.k, p)?;
        log::info!("{stats:?}");
        writeln!(out, "value {value}")?;
        return Ok(());
    }
    let (value, witness, stats) = solve_set(&g, args.k, p)?;
    log::info!("{stats:?}");
    writeln!(out, "value {value}")?;
    match witness {
        Witness::Set(set) | Witness::Side(set) => writeln!(out, "witness {}", joined(set))?,
        Witness::Colouring(colours) => {
            let shown: Vec<String> = colours.iter().map(usize::to_string).collect();
            writeln!(out, "witness {}", shown.join(" "))?
        }
        Witness::None => writeln!(out, "witness none")?,
    }
    Ok(())
}

fn run_oracle(args: OracleArgs, out: &mut impl Write) -> Result<(), Failure> {
    let og = load_oracle(&args.gr)?;
    let g = load(&args.gr)?;
    let agree = match args.check {
        CheckKind::Td => {
            let text = match &args.td {
                Some(path) => fs::read_to_string(path)?,
                None => spantd::decomposition::collect_td(&g, args.k)?.to_td_string(),
            };
            let report = td_validate(&Decomposition::parse(&text)?, &og, 8 * args.k + 6, height_bound(g.n()));
            writeln!(out, "{report:?}")?;
            report.all()
        }
        CheckKind::Paths => {
            let (s, t) = (vertex(g.n(), args.s.unwrap_or(0))?, vertex(g.n(), args.t.unwrap_or(0))?);
            let found = match max_disjoint_paths(&g, s, t, args.k) {
                Ok(w) => w.count(),
                Err(PathsError::ConnectivityExceeds(k)) => k,
                Err(e) => return Err(e.into()),
            };
            let (flow, _) = maxflow_disjoint(&og, s, t);
            let expected = flow.min(args.k);
            writeln!(out, "paths {found} oracle {expected}")?;
            found == expected
        }
        CheckKind::Solve => {
            let kind = args.problem.expect("required by clap");
            let (value, _) = solve_size(&g, args.k, problem(kind, args.q))?;
            let expected = brute_solve(&og, oracle_problem(kind, args.q))?;
            writeln!(out, "value {value} oracle {expected}")?;
            value == expected
        }
    };
    if !agree {
        return Err(anyhow::anyhow!("disagreement with the oracle").into());
    }
    writeln!(out, "agree")?;
    Ok(())
}

fn run_gen(args: GenArgs, out: &mut impl Write) -> Result<(), Failure> {
    let mut rng = gen::rng(args.seed);
    if !(0.0..=1.0).contains(&args.p) {
        return Err(anyhow::anyhow!("probability {} outside [0, 1]", args.p).into());
    }
    let (g, width) = match args.kind {
        GenKind::Ktree => (gen::partial_ktree(args.n, args.k, args.p, &mut rng), Some(args.k)),
        GenKind::Gnp => (gen::gnp(args.n, args.p, &mut rng), None),
        GenKind::Path => (gen::path(args.n), Some(1.min(args.n.saturating_sub(1)))),
        GenKind::Cycle if args.n < 3 => return Err(anyhow::anyhow!("a cycle needs at least 3 vertices").into()),
        GenKind::Cycle => (gen::cycle(args.n), Some(2)),
        GenKind::Grid => (gen::grid(args.rows, args.cols), Some(args.rows.min(args.cols))),
    };
    let mut text = String::new();
    if let Some(width) = width {
        text.push_str(&format!("c width at most {width}\n"));
    }
    text.push_str(&g.to_gr());
    match args.out {
        Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // exit 2 is reserved for graphs that are too wide
            return ExitCode::from(u8::from(e.use_stderr()));
        }
    };
    let mut stdout = io::stdout().lock();
    let result = match cli.command {
        Command::Td(args) => run_td(args, &mut stdout),
        Command::Paths(args) => run_paths(args, &mut stdout),
        Command::Separator(args) => run_separator(args, &mut stdout),
        Command::Solve(args) => run_solve(args, &mut stdout),
        Command::Oracle(args) => run_oracle(args, &mut stdout),
        Command::Gen(args) => run_gen(args, &mut stdout),
    };
    if std::env::var("SPANTD_BITS").is_ok_and(|v| v == "1") {
        eprint!("{}", budget::report());
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
    }
}
