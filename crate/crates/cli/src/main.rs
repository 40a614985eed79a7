use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};

use chibound::exact::dsatur_coloring;
use chibound::generators::write_corpus;
use chibound::io::{to_dimacs, to_graph6};
use chibound::{
    chromatic_number, clique_number, color_by_class, extremal_family, find_induced, gnp, hunt, is_member, make_basic,
    named_graph, read_graph, run_suite, sample_class, verify_coloring, BasicKind, ChromaticOutcome, ClassName,
    CliqueOutcome, ColorError, ColorOptions, Coloring, Family, Format, Graph, HuntConfig, Membership, Named, Pattern,
    RecordVerdict, SampleConfig, SampleMethod, SolveBudget, StepVerdict, SuiteConfig, Verdict,
};

#[derive(Parser)]
#[command(
    name = "chibound",
    version,
    about = "Exact solvers, pattern detection and bounded colorers for (P3 ∪ P2, X)-free graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named graph, an extremal family member, a G(n,p) graph or class samples.
    Gen(GenArgs),
    /// Search for an induced copy of a pattern.
    Detect {
        #[arg(long)]
        pattern: String,
        #[command(flatten)]
        input: Input,
    },
    /// Test membership in a class; prints a witness when the graph is outside it.
    Member {
        #[arg(long)]
        class: ClassName,
        #[command(flatten)]
        input: Input,
    },
    /// Exact clique number.
    Omega {
        /// Also print a maximum clique.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Exact chromatic number.
    Chi {
        /// Write the optimal coloring here.
        #[arg(long)]
        coloring_out: Option<PathBuf>,
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Color with the class colorer and audit each structural step.
    Color {
        #[arg(long)]
        class: ClassName,
        /// Write the audit trace here.
        #[arg(long)]
        audit_out: Option<PathBuf>,
        /// Write the coloring here.
        #[arg(long)]
        coloring_out: Option<PathBuf>,
        /// Skip the membership test.
        #[arg(long)]
        no_check: bool,
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check that a coloring file is proper for a graph.
    Verify {
        #[arg(long)]
        coloring: PathBuf,
        #[command(flatten)]
        input: Input,
    },
    /// Sample class members, color them and compare against exact values.
    Suite(SuiteArgs),
    /// Hill-climb for large chromatic number inside a class.
    Hunt(HuntArgs),
    /// Time the solvers and colorers on sampled graphs.
    Bench(BenchArgs),
}

#[derive(Args)]
struct Input {
    /// Graph file (.col/.dimacs or .g6).
    graph: PathBuf,
    /// Input format; guessed from the extension when absent.
    #[arg(long)]
    format: Option<Format>,
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    /// Search-node limit per exact solve.
    #[arg(long = "budget", default_value_t = 10_000_000)]
    nodes: u64,
    /// Time limit per exact solve, in seconds.
    #[arg(long, default_value_t = 60.0)]
    time_limit: f64,
}

#[derive(Args)]
struct GenArgs {
    /// Extremal family (kite-even, kite-odd, hammer, k4); other values are read as --named.
    #[arg(long, conflicts_with_all = ["class", "p", "named"])]
    family: Option<String>,
    /// Catalog graph (grotzsch, schlafli_complement, kite, ...) or basic graph (P<k>, C<k>, K<k>, E<k>).
    #[arg(long, conflicts_with_all = ["class", "p"])]
    named: Option<String>,
    /// Family index.
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Sample members of this class.
    #[arg(long, conflicts_with = "family")]
    class: Option<ClassName>,
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability; alone with --n it gives G(n,p), with --class it overrides the sampler default.
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of class samples (graph6 output only when above 1).
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, value_enum, default_value = "growth")]
    method: MethodArg,
    /// Output file; graph6 on stdout when absent.
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
    /// Output format; guessed from the extension when absent.
    #[arg(long)]
    format: Option<Format>,
}

#[derive(clap::ValueEnum, Clone, Copy)]
enum MethodArg {
    Growth,
    Rejection,
}

impl From<MethodArg> for SampleMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Growth => SampleMethod::Growth,
            MethodArg::Rejection => SampleMethod::Rejection,
        }
    }
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long)]
    class: ClassName,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 50)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, value_enum, default_value = "growth")]
    method: MethodArg,
    /// Render a fixed-width table instead of records.
    #[arg(long)]
    table: bool,
    /// Include per-instance runtimes.
    #[arg(long)]
    timing: bool,
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct HuntArgs {
    #[arg(long)]
    class: ClassName,
    /// Order of the sampled start graph.
    #[arg(long, default_value_t = 12)]
    n: usize,
    /// Number of candidate edge toggles.
    #[arg(long, default_value_t = 200)]
    budget: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Start graph file, or a named graph.
    #[arg(long)]
    start: Option<String>,
    /// Write the best graph here.
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
    /// Search-node limit per exact solve.
    #[arg(long, default_value_t = 10_000_000)]
    nodes: u64,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 12)]
    n: usize,
    #[arg(long, default_value_t = 20)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Non-success outcomes mapped onto exit codes.
enum Failure {
    /// A verdict went the wrong way; data was already printed.
    Verdict,
    Usage(String),
    Budget(String),
}

type Outcome = Result<(), Failure>;

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verdict) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("budget: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Gen(a) => gen(a),
        Command::Detect { pattern, input } => detect(&pattern, &input),
        Command::Member { class, input } => member(class, &input),
        Command::Omega { witness, input, budget } => omega(witness, &input, budget),
        Command::Chi {
            coloring_out,
            input,
            budget,
        } => chi(coloring_out.as_deref(), &input, budget),
        Command::Color {
            class,
            audit_out,
            coloring_out,
            no_check,
            input,
            budget,
        } => color(
            class,
            audit_out.as_deref(),
            coloring_out.as_deref(),
            !no_check,
            &input,
            budget,
        ),
        Command::Verify { coloring, input } => verify(&coloring, &input),
        Command::Suite(a) => suite(a),
        Command::Hunt(a) => hunt_cmd(a),
        Command::Bench(a) => bench(a),
    }
}

impl BudgetArgs {
    fn budget(self) -> Result<SolveBudget, Failure> {
        if !(self.time_limit.is_finite() && self.time_limit > 0.0) {
            return Err(usage("time limit must be positive"));
        }
        SolveBudget::new(self.nodes, Duration::from_secs_f64(self.time_limit)).map_err(usage)
    }
}

fn load(input: &Input) -> Result<Graph, Failure> {
    load_path(&input.graph, input.format)
}

fn load_path(path: &Path, format: Option<Format>) -> Result<Graph, Failure> {
    let format = format
        .or_else(|| Format::from_path(path))
        .ok_or_else(|| usage(format!("cannot tell the format of {}; pass --format", path.display())))?;
    read_graph(path, format).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_out(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn encode(g: &Graph, format: Format) -> String {
    match format {
        Format::Dimacs => to_dimacs(g),
        Format::Graph6 => format!("{}\n", to_graph6(g)),
    }
}

/// Catalog names plus `P<k>`, `C<k>`, `K<k>` and `E<k>`.
fn parse_pattern(name: &str) -> Result<Pattern, Failure> {
    if let Ok(n) = Named::from_str(name) {
        return Pattern::named(n).map_err(usage);
    }
    let mut chars = name.chars();
    let head = chars.next().map(|c| c.to_ascii_uppercase());
    let k: Option<usize> = chars.as_str().parse().ok();
    let kind = match (head, k) {
        (Some('P'), Some(k)) => BasicKind::Path(k),
        (Some('C'), Some(k)) => BasicKind::Cycle(k),
        (Some('K'), Some(k)) => BasicKind::Complete(k),
        (Some('E'), Some(k)) => BasicKind::Empty(k),
        _ => return Err(usage(format!("unknown pattern `{name}`"))),
    };
    let g = make_basic(kind).map_err(usage)?;
    let label = g.name().unwrap_or(name).to_string();
    Pattern::new(label, g).map_err(usage)
}

fn graph_by_name(name: &str) -> Result<Graph, Failure> {
    match Named::from_str(name) {
        Ok(n) => Ok(named_graph(n)),
        Err(_) => parse_pattern(name)
            .map(|p| p.graph().clone())
            .map_err(|_| usage(format!("unknown graph or family `{name}`"))),
    }
}

fn gen(a: GenArgs) -> Outcome {
    let graphs: Vec<Graph> = if let Some(name) = &a.named {
        vec![graph_by_name(name)?]
    } else if let Some(name) = &a.family {
        let g = match Family::from_str(name) {
            Ok(f) => extremal_family(f, a.k).map_err(usage)?,
            Err(_) => graph_by_name(name)?,
        };
        vec![g]
    } else if let Some(class) = a.class {
        let n = a.n.ok_or_else(|| usage("--class needs --n"))?;
        let mut out = Vec::with_capacity(a.count);
        for seed in chibound::suite::instance_seeds(a.seed, a.count) {
            let cfg = SampleConfig {
                p: a.p,
                method: a.method.into(),
                ..SampleConfig::new(class, n, seed)
            };
            match sample_class(&cfg) {
                Ok(s) => out.push(s.graph),
                Err(e) => return Err(Failure::Budget(e.to_string())),
            }
        }
        out
    } else if let (Some(n), Some(p)) = (a.n, a.p) {
        vec![gnp(n, p, a.seed).map_err(usage)?]
    } else {
        return Err(usage("gen needs --family, --named, --class with --n, or --n with --p"));
    };

    let format = a
        .format
        .or_else(|| a.output.as_deref().and_then(Format::from_path))
        .unwrap_or(Format::Graph6);
    let text = match (graphs.as_slice(), format) {
        ([g], _) => encode(g, format),
        (_, Format::Graph6) => write_corpus(&[], &graphs),
        (_, Format::Dimacs) => return Err(usage("several graphs need graph6 output")),
    };
    match &a.output {
        Some(path) => write_out(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn detect(pattern: &str, input: &Input) -> Outcome {
    let p = parse_pattern(pattern)?;
    let g = load(input)?;
    match find_induced(&g, &p).map_err(usage)? {
        Some(e) => {
            println!("found pattern={} embedding={}", p.name(), e);
            Ok(())
        }
        None => {
            println!("absent pattern={}", p.name());
            Err(Failure::Verdict)
        }
    }
}

fn member(class: ClassName, input: &Input) -> Outcome {
    let g = load(input)?;
    match is_member(&g, &class.spec()) {
        Membership::Member => {
            println!("member");
            Ok(())
        }
        Membership::Violation { pattern, embedding } => {
            println!("not-member class={class} pattern={pattern} embedding={embedding}");
            Err(Failure::Verdict)
        }
    }
}

fn omega(witness: bool, input: &Input, budget: BudgetArgs) -> Outcome {
    let g = load(input)?;
    if g.order() == 0 {
        println!("0");
        return Ok(());
    }
    match clique_number(&g, &budget.budget()?).map_err(usage)? {
        CliqueOutcome::Exact(w) => {
            println!("{}", w.size());
            if witness {
                println!("{}", join_ids(&w.members));
            }
            Ok(())
        }
        CliqueOutcome::Incomplete { best, upper } => {
            println!("{}..{}", best.size(), upper);
            Err(Failure::Budget("clique search did not finish".into()))
        }
    }
}

fn join_ids(ids: &[usize]) -> String {
    ids.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn chi(coloring_out: Option<&Path>, input: &Input, budget: BudgetArgs) -> Outcome {
    let g = load(input)?;
    if g.order() == 0 {
        println!("0");
        return Ok(());
    }
    match chromatic_number(&g, &budget.budget()?).map_err(usage)? {
        ChromaticOutcome::Exact { chi, coloring } => {
            println!("{chi}");
            if let Some(path) = coloring_out {
                write_out(path, &coloring.to_text())?;
            }
            Ok(())
        }
        ChromaticOutcome::Bounds { lower, upper, .. } => {
            println!("{lower}..{upper}");
            Err(Failure::Budget("chromatic search did not finish".into()))
        }
    }
}

fn color(
    class: ClassName,
    audit_out: Option<&Path>,
    coloring_out: Option<&Path>,
    check_membership: bool,
    input: &Input,
    budget: BudgetArgs,
) -> Outcome {
    let g = load(input)?;
    let opts = ColorOptions {
        budget: budget.budget()?,
        check_membership,
    };
    match color_by_class(class, &g, &opts) {
        Ok(out) => {
            println!(
                "class={class} n={} m={} omega={} bound={} palette={} steps={} soft_gaps={} violated={}",
                g.order(),
                g.size(),
                out.omega,
                out.bound,
                out.coloring.palette(),
                out.trace.steps.len(),
                out.trace.count(StepVerdict::SoftGap),
                out.trace.count(StepVerdict::Violated),
            );
            if let Some(path) = audit_out {
                write_out(path, &out.trace.to_text())?;
            }
            if let Some(path) = coloring_out {
                write_out(path, &out.coloring.to_text())?;
            }
            Ok(())
        }
        Err(ColorError::NotMember {
            class,
            pattern,
            embedding,
        }) => {
            println!("not-member class={class} pattern={pattern} embedding={embedding}");
            Err(Failure::Verdict)
        }
        Err(ColorError::Violated { tag, trace }) => {
            println!("violated tag={tag}");
            eprint!("{}", trace.to_text());
            if let Some(path) = audit_out {
                write_out(path, &trace.to_text())?;
            }
            Err(Failure::Verdict)
        }
        Err(ColorError::Budget { tag }) => Err(Failure::Budget(format!("exact solve did not finish at {tag}"))),
        Err(e @ ColorError::Unsupported(_)) => Err(usage(e)),
        Err(e) => {
            eprintln!("error: {e}");
            Err(Failure::Verdict)
        }
    }
}

fn verify(coloring: &Path, input: &Input) -> Outcome {
    let g = load(input)?;
    let text = fs::read_to_string(coloring).map_err(|e| usage(format!("{}: {e}", coloring.display())))?;
    let c = Coloring::from_text(&text).map_err(|e| usage(format!("{}: {e}", coloring.display())))?;
    match verify_coloring(&g, &c) {
        Ok(Verdict::Proper) => {
            println!("proper palette={}", c.palette());
            Ok(())
        }
        Ok(Verdict::Conflict(u, v)) => {
            println!("conflict u={u} v={v} color={}", c.color(u));
            Err(Failure::Verdict)
        }
        Err(e) => {
            println!("partial covered={} order={}", e.covered, e.order);
            Err(Failure::Verdict)
        }
    }
}

fn suite(a: SuiteArgs) -> Outcome {
    if a.count == 0 {
        return Err(usage("--count must be at least 1"));
    }
    let cfg = SuiteConfig {
        budget: a.budget.budget()?,
        p: a.p,
        method: a.method.into(),
        ..SuiteConfig::new(a.class, a.n, a.count, a.seed)
    };
    let report = run_suite(&cfg);
    let text = if a.table {
        report.to_table()
    } else {
        report.to_text(a.timing)
    };
    match &a.output {
        Some(path) => {
            write_out(path, &text)?;
            println!("{}", report.summary_line());
        }
        None => print!("{text}"),
    }
    if report.count(RecordVerdict::Fail) > 0 {
        Err(Failure::Verdict)
    } else if report.count(RecordVerdict::Unknown) > 0 {
        Err(Failure::Budget(format!(
            "{} instances without a verdict",
            report.count(RecordVerdict::Unknown)
        )))
    } else {
        Ok(())
    }
}

fn hunt_cmd(a: HuntArgs) -> Outcome {
    let mut cfg = HuntConfig::new(a.class, a.n, a.budget, a.seed);
    cfg.budget = SolveBudget::new(a.nodes, SolveBudget::default().time_limit).map_err(usage)?;
    if let Some(start) = &a.start {
        cfg.start = Some(match Named::from_str(start) {
            Ok(n) => named_graph(n),
            Err(_) => load_path(Path::new(start), None)?,
        });
    }
    let r = match hunt(&cfg) {
        Ok(r) => r,
        Err(e @ chibound::generators::HuntError::NotMember { .. }) => {
            println!("not-member {e}");
            return Err(Failure::Verdict);
        }
        Err(e) => return Err(Failure::Budget(e.to_string())),
    };
    println!(
        "class={} n={} m={} omega={} chi={} evaluations={} accepted={} exact_solves={} seed={} noteworthy={} graph6={}",
        a.class,
        r.graph.order(),
        r.graph.size(),
        r.omega,
        r.chi,
        r.evaluations,
        r.accepted,
        r.exact_solves,
        r.seed,
        r.noteworthy,
        to_graph6(&r.graph)
    );
    if r.noteworthy {
        eprintln!("noteworthy: K4-free graph with chi {} > 6", r.chi);
    }
    if let Some(path) = &a.output {
        let format = Format::from_path(path).unwrap_or(Format::Graph6);
        write_out(path, &encode(&r.graph, format))?;
    }
    Ok(())
}

fn bench(a: BenchArgs) -> Outcome {
    let budget = SolveBudget::default();
    let opts = ColorOptions::default();
    let mut out = std::io::stdout().lock();
    for class in [
        ClassName::KiteFree,
        ClassName::HammerFree,
        ClassName::C5Free,
        ClassName::K4Free,
        ClassName::P2K3Free,
    ] {
        let graphs: Vec<Graph> = chibound::suite::instance_seeds(a.seed, a.count)
            .into_iter()
            .filter_map(|s| sample_class(&SampleConfig::new(class, a.n, s)).ok())
            .map(|s| s.graph)
            .collect();
        let time = |f: &dyn Fn(&Graph)| {
            let start = Instant::now();
            for g in &graphs {
                f(g);
            }
            start.elapsed().as_micros() / graphs.len().max(1) as u128
        };
        let omega_us = time(&|g| {
            let _ = clique_number(g, &budget);
        });
        let chi_us = time(&|g| {
            let _ = chromatic_number(g, &budget);
        });
        let dsatur_us = time(&|g| {
            let _ = dsatur_coloring(g);
        });
        let color_us = time(&|g| {
            let _ = color_by_class(class, g, &opts);
        });
        writeln!(
            out,
            "class={class} n={} graphs={} omega_us={omega_us} chi_us={chi_us} dsatur_us={dsatur_us} color_us={color_us}",
            a.n,
            graphs.len()
        )
        .map_err(usage)?;
    }
    Ok(())
}
