use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use pair014_core::{
    build_model, gen_gnp, parse_dimacs, parse_sol, solution_from_coloring, solve, verify_solution, write_dimacs,
    write_lp, write_mps, write_sol, BranchRule, Graph, IMaxMode, ModelOptions, SolveConfig, SolveStatus,
    DEFAULT_NODE_BUDGET,
};
use pair014_cli::bench::{self, BenchInstance, Cell};
use pair014_cli::manifest::{manifest_path, Manifest};
use pair014_cli::{percent_1dp, report};

#[derive(Parser)]
#[command(name = "pair014", version, about = "Graph coloring through the pair-variable MILP formulation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write `count` G(n,p) instances with seeds seed..seed+count-1 as DIMACS files.
    Gen {
        n: usize,
        p: f64,
        seed: u64,
        count: u64,
        out_dir: PathBuf,
    },
    /// Build the MILP for a DIMACS graph and write it as LP or MPS.
    Build(ExportArgs),
    /// Same as `build`.
    Export(ExportArgs),
    /// Solve a DIMACS graph with the built-in branch and bound.
    Solve(SolveArgs),
    /// Check a solution file against a rebuilt model.
    Verify(VerifyArgs),
    /// Solve a batch of instances and print the summary table.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Lp,
    Mps,
}

#[derive(Clone, Copy, ValueEnum)]
enum Branching {
    CommonNeighbors,
    CommonNonNeighbors,
    First,
}

impl From<Branching> for BranchRule {
    fn from(b: Branching) -> Self {
        match b {
            Branching::CommonNeighbors => BranchRule::CommonNeighbors,
            Branching::CommonNonNeighbors => BranchRule::CommonNonNeighbors,
            Branching::First => BranchRule::First,
        }
    }
}

#[derive(Args, Clone, Copy)]
struct ModelFlags {
    /// Add the simple clique cuts.
    #[arg(long)]
    cuts: bool,
    /// Use only the tangents that can be active given the cut sizes.
    #[arg(long)]
    truncate: bool,
    /// Search-node budget per vertex when sizing the cuts.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    cut_budget: u64,
}

impl ModelFlags {
    fn options(self) -> ModelOptions {
        ModelOptions {
            use_cuts: self.cuts,
            i_max_mode: if self.truncate { IMaxMode::Truncated } else { IMaxMode::Full },
            cut_node_budget: self.cut_budget,
        }
    }
}

#[derive(Args)]
struct ExportArgs {
    graph: PathBuf,
    #[command(flatten)]
    model: ModelFlags,
    #[arg(long, value_enum, default_value_t = Format::Lp)]
    format: Format,
    /// Output file; defaults to the graph path with the format's extension.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    graph: PathBuf,
    /// Wall-clock limit in seconds.
    #[arg(long, default_value_t = 7200.0)]
    time_limit: f64,
    #[arg(long)]
    node_limit: Option<u64>,
    #[command(flatten)]
    model: ModelFlags,
    #[arg(long, value_enum, default_value_t = Branching::CommonNeighbors)]
    branching: Branching,
    /// Write the incumbent as a .sol file for the matching model, plus its manifest.
    #[arg(long)]
    sol_out: Option<PathBuf>,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Manifest written next to an exported model.
    #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
    manifest: Option<PathBuf>,
    /// Rebuild the model from this graph instead of a manifest.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[command(flatten)]
    model: ModelFlags,
    #[arg(long)]
    sol: PathBuf,
    #[arg(long, default_value_t = pair014_core::DEFAULT_TOLERANCE)]
    tol: f64,
}

#[derive(Args)]
struct BenchArgs {
    /// DIMACS instance files, one table row each.
    files: Vec<PathBuf>,
    /// Generated cell as N:P:SEEDS, where SEEDS is `a-b` (inclusive) or a comma list.
    #[arg(long = "cell", value_name = "N:P:SEEDS")]
    cells: Vec<String>,
    #[arg(long)]
    cuts: bool,
    #[arg(long, default_value_t = 7200.0)]
    time_limit: f64,
    #[arg(long)]
    node_limit: Option<u64>,
    /// Concurrent solves; defaults to PAIR014_THREADS or 1.
    #[arg(long)]
    jobs: Option<usize>,
    /// Also write the CSV here; `-` for stdout.
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn main() -> ExitCode {
    env_logger::Builder::new().filter_level(log::LevelFilter::Warn).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Gen { n, p, seed, count, out_dir } => cmd_gen(n, p, seed, count, &out_dir),
        Command::Build(a) | Command::Export(a) => cmd_export(&a),
        Command::Solve(a) => cmd_solve(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Bench(a) => cmd_bench(&a),
    }
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_dimacs(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_file(path: &Path, contents: &str) -> anyhow::Result<()> {
    std::fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn time_limit(secs: f64) -> anyhow::Result<Duration> {
    Duration::try_from_secs_f64(secs).map_err(|_| anyhow::anyhow!("invalid time limit {secs}"))
}

fn cmd_gen(n: usize, p: f64, seed: u64, count: u64, out_dir: &Path) -> anyhow::Result<ExitCode> {
    std::fs::create_dir_all(out_dir).with_context(|| format!("creating {}", out_dir.display()))?;
    println!("{:<28} {:>5} {:>6} {:>20} {:>7} {:>11}", "file", "n", "p", "seed", "edges", "density[%]");
    for s in (0..count).map(|i| seed + i) {
        let g = gen_gnp(n, p, s)?;
        let path = out_dir.join(format!("gnp_{n}_{p}_{s}.col"));
        write_file(&path, &write_dimacs(&g))?;
        let density = g.density().map(percent_1dp).unwrap_or_else(|_| "-".into());
        let name = path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
        println!("{name:<28} {n:>5} {p:>6} {s:>20} {:>7} {density:>11}", g.num_edges());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_export(a: &ExportArgs) -> anyhow::Result<ExitCode> {
    let g = read_graph(&a.graph)?;
    let m = build_model(&g, a.model.options())?;
    let (text, ext) = match a.format {
        Format::Lp => (write_lp(&m), "lp"),
        Format::Mps => (write_mps(&m), "mps"),
    };
    let out = a.out.clone().unwrap_or_else(|| a.graph.with_extension(ext));
    write_file(&out, &text)?;
    write_file(&manifest_path(&out), &Manifest::new(&g, a.model.options(), ext).to_json())?;
    let preprocess = m.cut_report().map(|r| r.preprocess_time.as_secs_f64());
    println!("wrote {}", out.display());
    print!("{}", report::stats_text(&m.stats(), preprocess));
    Ok(ExitCode::SUCCESS)
}

fn cmd_solve(a: &SolveArgs) -> anyhow::Result<ExitCode> {
    let g = read_graph(&a.graph)?;
    let cfg = SolveConfig {
        time_limit: time_limit(a.time_limit)?,
        node_limit: a.node_limit,
        use_cuts: a.model.cuts,
        branching: a.branching.into(),
        cut_node_budget: a.model.cut_budget,
    };
    let r = solve(&g, &cfg);
    if a.json {
        println!("{}", serde_json::to_string_pretty(&report::solve_json(&r))?);
    } else {
        print!("{}", report::solve_text(&r, a.model.cuts));
    }
    if let Some(path) = &a.sol_out {
        let m = build_model(&g, a.model.options())?;
        let sol = solution_from_coloring(&m, &r.incumbent)?;
        write_file(path, &write_sol(&sol))?;
        write_file(&manifest_path(path), &Manifest::new(&g, a.model.options(), "sol").to_json())?;
    }
    Ok(match r.status {
        SolveStatus::Optimal => ExitCode::SUCCESS,
        SolveStatus::TimeLimit | SolveStatus::NodeLimit => ExitCode::from(2),
    })
}

fn cmd_verify(a: &VerifyArgs) -> anyhow::Result<ExitCode> {
    let m = match (&a.manifest, &a.graph) {
        (Some(path), _) => Manifest::read(path)?.rebuild()?,
        (None, Some(graph)) => build_model(&read_graph(graph)?, a.model.options())?,
        (None, None) => bail!("either --manifest or --graph is required"),
    };
    let text = std::fs::read_to_string(&a.sol).with_context(|| format!("reading {}", a.sol.display()))?;
    let sol = parse_sol(&text).with_context(|| format!("parsing {}", a.sol.display()))?;
    let r = verify_solution(&m, &sol, a.tol).context("verification failed")?;
    println!("feasible, {} colors", r.colors);
    if !r.unknown.is_empty() {
        println!("ignored unknown variables: {}", r.unknown.join(" "));
    }
    if !r.missing.is_empty() {
        println!("variables read as 0: {}", r.missing.len());
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_cell(spec: &str) -> anyhow::Result<(usize, String, Vec<u64>)> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [n, p, seeds] = parts[..] else { bail!("cell `{spec}` is not N:P:SEEDS") };
    let n: usize = n.parse().with_context(|| format!("cell `{spec}`: bad n"))?;
    p.parse::<f64>().with_context(|| format!("cell `{spec}`: bad p"))?;
    let seeds = if let Some((lo, hi)) = seeds.split_once('-') {
        let lo: u64 = lo.parse().with_context(|| format!("cell `{spec}`: bad seed range"))?;
        let hi: u64 = hi.parse().with_context(|| format!("cell `{spec}`: bad seed range"))?;
        (lo..=hi).collect()
    } else {
        seeds
            .split(',')
            .map(|s| s.parse().with_context(|| format!("cell `{spec}`: bad seed `{s}`")))
            .collect::<anyhow::Result<_>>()?
    };
    Ok((n, p.to_string(), seeds))
}

fn default_jobs() -> anyhow::Result<usize> {
    match std::env::var("PAIR014_THREADS") {
        Ok(v) => v.parse().with_context(|| format!("PAIR014_THREADS=`{v}`")),
        Err(_) => Ok(1),
    }
}

fn cmd_bench(a: &BenchArgs) -> anyhow::Result<ExitCode> {
    let mut instances = Vec::new();
    for spec in &a.cells {
        let (n, p, seeds) = parse_cell(spec)?;
        let prob: f64 = p.parse()?;
        for seed in seeds {
            instances.push(BenchInstance {
                cell: Cell::Random { n, p: p.clone() },
                seed: Some(seed),
                name: format!("gnp_{n}_{p}_{seed}"),
                graph: gen_gnp(n, prob, seed)?,
            });
        }
    }
    for path in &a.files {
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        instances.push(BenchInstance {
            cell: Cell::File { name: name.clone() },
            seed: None,
            name,
            graph: read_graph(path)?,
        });
    }
    let cfg = SolveConfig {
        time_limit: time_limit(a.time_limit)?,
        node_limit: a.node_limit,
        use_cuts: a.cuts,
        ..SolveConfig::default()
    };
    let jobs = match a.jobs {
        Some(j) => j,
        None => default_jobs()?,
    };
    let outcomes = bench::run(&instances, &cfg, jobs);
    let rows = bench::aggregate(&outcomes);
    print!("{}", bench::render_table(&rows, a.cuts));
    match a.csv.as_deref() {
        Some(p) if p == Path::new("-") => {
            println!();
            bench::write_csv(std::io::stdout().lock(), &outcomes, &rows)?;
        }
        Some(p) => {
            let file = std::fs::File::create(p).with_context(|| format!("creating {}", p.display()))?;
            bench::write_csv(file, &outcomes, &rows)?;
        }
        None => {}
    }
    Ok(ExitCode::SUCCESS)
}
