//! Batch solving with the summary conventions of the published result
//! tables: per cell, the average time over solved instances, one `*` per
//! instance stopped at a limit, and the average gap of the stopped ones.

use std::io::Write;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use pair014_core::{solve, Graph, Rational, SolveConfig, SolveStatus};

use crate::{percent_1dp, percent_2dp};

/// Table cell an instance contributes to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Random { n: usize, p: String },
    File { name: String },
}

pub struct BenchInstance {
    pub cell: Cell,
    /// Seed for generated instances.
    pub seed: Option<u64>,
    pub name: String,
    pub graph: Graph,
}

#[derive(Clone, Debug, PartialEq)]
pub struct InstanceOutcome {
    pub cell: Cell,
    pub seed: Option<u64>,
    pub name: String,
    pub n: usize,
    pub density: Option<Rational>,
    pub status: SolveStatus,
    pub lower: usize,
    pub upper: usize,
    pub gap: Rational,
    pub time_s: f64,
    pub preprocess_s: f64,
}

/// One aggregated table row.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub cell: Cell,
    pub n: usize,
    pub density: Option<Rational>,
    pub solved: usize,
    pub unsolved: usize,
    /// Mean time over solved instances.
    pub time_s: Option<f64>,
    pub preprocess_s: f64,
    /// Mean gap over unsolved instances; `None` when everything was solved.
    pub gap: Option<Rational>,
}

/// Solves every instance, `jobs` at a time. Results keep input order.
pub fn run(instances: &[BenchInstance], cfg: &SolveConfig, jobs: usize) -> Vec<InstanceOutcome> {
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<InstanceOutcome>>> = Mutex::new(vec![None; instances.len()]);
    std::thread::scope(|scope| {
        for _ in 0..jobs.max(1).min(instances.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(inst) = instances.get(i) else { break };
                let outcome = run_one(inst, cfg);
                results.lock().expect("no poisoned workers")[i] = Some(outcome);
            });
        }
    });
    results.into_inner().expect("no poisoned workers").into_iter().map(|o| o.expect("every instance ran")).collect()
}

fn run_one(inst: &BenchInstance, cfg: &SolveConfig) -> InstanceOutcome {
    let r = solve(&inst.graph, cfg);
    InstanceOutcome {
        cell: inst.cell.clone(),
        seed: inst.seed,
        name: inst.name.clone(),
        n: inst.graph.n(),
        density: inst.graph.density().ok(),
        status: r.status,
        lower: r.lower_bound,
        upper: r.upper_bound,
        gap: r.gap,
        time_s: r.wall_time.as_secs_f64(),
        preprocess_s: r.preprocess_time.as_secs_f64(),
    }
}

/// Groups outcomes by cell in order of first appearance.
pub fn aggregate(outcomes: &[InstanceOutcome]) -> Vec<BenchRow> {
    let mut cells: Vec<Cell> = Vec::new();
    for o in outcomes {
        if !cells.contains(&o.cell) {
            cells.push(o.cell.clone());
        }
    }
    cells
        .into_iter()
        .map(|cell| {
            let group: Vec<&InstanceOutcome> = outcomes.iter().filter(|o| o.cell == cell).collect();
            let solved: Vec<_> = group.iter().filter(|o| o.status == SolveStatus::Optimal).collect();
            let unsolved: Vec<_> = group.iter().filter(|o| o.status != SolveStatus::Optimal).collect();
            let time_s = (!solved.is_empty()).then(|| solved.iter().map(|o| o.time_s).sum::<f64>() / solved.len() as f64);
            let gap = (!unsolved.is_empty()).then(|| {
                unsolved.iter().map(|o| o.gap).sum::<Rational>() / Rational::from_integer(unsolved.len() as i64)
            });
            let densities: Option<Vec<Rational>> = group.iter().map(|o| o.density).collect();
            let density = densities
                .map(|d| d.iter().sum::<Rational>() / Rational::from_integer(d.len() as i64));
            BenchRow {
                n: group[0].n,
                density,
                solved: solved.len(),
                unsolved: unsolved.len(),
                time_s,
                preprocess_s: group.iter().map(|o| o.preprocess_s).sum::<f64>() / group.len() as f64,
                gap,
                cell,
            }
        })
        .collect()
}

impl BenchRow {
    /// Time column: the mean, or one `*` per unsolved instance.
    pub fn time_text(&self, with_cuts: bool) -> String {
        if self.unsolved > 0 {
            return "*".repeat(self.unsolved);
        }
        let mean = self.time_s.map(fmt_time).unwrap_or_default();
        if with_cuts {
            format!("{mean} ({})", fmt_time(self.preprocess_s))
        } else {
            mean
        }
    }

    pub fn gap_text(&self) -> String {
        self.gap.map(percent_2dp).unwrap_or_else(|| "---".to_string())
    }

    pub fn density_text(&self) -> String {
        self.density.map(percent_1dp).unwrap_or_default()
    }
}

fn fmt_time(t: f64) -> String {
    format!("{t:.2}")
}

/// Text rendering: generated cells as `n p`, file instances by name.
pub fn render_table(rows: &[BenchRow], with_cuts: bool) -> String {
    let mut out = String::new();
    let random: Vec<&BenchRow> = rows.iter().filter(|r| matches!(r.cell, Cell::Random { .. })).collect();
    let files: Vec<&BenchRow> = rows.iter().filter(|r| matches!(r.cell, Cell::File { .. })).collect();
    let time_w = if with_cuts { 16 } else { 10 };

    if !random.is_empty() || files.is_empty() {
        out.push_str(&format!("{:>5} {:>6} {:>11} {:>time_w$} {:>8}\n", "n", "p", "Density[%]", "Time[s]", "Gap[%]"));
        let mut last_n = None;
        for row in random {
            let Cell::Random { n, p } = &row.cell else { unreachable!() };
            let n_text = if last_n == Some(*n) { String::new() } else { n.to_string() };
            last_n = Some(*n);
            out.push_str(&format!(
                "{:>5} {:>6} {:>11} {:>time_w$} {:>8}\n",
                n_text,
                p,
                row.density_text(),
                row.time_text(with_cuts),
                row.gap_text()
            ));
        }
    }
    if !files.is_empty() {
        if !out.is_empty() {
            out.push('\n');
        }
        out.push_str(&format!("{:<20} {:>5} {:>11} {:>time_w$} {:>8}\n", "Name", "n", "Density[%]", "Time[s]", "Gap[%]"));
        for row in files {
            let Cell::File { name } = &row.cell else { unreachable!() };
            out.push_str(&format!(
                "{:<20} {:>5} {:>11} {:>time_w$} {:>8}\n",
                name,
                row.n,
                row.density_text(),
                row.time_text(with_cuts),
                row.gap_text()
            ));
        }
    }
    out
}

const CSV_HEADER: [&str; 15] = [
    "kind", "cell", "instance", "n", "p", "seed", "density_percent", "status", "lower", "upper", "time_s",
    "preprocess_time_s", "gap_percent", "solved", "unsolved",
];

fn cell_fields(cell: &Cell) -> (String, String) {
    match cell {
        Cell::Random { n, p } => (format!("n={n} p={p}"), p.clone()),
        Cell::File { name } => (name.clone(), String::new()),
    }
}

/// CSV with one `instance` row per solve and one `cell` row per table row.
/// Cell rows carry the same strings the text table shows.
pub fn write_csv<W: Write>(out: W, outcomes: &[InstanceOutcome], rows: &[BenchRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for o in outcomes {
        let (cell, p) = cell_fields(&o.cell);
        let solved = o.status == SolveStatus::Optimal;
        w.write_record([
            "instance".to_string(),
            cell,
            o.name.clone(),
            o.n.to_string(),
            p,
            o.seed.map(|s| s.to_string()).unwrap_or_default(),
            o.density.map(percent_1dp).unwrap_or_default(),
            o.status.as_str().to_string(),
            o.lower.to_string(),
            o.upper.to_string(),
            format!("{:.6}", o.time_s),
            format!("{:.6}", o.preprocess_s),
            if solved { String::new() } else { percent_2dp(o.gap) },
            usize::from(solved).to_string(),
            usize::from(!solved).to_string(),
        ])?;
    }
    for row in rows {
        let (cell, p) = cell_fields(&row.cell);
        w.write_record([
            "cell".to_string(),
            cell,
            String::new(),
            row.n.to_string(),
            p,
            String::new(),
            row.density_text(),
            if row.unsolved == 0 { "optimal".to_string() } else { "limit".to_string() },
            String::new(),
            String::new(),
            row.time_s.map(fmt_time).unwrap_or_default(),
            fmt_time(row.preprocess_s),
            row.gap.map(percent_2dp).unwrap_or_default(),
            row.solved.to_string(),
            row.unsolved.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
