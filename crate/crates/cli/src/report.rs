use std::fmt::Write;

use pair014_core::{ModelStats, SolveReport, SolveStatus};
use serde_json::json;

use crate::percent_2dp;

/// Gap column text: `---` when solved, otherwise the percentage.
pub fn gap_text(r: &SolveReport) -> String {
    match r.status {
        SolveStatus::Optimal => "---".to_string(),
        _ => format!("{}%", percent_2dp(r.gap)),
    }
}

pub fn solve_text(r: &SolveReport, with_cuts: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}, gap {}", r.status.as_str(), r.upper_bound, gap_text(r));
    let _ = writeln!(out, "lower bound  {}", r.lower_bound);
    let _ = writeln!(out, "upper bound  {}", r.upper_bound);
    let time = r.wall_time.as_secs_f64();
    if with_cuts {
        let _ = writeln!(out, "time [s]     {time:.2} ({:.2})", r.preprocess_time.as_secs_f64());
    } else {
        let _ = writeln!(out, "time [s]     {time:.2}");
    }
    let _ = writeln!(out, "nodes        {}", r.nodes);
    let colors: Vec<String> = r.incumbent.colors().iter().map(|c| c.to_string()).collect();
    let _ = writeln!(out, "coloring     {}", colors.join(" "));
    out
}

pub fn solve_json(r: &SolveReport) -> serde_json::Value {
    json!({
        "status": r.status.as_str(),
        "lower_bound": r.lower_bound,
        "upper_bound": r.upper_bound,
        "gap": format!("{}", r.gap),
        "gap_percent": if r.status == SolveStatus::Optimal { None } else { Some(percent_2dp(r.gap)) },
        "wall_time_s": r.wall_time.as_secs_f64(),
        "preprocess_time_s": r.preprocess_time.as_secs_f64(),
        "nodes": r.nodes,
        "coloring": r.incumbent.colors(),
    })
}

pub fn stats_text(stats: &ModelStats, preprocess: Option<f64>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "binary x_uv      {}", stats.pair_vars);
    let _ = writeln!(out, "continuous f_v   {}", stats.fv_vars);
    let _ = writeln!(out, "triangle rows    {}", stats.triangle);
    let _ = writeln!(out, "tangent rows     {}", stats.tangent);
    let _ = writeln!(out, "cut rows         {}", stats.cut);
    if let Some(t) = preprocess {
        let _ = writeln!(out, "cut preprocessing [s] ({t:.2})");
    }
    out
}
