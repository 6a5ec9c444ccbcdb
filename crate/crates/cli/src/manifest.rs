use std::path::Path;

use anyhow::{bail, Context};
use pair014_core::{build_model, parse_dimacs, write_dimacs, Graph, IMaxMode, Model, ModelOptions};
use serde::{Deserialize, Serialize};

pub const MANIFEST_VERSION: u32 = 1;

/// Sidecar written next to an exported model so `verify` can rebuild the
/// exact same model later. The graph is embedded as DIMACS text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub version: u32,
    pub format: String,
    pub use_cuts: bool,
    pub truncate_tangents: bool,
    pub cut_node_budget: u64,
    pub graph: String,
}

impl Manifest {
    pub fn new(g: &Graph, opts: ModelOptions, format: &str) -> Self {
        Manifest {
            version: MANIFEST_VERSION,
            format: format.to_string(),
            use_cuts: opts.use_cuts,
            truncate_tangents: opts.i_max_mode == IMaxMode::Truncated,
            cut_node_budget: opts.cut_node_budget,
            graph: write_dimacs(g),
        }
    }

    pub fn options(&self) -> ModelOptions {
        ModelOptions {
            use_cuts: self.use_cuts,
            i_max_mode: if self.truncate_tangents { IMaxMode::Truncated } else { IMaxMode::Full },
            cut_node_budget: self.cut_node_budget,
        }
    }

    pub fn rebuild(&self) -> anyhow::Result<Model> {
        let g = parse_dimacs(&self.graph).context("manifest graph")?;
        Ok(build_model(&g, self.options())?)
    }

    pub fn read(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let manifest: Manifest =
            serde_json::from_str(&text).with_context(|| format!("parsing manifest {}", path.display()))?;
        if manifest.version != MANIFEST_VERSION {
            bail!("unsupported manifest version {}", manifest.version);
        }
        Ok(manifest)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes") + "\n"
    }
}

/// `model.lp` -> `model.lp.manifest.json`.
pub fn manifest_path(model_path: &Path) -> std::path::PathBuf {
    let mut name = model_path.as_os_str().to_owned();
    name.push(".manifest.json");
    name.into()
}
