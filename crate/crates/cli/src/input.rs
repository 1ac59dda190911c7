use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::Args;
use edom_core::families::{parse_family, FAMILY_HELP};
use edom_core::io::{parse_edge_list, parse_graph6, parse_graph6_lines};
use edom_core::Graph;

use crate::usage;

/// Exactly one graph source.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Edge-list file: header `n m`, then one `u v` pair per line
    #[arg(long)]
    edgelist: Option<PathBuf>,
    /// File whose first non-empty line is a graph6 string
    #[arg(long)]
    g6: Option<PathBuf>,
    /// Named family, e.g. cycle:6 or path:3*path:3
    #[arg(long, help = format!("Named family: {FAMILY_HELP}"))]
    family: Option<String>,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

impl InputArgs {
    pub fn load(&self) -> Result<Graph> {
        if let Some(path) = &self.edgelist {
            return parse_edge_list(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())));
        }
        if let Some(path) = &self.g6 {
            let text = read(path)?;
            let line = text.lines().map(str::trim).find(|l| !l.is_empty());
            let line = line.ok_or_else(|| usage(format!("{}: no graph6 line", path.display())))?;
            return parse_graph6(line).map_err(|e| usage(format!("{}: {e}", path.display())));
        }
        let spec = self.family.as_deref().expect("clap enforces one input");
        parse_family(spec).map_err(|e| usage(e.to_string()))
    }
}

pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    let graphs = parse_graph6_lines(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    if graphs.is_empty() {
        return Err(usage(format!("{}: no graphs", path.display())));
    }
    Ok(graphs)
}
