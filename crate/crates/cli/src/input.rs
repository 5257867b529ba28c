//! Graph input: edge-list or graph6 files, or generator specs.

use std::path::Path;

use clap::ValueEnum;
use spectre_core::generators::GeneratorSpec;
use spectre_core::graph::{parse_edge_list, parse_graph6};
use spectre_core::Graph;

use crate::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub(crate) enum InputFormat {
    Auto,
    EdgeList,
    Graph6,
}

pub(crate) struct Loaded {
    pub graph: Graph,
    pub seed: Option<u64>,
}

fn looks_like_graph6(text: &str) -> bool {
    let body = text.trim();
    if body.starts_with(">>graph6<<") {
        return true;
    }
    // graph6 is one token of printable characters 63..=126; an edge list
    // always has whitespace-separated integers.
    !body.is_empty() && !body.contains(char::is_whitespace) && body.bytes().all(|b| (63..=126).contains(&b))
}

fn detect(path: &Path, text: &str) -> InputFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6" | "graph6") => InputFormat::Graph6,
        Some("edges" | "el" | "edgelist") => InputFormat::EdgeList,
        _ if looks_like_graph6(text) => InputFormat::Graph6,
        _ => InputFormat::EdgeList,
    }
}

/// Reads `input` as a file if it exists, otherwise as a generator spec.
pub(crate) fn load(input: &str, format: InputFormat) -> CliResult<Loaded> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {input}: {e}")))?;
        let format = match format {
            InputFormat::Auto => detect(path, &text),
            f => f,
        };
        let graph = match format {
            InputFormat::Graph6 => parse_graph6(text.trim()),
            _ => parse_edge_list(&text),
        }
        .map_err(|e| CliError::input(format!("{input}: {e}")))?;
        return Ok(Loaded { graph, seed: None });
    }
    match input.parse::<GeneratorSpec>() {
        Ok(spec) => Ok(Loaded {
            graph: spec.generate()?,
            seed: spec.seed(),
        }),
        Err(e) => Err(CliError::input(format!(
            "`{input}` is neither a readable file nor a generator spec ({e})"
        ))),
    }
}
