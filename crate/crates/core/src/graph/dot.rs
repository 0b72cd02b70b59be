use std::collections::BTreeMap;
use std::fmt::Write;

use super::Graph;
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};

const PALETTE: [&str; 12] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#000000", "#aec7e8",
];

/// Optional names for vertices and colors in DOT output.
#[derive(Clone, Debug, Default)]
pub struct DotLabels {
    pub vertex_names: Option<Vec<String>>,
    pub color_names: BTreeMap<u32, String>,
}

pub fn export_dot(g: &Graph, coloring: Option<&EdgeColoring>) -> Result<String> {
    export_dot_labeled(g, coloring, &DotLabels::default())
}

pub fn export_dot_labeled(
    g: &Graph,
    coloring: Option<&EdgeColoring>,
    labels: &DotLabels,
) -> Result<String> {
    if let Some(c) = coloring {
        if c.len() != g.edge_count() {
            return Err(Error::ColoringMismatch { expected: g.edge_count(), found: c.len() });
        }
    }
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        match labels.vertex_names.as_ref().and_then(|names| names.get(v)) {
            Some(name) => writeln!(out, "  {v} [label=\"{name}\"];").unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        match coloring {
            Some(c) => {
                let color = c.color(e);
                let label = labels.color_names.get(&color).cloned().unwrap_or_else(|| color.to_string());
                let pen = PALETTE[(color as usize - 1) % PALETTE.len()];
                writeln!(out, "  {a} -- {b} [id=\"e{e}\", label=\"{label}\", color=\"{pen}\"];").unwrap();
            }
            None => writeln!(out, "  {a} -- {b} [id=\"e{e}\"];").unwrap(),
        }
    }
    out.push_str("}\n");
    Ok(out)
}
