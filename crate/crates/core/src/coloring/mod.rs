//! Edge colorings: the [`EdgeColoring`] type, proper-coloring machinery and
//! the constructive srd-colorings for the graph families with known values.

mod construct;
mod proper;

pub use construct::{
    color_auto, color_by_blocks, color_cactus, color_complete, color_complete_multipartite,
    color_general_upper, color_grid, color_regular, color_tree,
};
pub use proper::{bipartite_proper_coloring, exact_chromatic_index, greedy_fan_coloring, ChromaticIndex};

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{content_lines, EdgeId, EdgeSet, Graph};

/// A total map from edge ids to positive colors. Colors need not be
/// contiguous; `num_colors` is the largest color used.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(transparent)]
pub struct EdgeColoring {
    colors: Vec<u32>,
}

impl EdgeColoring {
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if let Some(edge) = colors.iter().position(|&c| c == 0) {
            return Err(Error::ZeroColor { edge });
        }
        Ok(Self { colors })
    }

    pub fn uniform(m: usize, color: u32) -> Self {
        assert!(color > 0);
        Self { colors: vec![color; m] }
    }

    pub fn for_graph(g: &Graph, colors: Vec<u32>) -> Result<Self> {
        let c = Self::new(colors)?;
        c.check_domain(g)?;
        Ok(c)
    }

    pub fn check_domain(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.edge_count() {
            return Err(Error::ColoringMismatch { expected: g.edge_count(), found: self.colors.len() });
        }
        Ok(())
    }

    pub fn color(&self, e: EdgeId) -> u32 {
        self.colors[e]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn num_colors(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn distinct_colors(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// Relabels colors to `1..=k` in order of first appearance.
    pub fn normalized(&self) -> Self {
        let mut map = std::collections::HashMap::new();
        let colors = self
            .colors
            .iter()
            .map(|c| {
                let next = map.len() as u32 + 1;
                *map.entry(*c).or_insert(next)
            })
            .collect();
        Self { colors }
    }

    /// True when the edges of `f` carry pairwise distinct colors.
    pub fn is_rainbow(&self, f: &EdgeSet) -> bool {
        let mut seen = BTreeSet::new();
        f.iter().all(|e| seen.insert(self.colors[e]))
    }
}

/// No vertex has two incident edges of the same color.
pub fn is_proper(g: &Graph, c: &EdgeColoring) -> bool {
    g.vertices().all(|v| {
        let mut seen = BTreeSet::new();
        g.incident_edges(v).all(|e| seen.insert(c.color(e)))
    })
}

/// Parses the coloring file format: optional `colors k` header, then one
/// positive color per line in edge-id order.
pub fn parse_coloring(text: &str) -> Result<EdgeColoring> {
    let mut colors = Vec::new();
    let mut declared = None;
    for (line, content) in content_lines(text) {
        if let Some(rest) = content.strip_prefix("colors") {
            if !colors.is_empty() || declared.is_some() {
                return Err(Error::Parse { line, message: "header must come first".into() });
            }
            let k: u32 = rest.trim().parse().map_err(|_| Error::Parse {
                line,
                message: format!("invalid color count {:?}", rest.trim()),
            })?;
            declared = Some((line, k));
            continue;
        }
        let c: u32 = content
            .parse()
            .map_err(|_| Error::Parse { line, message: format!("invalid color {content:?}") })?;
        if c == 0 {
            return Err(Error::Parse { line, message: "colors must be positive".into() });
        }
        colors.push(c);
    }
    let coloring = EdgeColoring::new(colors)?;
    if let Some((line, k)) = declared {
        if coloring.num_colors() > k {
            return Err(Error::Parse {
                line,
                message: format!("header declares {k} colors but color {} is used", coloring.num_colors()),
            });
        }
    }
    Ok(coloring)
}

pub fn serialize_coloring(c: &EdgeColoring) -> String {
    let mut out = format!("colors {}\n", c.num_colors());
    for &color in c.colors() {
        writeln!(out, "{color}").unwrap();
    }
    out
}
