//! Total colorings, color matrices and the verifier.
//!
//! Colors are positive integers; `0` never denotes a color. In a
//! [`ColorMatrix`] it marks a blank cell, and in a [`TotalColoring`] an
//! uncolored vertex.

mod complete;
mod edge;
mod matrix;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, Vertex};

pub use complete::complete_total;
pub use edge::{
    bipartite_edge_color, edge_color_plus_one, hamiltonian_split, one_factorize,
    one_factorize_with_budget, EdgeColoring, ONE_FACTOR_BUDGET,
};
pub use matrix::{coloring_to_matrix, matrix_to_coloring, ColorMatrix};

pub type Color = u32;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TotalColoring {
    /// Color of each vertex, `0` if uncolored.
    pub vertex_colors: Vec<Color>,
    /// Color of each edge, keyed by normalized `(u, v)`, `u < v`.
    pub edge_colors: BTreeMap<Edge, Color>,
}

impl TotalColoring {
    pub fn new(vertex_colors: Vec<Color>, edge_colors: BTreeMap<Edge, Color>) -> Self {
        TotalColoring {
            vertex_colors,
            edge_colors,
        }
    }

    /// Empty coloring sized for `g`.
    pub fn blank(g: &Graph) -> Self {
        TotalColoring {
            vertex_colors: vec![0; g.vertex_count()],
            edge_colors: BTreeMap::new(),
        }
    }

    pub fn vertex(&self, v: Vertex) -> Color {
        self.vertex_colors.get(v).copied().unwrap_or(0)
    }

    pub fn edge(&self, u: Vertex, v: Vertex) -> Option<Color> {
        self.edge_colors.get(&edge(u, v)).copied()
    }

    pub fn set_edge(&mut self, u: Vertex, v: Vertex, c: Color) {
        self.edge_colors.insert(edge(u, v), c);
    }

    /// Largest color appearing anywhere.
    pub fn palette(&self) -> Color {
        let v = self.vertex_colors.iter().copied().max().unwrap_or(0);
        let e = self.edge_colors.values().copied().max().unwrap_or(0);
        v.max(e)
    }

    /// Number of distinct colors appearing anywhere.
    pub fn colors_used(&self) -> usize {
        self.vertex_colors
            .iter()
            .chain(self.edge_colors.values())
            .filter(|&&c| c != 0)
            .collect::<BTreeSet<_>>()
            .len()
    }

    /// Applies `f` to every color. Used to shift palettes when gluing
    /// colorings together.
    pub fn map_colors(&self, f: impl Fn(Color) -> Color) -> Self {
        TotalColoring {
            vertex_colors: self
                .vertex_colors
                .iter()
                .map(|&c| if c == 0 { 0 } else { f(c) })
                .collect(),
            edge_colors: self.edge_colors.iter().map(|(&e, &c)| (e, f(c))).collect(),
        }
    }

    /// Drops edge colors for pairs that are not edges of `g`; the result is a
    /// total coloring of any spanning subgraph of the original.
    pub fn restrict_to(&self, g: &Graph) -> Self {
        TotalColoring {
            vertex_colors: self.vertex_colors.clone(),
            edge_colors: self
                .edge_colors
                .iter()
                .filter(|(&(u, v), _)| g.has_edge(u, v))
                .map(|(&e, &c)| (e, c))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&TotalColoringJson::from(self)).expect("coloring serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: TotalColoringJson = serde_json::from_str(text)?;
        raw.try_into()
    }
}

/// Wire form: `{"vertices": [c0, c1, ...], "edges": [[u, v, c], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TotalColoringJson {
    pub vertices: Vec<Color>,
    pub edges: Vec<[u64; 3]>,
}

impl From<&TotalColoring> for TotalColoringJson {
    fn from(c: &TotalColoring) -> Self {
        TotalColoringJson {
            vertices: c.vertex_colors.clone(),
            edges: c
                .edge_colors
                .iter()
                .map(|(&(u, v), &col)| [u as u64, v as u64, col as u64])
                .collect(),
        }
    }
}

impl TryFrom<TotalColoringJson> for TotalColoring {
    type Error = Error;

    fn try_from(raw: TotalColoringJson) -> Result<Self> {
        let mut edge_colors = BTreeMap::new();
        for [u, v, c] in raw.edges {
            let c = Color::try_from(c).map_err(|_| Error::Parse(format!("color {c} too large")))?;
            if c == 0 {
                return Err(Error::Parse(format!("edge ({u}, {v}) has color 0")));
            }
            if u == v {
                return Err(Error::Parse(format!("loop ({u}, {v}) in coloring")));
            }
            if edge_colors.insert(edge(u as usize, v as usize), c).is_some() {
                return Err(Error::Parse(format!("edge ({u}, {v}) colored twice")));
            }
        }
        Ok(TotalColoring {
            vertex_colors: raw.vertices,
            edge_colors,
        })
    }
}

/// An element of `V(G) ∪ E(G)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Element {
    Vertex(Vertex),
    Edge(Vertex, Vertex),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// Adjacent vertices share a color.
    VertexVertex,
    /// Edges with a common endpoint share a color.
    EdgeEdge,
    /// A vertex shares a color with an incident edge.
    VertexEdge,
    /// An element of the graph has no color.
    Missing,
    /// A colored element does not belong to the graph.
    Spurious,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witnesses: Vec<Element>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
    pub colors_used: usize,
    pub is_valid: bool,
}

/// Checks `c` against the three total-coloring conditions on `g` and reports
/// every violated pair, plus elements that are uncolored or foreign to `g`.
pub fn verify(g: &Graph, c: &TotalColoring) -> VerificationReport {
    let n = g.vertex_count();
    let mut violations = Vec::new();

    for v in 0..n {
        if c.vertex(v) == 0 {
            violations.push(Violation {
                kind: ViolationKind::Missing,
                witnesses: vec![Element::Vertex(v)],
            });
        }
    }
    for v in n..c.vertex_colors.len() {
        if c.vertex_colors[v] != 0 {
            violations.push(Violation {
                kind: ViolationKind::Spurious,
                witnesses: vec![Element::Vertex(v)],
            });
        }
    }
    for &(u, v) in g.edges() {
        if c.edge(u, v).unwrap_or(0) == 0 {
            violations.push(Violation {
                kind: ViolationKind::Missing,
                witnesses: vec![Element::Edge(u, v)],
            });
        }
    }
    for &(u, v) in c.edge_colors.keys() {
        if !g.has_edge(u, v) {
            violations.push(Violation {
                kind: ViolationKind::Spurious,
                witnesses: vec![Element::Edge(u, v)],
            });
        }
    }

    // (a) adjacent vertices
    for &(u, v) in g.edges() {
        let (cu, cv) = (c.vertex(u), c.vertex(v));
        if cu != 0 && cu == cv {
            violations.push(Violation {
                kind: ViolationKind::VertexVertex,
                witnesses: vec![Element::Vertex(u), Element::Vertex(v)],
            });
        }
    }
    for v in 0..n {
        let cv = c.vertex(v);
        let incident: Vec<(Vertex, Color)> = g
            .neighbors(v)
            .iter()
            .filter_map(|&w| c.edge(v, w).filter(|&col| col != 0).map(|col| (w, col)))
            .collect();
        // (b) edges sharing endpoint v; each pair reported once, at the shared endpoint.
        for (i, &(w1, c1)) in incident.iter().enumerate() {
            for &(w2, c2) in &incident[i + 1..] {
                if c1 == c2 {
                    let (a, b) = (edge(v, w1), edge(v, w2));
                    violations.push(Violation {
                        kind: ViolationKind::EdgeEdge,
                        witnesses: vec![Element::Edge(a.0, a.1), Element::Edge(b.0, b.1)],
                    });
                }
            }
            // (c) vertex vs incident edge
            if cv != 0 && c1 == cv {
                let e = edge(v, w1);
                violations.push(Violation {
                    kind: ViolationKind::VertexEdge,
                    witnesses: vec![Element::Vertex(v), Element::Edge(e.0, e.1)],
                });
            }
        }
    }

    violations.sort();
    let is_valid = violations.is_empty();
    VerificationReport {
        violations,
        colors_used: c.colors_used(),
        is_valid,
    }
}

/// Colors in `1..=palette` not used by `element` itself or anything adjacent
/// or incident to it in `g` under the (possibly partial) coloring `partial`.
pub fn missing_colors(
    g: &Graph,
    partial: &TotalColoring,
    element: Element,
    palette: Color,
) -> BTreeSet<Color> {
    let mut used = BTreeSet::new();
    let at_vertex = |v: Vertex, used: &mut BTreeSet<Color>| {
        used.insert(partial.vertex(v));
        for &w in g.neighbors(v) {
            if let Some(c) = partial.edge(v, w) {
                used.insert(c);
            }
        }
    };
    match element {
        Element::Vertex(v) => {
            at_vertex(v, &mut used);
            for &w in g.neighbors(v) {
                used.insert(partial.vertex(w));
            }
        }
        Element::Edge(u, v) => {
            at_vertex(u, &mut used);
            at_vertex(v, &mut used);
        }
    }
    (1..=palette).filter(|c| !used.contains(c)).collect()
}
