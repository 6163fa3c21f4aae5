//! Simple undirected graphs on vertices `0..n`.
//!
//! Every family in this crate (circulants, powers of cycles, unitary Cayley
//! graphs, Kneser and odd graphs, mock threshold graphs, Cayley graphs of
//! tabulated groups) is reduced to [`Graph`]. Edges are stored normalized as
//! `(u, v)` with `u < v` and sorted, so two graphs with the same edge set
//! compare equal regardless of insertion order.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Edge = (Vertex, Vertex);

/// Normalizes an unordered pair so the smaller endpoint comes first.
#[inline]
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) are rejected, as are self-loops and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            list.push(edge(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Like [`Graph::from_edges`] but silently merges duplicates. Used by the
    /// builders, which generate each pair from both endpoints.
    pub(crate) fn from_edges_dedup<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut list: Vec<Edge> = edges
            .into_iter()
            .inspect(|&(u, v)| debug_assert!(u != v && u < n && v < n))
            .map(|(u, v)| edge(u, v))
            .collect();
        list.sort_unstable();
        list.dedup();
        Self::from_sorted(n, list)
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_sorted(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted, normalized edge list.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of the edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.binary_search(&edge(u, v)).ok()
    }

    /// Returns a two-coloring (`false`/`true` sides) if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap_or(false)).collect())
    }

    /// Removes the edges of `other` (which must be on the same vertex set).
    pub fn difference(&self, other: &Graph) -> Graph {
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| !other.has_edge(u, v))
            .collect();
        Self::from_sorted(self.n, edges)
    }

    /// Graph with vertex `v` of the result equal to vertex `order[v]` of `self`.
    pub fn relabel(&self, order: &[Vertex]) -> Result<Graph> {
        if order.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "relabeling has {} entries for {} vertices",
                order.len(),
                self.n
            )));
        }
        let mut position = vec![usize::MAX; self.n];
        for (new, &old) in order.iter().enumerate() {
            if old >= self.n || position[old] != usize::MAX {
                return Err(Error::InvalidParameter(
                    "relabeling is not a permutation".into(),
                ));
            }
            position[old] = new;
        }
        Ok(Self::from_edges_dedup(
            self.n,
            self.edges.iter().map(|&(u, v)| (position[u], position[v])),
        ))
    }

    /// Induced subgraph on `0..k`.
    pub fn prefix(&self, k: usize) -> Graph {
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&(_, v)| v < k)
            .collect();
        Self::from_sorted(k.min(self.n), edges)
    }
}

/// Serialized form: `{"n": 4, "edges": [[0,1],...]}` with optional Kneser
/// subset labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Vec<usize>>>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph, labels: Option<Vec<Vec<usize>>>) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
            labels,
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges.iter().map(|e| (e[0], e[1])))
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from_graph(self, None)).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        serde_json::from_str::<GraphJson>(text)?.to_graph()
    }

    /// DIMACS `.col` edge list, 1-indexed.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }

    /// Parses DIMACS `.col` input. Comment lines (`c ...`) are ignored and
    /// repeated edges (common in published instances) are merged.
    pub fn from_dimacs(text: &str) -> Result<Graph> {
        let mut n = None;
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let mut parts = line.split_whitespace();
            let bad = || Error::Parse(format!("DIMACS line {}: {line:?}", lineno + 1));
            match parts.next() {
                None | Some("c") => {}
                Some("p") => {
                    let _format = parts.next().ok_or_else(bad)?;
                    let count: usize = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
                    n = Some(count);
                }
                Some("e") => {
                    let u: usize = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
                    let v: usize = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
                    if u == 0 || v == 0 {
                        return Err(bad());
                    }
                    edges.push((u - 1, v - 1));
                }
                Some(_) => return Err(bad()),
            }
        }
        let n = n.ok_or_else(|| Error::Parse("DIMACS input has no problem line".into()))?;
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n || u == v) {
            return Err(Error::InvalidGraph(format!(
                "DIMACS edge {} {} is out of range or a loop",
                u + 1,
                v + 1
            )));
        }
        Ok(Self::from_edges_dedup(n, edges))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn edge_order_is_canonical() {
        let a = Graph::from_edges(4, [(3, 2), (0, 1), (2, 0)]).unwrap();
        let b = Graph::from_edges(4, [(0, 2), (1, 0), (2, 3)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edges(), &[(0, 1), (0, 2), (2, 3)]);
    }

    #[test]
    fn json_and_dimacs_round_trip() {
        let g = Graph::complete(4);
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
        assert_eq!(Graph::from_dimacs(&g.to_dimacs()).unwrap(), g);
        let text = "c hello\np edge 3 2\ne 1 2\ne 2 3\ne 2 1\n";
        let h = Graph::from_dimacs(text).unwrap();
        assert_eq!(h.edges(), &[(0, 1), (1, 2)]);
        assert!(Graph::from_dimacs("e 1 2\n").is_err());
        assert!(Graph::from_dimacs("p edge 2 1\ne 1 3\n").is_err());
    }

    #[test]
    fn bipartition_detects_odd_cycles() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(c4.bipartition().is_some());
        let c3 = Graph::complete(3);
        assert!(c3.bipartition().is_none());
    }

    #[test]
    fn relabel_and_prefix() {
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let r = path.relabel(&[1, 0, 2]).unwrap();
        assert_eq!(r.edges(), &[(0, 1), (0, 2)]);
        assert_eq!(path.prefix(2).edges(), &[(0, 1)]);
        assert!(path.relabel(&[0, 0, 1]).is_err());
    }
}
