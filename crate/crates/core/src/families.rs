//! Builders for the graph families: circulants, powers of cycles, unitary
//! Cayley graphs, Kneser and odd graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{build_cayley_from_table, GroupTable};
use crate::mock::{build_mock_threshold, MockThresholdScript};
use crate::numtheory::gcd;

/// Circulant graph on `Z_n`: `u ~ v` iff `(u - v) mod n` is `d` or `n - d`
/// for some `d` in `distances`. Each distance must lie in `1..=n/2`.
pub fn build_circulant(n: usize, distances: &[usize]) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("circulant needs n >= 1".into()));
    }
    if let Some(&d) = distances.iter().find(|&&d| d == 0 || d > n / 2) {
        return Err(Error::InvalidParameter(format!(
            "distance {d} outside 1..={} for n = {n}",
            n / 2
        )));
    }
    let edges = (0..n).flat_map(|u| distances.iter().map(move |&d| (u, (u + d) % n)));
    Ok(Graph::from_edges_dedup(n, edges))
}

/// `C_n^k`, the circulant with distances `1..=k`; requires `1 <= k < n/2`.
pub fn build_power_of_cycle(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || 2 * k >= n {
        return Err(Error::InvalidParameter(format!(
            "power of cycle needs 1 <= k < n/2, got n = {n}, k = {k}"
        )));
    }
    build_circulant(n, &(1..=k).collect::<Vec<_>>())
}

/// Unitary Cayley graph `X_n`: `a ~ b` iff `gcd(a - b, n) = 1`.
pub fn build_unitary_cayley(n: usize) -> Result<Graph> {
    if n <= 1 {
        return Err(Error::InvalidParameter(format!(
            "unitary Cayley graph needs n > 1, got {n}"
        )));
    }
    let units: Vec<usize> = (1..=n / 2).filter(|&d| gcd(d, n) == 1).collect();
    build_circulant(n, &units)
}

/// A graph whose vertices stand for subsets, with the subset attached to each
/// vertex index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<Vec<usize>>,
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // Advance the rightmost position that still has room.
        let Some(pos) = (0..k).rev().find(|&i| current[i] < n - k + i) else {
            return out;
        };
        current[pos] += 1;
        for i in pos + 1..k {
            current[i] = current[i - 1] + 1;
        }
    }
}

/// Kneser graph `K(n, k)`: `k`-subsets of `0..n`, adjacent iff disjoint.
/// Vertex `i` is the `i`-th subset in lexicographic order.
pub fn build_kneser(n: usize, k: usize) -> Result<LabeledGraph> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!(
            "Kneser graph needs 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    if n > 128 {
        return Err(Error::InvalidParameter("Kneser ground set limited to 128".into()));
    }
    let labels = k_subsets(n, k);
    let masks: Vec<u128> = labels
        .iter()
        .map(|s| s.iter().fold(0u128, |m, &x| m | 1 << x))
        .collect();
    let mut edges = Vec::new();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if masks[i] & masks[j] == 0 {
                edges.push((i, j));
            }
        }
    }
    Ok(LabeledGraph {
        graph: Graph::from_edges_dedup(labels.len(), edges),
        labels,
    })
}

/// Odd graph `O_m = K(2m - 1, m - 1)`, for `m >= 2`.
pub fn build_odd_graph(m: usize) -> Result<LabeledGraph> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("odd graph needs m >= 2, got {m}")));
    }
    build_kneser(2 * m - 1, m - 1)
}

/// Every family the toolkit knows how to build.
#[derive(Clone, Debug)]
pub enum FamilySpec {
    Circulant { n: usize, distances: Vec<usize> },
    PowerOfCycle { n: usize, k: usize },
    UnitaryCayley { n: usize },
    Kneser { n: usize, k: usize },
    OddGraph { m: usize },
    MockThreshold { script: MockThresholdScript },
    CayleyTable { table: GroupTable, generators: Vec<usize> },
}

impl FamilySpec {
    pub fn build(&self) -> Result<LabeledGraphOrPlain> {
        Ok(match self {
            FamilySpec::Circulant { n, distances } => {
                LabeledGraphOrPlain::Plain(build_circulant(*n, distances)?)
            }
            FamilySpec::PowerOfCycle { n, k } => {
                LabeledGraphOrPlain::Plain(build_power_of_cycle(*n, *k)?)
            }
            FamilySpec::UnitaryCayley { n } => LabeledGraphOrPlain::Plain(build_unitary_cayley(*n)?),
            FamilySpec::Kneser { n, k } => LabeledGraphOrPlain::Labeled(build_kneser(*n, *k)?),
            FamilySpec::OddGraph { m } => LabeledGraphOrPlain::Labeled(build_odd_graph(*m)?),
            FamilySpec::MockThreshold { script } => {
                LabeledGraphOrPlain::Plain(build_mock_threshold(script)?)
            }
            FamilySpec::CayleyTable { table, generators } => {
                LabeledGraphOrPlain::Plain(build_cayley_from_table(table, generators)?)
            }
        })
    }
}

#[derive(Clone, Debug)]
pub enum LabeledGraphOrPlain {
    Plain(Graph),
    Labeled(LabeledGraph),
}

impl LabeledGraphOrPlain {
    pub fn graph(&self) -> &Graph {
        match self {
            LabeledGraphOrPlain::Plain(g) => g,
            LabeledGraphOrPlain::Labeled(l) => &l.graph,
        }
    }

    pub fn labels(&self) -> Option<&[Vec<usize>]> {
        match self {
            LabeledGraphOrPlain::Plain(_) => None,
            LabeledGraphOrPlain::Labeled(l) => Some(&l.labels),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::{binomial, euler_phi, is_prime};

    const C10_2_ADJACENCY: [[u8; 10]; 10] = [
        [0, 1, 1, 0, 0, 0, 0, 0, 1, 1],
        [1, 0, 1, 1, 0, 0, 0, 0, 0, 1],
        [1, 1, 0, 1, 1, 0, 0, 0, 0, 0],
        [0, 1, 1, 0, 1, 1, 0, 0, 0, 0],
        [0, 0, 1, 1, 0, 1, 1, 0, 0, 0],
        [0, 0, 0, 1, 1, 0, 1, 1, 0, 0],
        [0, 0, 0, 0, 1, 1, 0, 1, 1, 0],
        [0, 0, 0, 0, 0, 1, 1, 0, 1, 1],
        [1, 0, 0, 0, 0, 0, 1, 1, 0, 1],
        [1, 1, 0, 0, 0, 0, 0, 1, 1, 0],
    ];

    #[test]
    fn circulant_matches_displayed_adjacency() {
        let g = build_circulant(10, &[1, 2]).unwrap();
        for u in 0..10 {
            for v in 0..10 {
                assert_eq!(g.has_edge(u, v), C10_2_ADJACENCY[u][v] == 1, "({u},{v})");
            }
        }
    }

    #[test]
    fn circulant_edge_cases() {
        assert_eq!(build_circulant(5, &[]).unwrap().edge_count(), 0);
        assert_eq!(build_circulant(6, &[1, 2, 3]).unwrap(), Graph::complete(6));
        // n/2 contributes a single neighbour.
        let g = build_circulant(8, &[4]).unwrap();
        assert!(g.is_regular() && g.max_degree() == 1);
        assert!(build_circulant(8, &[5]).is_err());
        assert!(build_circulant(8, &[0]).is_err());
    }

    #[test]
    fn powers_of_cycles() {
        let g = build_power_of_cycle(10, 2).unwrap();
        assert_eq!((g.edge_count(), g.max_degree(), g.min_degree()), (20, 4, 4));
        let c5 = build_power_of_cycle(5, 1).unwrap();
        assert_eq!(c5.edges(), &[(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
        // 7 vertices, each with 4 neighbours by definition: 7 * 4 / 2 edges.
        let g = build_power_of_cycle(7, 2).unwrap();
        assert_eq!((g.edge_count(), g.max_degree()), (14, 4));
        assert!(build_power_of_cycle(10, 5).is_err());
        assert!(build_power_of_cycle(10, 0).is_err());
    }

    #[test]
    fn powers_of_cycles_regular_and_rotation_invariant() {
        for n in 3..30 {
            for k in 1..n {
                if 2 * k >= n {
                    break;
                }
                let g = build_power_of_cycle(n, k).unwrap();
                assert!(g.is_regular() && g.max_degree() == 2 * k);
                for &(u, v) in g.edges() {
                    assert!(g.has_edge((u + 1) % n, (v + 1) % n));
                }
            }
        }
    }

    #[test]
    fn unitary_cayley_structure() {
        assert_eq!(build_unitary_cayley(5).unwrap(), Graph::complete(5));
        assert_eq!(build_unitary_cayley(2).unwrap(), Graph::complete(2));
        let g = build_unitary_cayley(8).unwrap();
        assert_eq!(g.max_degree(), 4);
        assert!(g.edges().iter().all(|&(u, v)| (u + v) % 2 == 1));
        assert!(build_unitary_cayley(1).is_err());
        for n in 2..60 {
            let g = build_unitary_cayley(n).unwrap();
            assert!(g.is_regular() && g.max_degree() == euler_phi(n), "n = {n}");
            if is_prime(n) {
                assert_eq!(g, Graph::complete(n));
            }
            if n % 2 == 0 {
                assert!(g.edges().iter().all(|&(u, v)| (u + v) % 2 == 1));
            }
        }
    }

    fn girth(g: &Graph) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..g.vertex_count() {
            let mut dist = vec![usize::MAX; g.vertex_count()];
            let mut parent = vec![usize::MAX; g.vertex_count()];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in g.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let cycle = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(cycle, |b| b.min(cycle)));
                    }
                }
            }
        }
        best
    }

    #[test]
    fn kneser_and_odd_graphs() {
        assert_eq!(build_odd_graph(2).unwrap().graph, Graph::complete(3));
        let petersen = build_odd_graph(3).unwrap();
        assert_eq!(petersen.graph.vertex_count(), 10);
        assert!(petersen.graph.is_regular() && petersen.graph.max_degree() == 3);
        assert_eq!(girth(&petersen.graph), Some(5));
        let k42 = build_kneser(4, 2).unwrap();
        assert_eq!(k42.graph.edge_count(), 3);
        assert!(k42.graph.is_regular() && k42.graph.max_degree() == 1);
        for m in 2..=5 {
            let o = build_odd_graph(m).unwrap();
            assert_eq!(o.graph.vertex_count(), binomial(2 * m - 1, m - 1));
            assert!(o.graph.is_regular() && o.graph.max_degree() == m);
        }
        assert!(build_kneser(3, 4).is_err());
        assert!(build_odd_graph(1).is_err());
    }

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(
            k_subsets(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(k_subsets(3, 0), vec![Vec::<usize>::new()]);
    }
}
