use super::ConstructionResult;
use crate::coloring::{bipartite_edge_color, Color, TotalColoring};
use crate::error::Result;
use crate::families::build_odd_graph;
use crate::graph::Graph;

/// Total coloring of the odd graph `O_m` with at most `m + 2` colors.
///
/// `x` is the largest ground element and `I` the independent set of
/// subsets containing it. The other subsets pair up with their complements
/// in the remaining `2m − 2` elements and form a perfect matching `M`.
/// Edges between `I` and `M` get `m` colors; `I` and the matching edges get
/// `m + 1`; the matching endpoint containing `0` gets `m + 2` and its partner
/// the one bipartite color missing at it.
pub fn odd_graph_total(m: usize) -> Result<ConstructionResult> {
    let odd = build_odd_graph(m)?;
    let g = &odd.graph;
    let x = 2 * m - 2;
    let in_i: Vec<bool> = odd.labels.iter().map(|s| s.contains(&x)).collect();
    let cross: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| in_i[u] != in_i[v])
        .collect();
    let bipartite = Graph::from_edges(g.vertex_count(), cross)?;
    let edges = bipartite_edge_color(&bipartite)?;
    let mut c = TotalColoring::new(vec![0; g.vertex_count()], edges);
    let (matched, top) = ((m + 1) as Color, (m + 2) as Color);
    for &(u, v) in g.edges() {
        if in_i[u] || in_i[v] {
            continue;
        }
        c.set_edge(u, v, matched);
        let (first, second) = if odd.labels[u].contains(&0) { (u, v) } else { (v, u) };
        c.vertex_colors[first] = top;
        let missing = (1..=m as Color)
            .find(|&col| g.neighbors(second).iter().all(|&w| c.edge(second, w) != Some(col)))
            .expect("matching vertex has degree m - 1 towards I");
        c.vertex_colors[second] = missing;
    }
    for (v, &inside) in in_i.iter().enumerate() {
        if inside {
            c.vertex_colors[v] = matched;
        }
    }
    ConstructionResult::checked(g, c, m + 2, "odd-graph", Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::binomial;

    #[test]
    fn small_odd_graphs() {
        assert_eq!(odd_graph_total(2).unwrap().colors_used, 4);
        assert_eq!(odd_graph_total(3).unwrap().colors_used, 5);
        for m in 2..=5 {
            let r = odd_graph_total(m).unwrap();
            assert!(r.colors_used <= m + 2);
        }
    }

    #[test]
    fn independent_set_size() {
        for m in 2..=6 {
            let odd = build_odd_graph(m).unwrap();
            let count = odd.labels.iter().filter(|s| s.contains(&(2 * m - 2))).count();
            assert_eq!(count, binomial(2 * m - 2, m - 2));
        }
    }
}
