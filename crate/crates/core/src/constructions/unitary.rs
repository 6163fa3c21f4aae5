use super::ConstructionResult;
use crate::coloring::{bipartite_edge_color, complete_total, edge_color_plus_one, Color, TotalColoring};
use crate::error::Result;
use crate::families::build_unitary_cayley;
use crate::graph::Graph;
use crate::numtheory::{euler_phi, is_prime, smallest_prime_factor};

/// Total coloring of the unitary Cayley graph `X_n` with at most `φ(n) + 2`
/// colors.
///
/// Prime `n` gives `K_n`. Even `n` gives a bipartite graph: `φ(n)` edge
/// colors plus one color per side. For odd composite `n` with smallest prime
/// `p`, the blocks `{tp, …, tp + p − 1}` are cliques and are colored like
/// `K_p` with colors `1..=p`; the rest of the edges form a
/// `(φ(n) − p + 1)`-regular graph, edge colored with at most `φ(n) − p + 2`
/// further colors.
pub fn unitary_total(n: usize) -> Result<ConstructionResult> {
    let g = build_unitary_cayley(n)?;
    let phi = euler_phi(n);
    let budget = phi + 2;
    if is_prime(n) {
        return ConstructionResult::checked(&g, complete_total(n), budget, "unitary-prime", Vec::new());
    }
    if n % 2 == 0 {
        let edges = bipartite_edge_color(&g)?;
        let vertex_colors = (0..n).map(|v| (phi + 1 + v % 2) as Color).collect();
        let c = TotalColoring::new(vertex_colors, edges);
        return ConstructionResult::checked(&g, c, budget, "unitary-even", Vec::new());
    }
    let p = smallest_prime_factor(n);
    let clique = complete_total(p);
    let mut c = TotalColoring::blank(&g);
    let mut cliques = Vec::new();
    for t in 0..n / p {
        for a in 0..p {
            c.vertex_colors[t * p + a] = clique.vertex(a);
            for b in a + 1..p {
                let color = clique.edge(a, b).expect("clique edge");
                c.set_edge(t * p + a, t * p + b, color);
                cliques.push((t * p + a, t * p + b));
            }
        }
    }
    let blocks = Graph::from_edges(n, cliques)?;
    let rest = g.difference(&blocks);
    for (e, color) in edge_color_plus_one(&rest) {
        c.set_edge(e.0, e.1, color + p as Color);
    }
    ConstructionResult::checked(&g, c, budget, "unitary-odd", Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify;

    #[test]
    fn within_budget_up_to_60() {
        for n in 2..=60 {
            let r = unitary_total(n).unwrap();
            assert!(r.colors_used <= euler_phi(n) + 2, "n = {n}");
        }
    }

    #[test]
    fn branches() {
        assert_eq!(unitary_total(7).unwrap().method, "unitary-prime");
        assert_eq!(unitary_total(7).unwrap().colors_used, 7);
        let r = unitary_total(8).unwrap();
        assert_eq!(r.method, "unitary-even");
        assert!(r.colors_used <= 6);
        let r = unitary_total(15).unwrap();
        assert_eq!(r.method, "unitary-odd");
        assert!(r.colors_used <= 10);
        for t in 0..5 {
            let colors: Vec<Color> = (0..3).map(|a| r.coloring.vertex(3 * t + a)).collect();
            assert_eq!(colors, vec![1, 2, 3]);
        }
        assert!(verify(&build_unitary_cayley(15).unwrap(), &r.coloring).is_valid);
    }
}
