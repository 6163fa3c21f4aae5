use std::collections::BTreeSet;

use super::ConstructionResult;
use crate::coloring::{complete_total, Color, TotalColoring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::mock::{build_mock_threshold, MockThresholdScript, Step};
use crate::oracle::total_coloring_within;
use crate::search::SearchLimits;

/// Node budget for the even-order co-dominant step.
const PREFIX_SEARCH_BUDGET: u64 = 10_000_000;

/// Colors `K_N` and keeps what lies in `h`; `perm[t]` is the vertex of `h`
/// placed at position `t` of `K_N`.
fn embed_complete(h: &Graph, perm: &[Vertex]) -> TotalColoring {
    let k = complete_total(perm.len());
    let mut c = TotalColoring::blank(h);
    for (t, &v) in perm.iter().enumerate() {
        c.vertex_colors[v] = k.vertex(t);
        for (s, &w) in perm.iter().enumerate().skip(t + 1) {
            if h.has_edge(v, w) {
                c.set_edge(v, w, k.edge(t, s).expect("complete graph edge"));
            }
        }
    }
    c
}

fn first_free(used: &BTreeSet<Color>) -> Color {
    (1..).find(|c| !used.contains(c)).expect("colors are unbounded")
}

/// Total coloring of a mock threshold graph with at most `Δ + 2` colors,
/// built along its script. Each prefix keeps at most `Δ(prefix) + 2` colors:
///
/// * an isolated vertex takes color 1;
/// * a pendant edge takes a color missing at its old endpoint;
/// * a dominant vertex, or a co-dominant one that creates a vertex of full
///   degree, is handled by coloring the complete graph on the prefix and
///   dropping the absent edges;
/// * otherwise a co-dominant vertex leaves `Δ = N − 2` on `N` vertices. For
///   odd `N` the complete-graph coloring of `K_N` has `N` colors, with the
///   non-neighbour placed last so that its edges carry the missing colors of
///   the even part. For even `N` a bounded exact search with `N` colors runs.
pub fn mock_threshold_total(g: &Graph, script: &MockThresholdScript) -> Result<ConstructionResult> {
    if build_mock_threshold(script)? != *g {
        return Err(Error::InvalidScript("script does not realize the graph".into()));
    }
    let mut c = TotalColoring::blank(&Graph::empty(0));
    for (i, &step) in script.steps.iter().enumerate() {
        let h = g.prefix(i + 1);
        let n = i + 1;
        let delta = h.max_degree();
        c.vertex_colors.push(0);
        match step {
            Step::Isolated => c.vertex_colors[i] = 1,
            Step::Pendant(j) => {
                let mut used: BTreeSet<Color> = h
                    .neighbors(j)
                    .iter()
                    .filter_map(|&w| c.edge(j, w))
                    .collect();
                used.insert(c.vertex(j));
                let e = first_free(&used);
                c.set_edge(i, j, e);
                c.vertex_colors[i] = first_free(&BTreeSet::from([c.vertex(j), e]));
            }
            Step::Dominant => c = embed_complete(&h, &(0..n).collect::<Vec<_>>()),
            Step::CoDominant(_) if delta == i => {
                c = embed_complete(&h, &(0..n).collect::<Vec<_>>())
            }
            Step::CoDominant(j) if n % 2 == 1 => {
                let perm: Vec<Vertex> = (0..n).filter(|&v| v != j).chain([j]).collect();
                c = embed_complete(&h, &perm);
            }
            Step::CoDominant(_) => {
                let limits = SearchLimits::with_budget(PREFIX_SEARCH_BUDGET);
                c = total_coloring_within(&h, delta + 2, &limits)?.ok_or_else(|| {
                    Error::ConstructionFailed(format!(
                        "prefix of {n} vertices has no total coloring with {} colors",
                        delta + 2
                    ))
                })?;
            }
        }
        debug_assert!(c.palette() as usize <= delta + 2, "step {i}");
    }
    ConstructionResult::checked(g, c, g.max_degree() + 2, "mock-threshold", Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn color(text: &str) -> ConstructionResult {
        let script: MockThresholdScript = text.parse().unwrap();
        let g = build_mock_threshold(&script).unwrap();
        mock_threshold_total(&g, &script).unwrap()
    }

    #[test]
    fn small_scripts() {
        assert_eq!(color("I").colors_used, 1);
        assert!(color("I,D,D,D").colors_used <= 5);
        assert!(color("I,I,P1,C1").colors_used <= 4);
        assert!(color("I,D,D,D,C2,C0,D,C5").colors_used <= 9);
    }

    #[test]
    fn random_scripts() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=10 {
            for _ in 0..10 {
                let script = MockThresholdScript::random(&mut rng, n);
                let g = build_mock_threshold(&script).unwrap();
                let r = mock_threshold_total(&g, &script).unwrap();
                assert!(r.colors_used <= g.max_degree() + 2, "{script}");
            }
        }
    }

    #[test]
    fn rejects_mismatched_script() {
        let script: MockThresholdScript = "I,D,D".parse().unwrap();
        assert!(mock_threshold_total(&Graph::empty(3), &script).is_err());
    }
}
