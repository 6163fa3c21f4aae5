use std::collections::BTreeMap;

use super::{Color, TotalColoring};

/// Total coloring of `K_n` after Hinz and Parisse.
///
/// For even `n`, vertices `0..n` get edge colors
/// `(tau_i(j) + tau_j(i) + 2) mod (n + 1)` where `tau_k` swaps `k` and
/// `n - 1`, and vertex `i` gets color `i`; line `i` then misses exactly the
/// colors `i` and `(i + 1) mod n`. For odd `n` the even coloring of
/// `K_{n-1}` is extended: the edge from vertex `i` to the last vertex takes
/// the missing color `(i + 1) mod (n - 1)`, and the last vertex takes the
/// only color absent from its star, `n - 1`.
///
/// Everything is shifted by one to the 1-based palette, so the result uses
/// `n + 1` colors for even `n` and `n` colors for odd `n`.
pub fn complete_total(n: usize) -> TotalColoring {
    if n == 0 {
        return TotalColoring::default();
    }
    let even = if n % 2 == 0 { n } else { n - 1 };
    let tau = |k: usize, x: usize| {
        if x == k {
            even - 1
        } else if x == even - 1 {
            k
        } else {
            x
        }
    };
    let mut vertex_colors: Vec<Color> = (0..n).map(|i| i as Color + 1).collect();
    let mut edge_colors = BTreeMap::new();
    for i in 0..even {
        for j in i + 1..even {
            let c = (tau(i, j) + tau(j, i) + 2) % (even + 1);
            edge_colors.insert((i, j), c as Color + 1);
        }
    }
    if n % 2 == 1 {
        let last = n - 1;
        for i in 0..even {
            edge_colors.insert((i, last), ((i + 1) % even) as Color + 1);
        }
        vertex_colors[last] = even as Color + 1;
    }
    TotalColoring {
        vertex_colors,
        edge_colors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{missing_colors, verify, Element};
    use crate::graph::Graph;
    use std::collections::BTreeSet;

    #[test]
    fn valid_with_expected_palette() {
        for n in 1..=40 {
            let c = complete_total(n);
            let r = verify(&Graph::complete(n), &c);
            assert!(r.is_valid, "n = {n}: {:?}", r.violations.first());
            let expected = if n % 2 == 0 { n + 1 } else { n };
            assert_eq!(r.colors_used, expected, "n = {n}");
        }
    }

    #[test]
    fn k4_lines_miss_k_and_k_plus_one() {
        let mut edges_only = complete_total(4);
        edges_only.vertex_colors = vec![0; 4];
        let g = Graph::complete(4);
        for k in 0..4usize {
            let free = missing_colors(&g, &edges_only, Element::Vertex(k), 5);
            let expected = BTreeSet::from([k as Color + 1, ((k + 1) % 4) as Color + 1]);
            assert_eq!(free, expected, "line {k}");
        }
    }

    #[test]
    fn odd_extension_uses_missing_colors() {
        let c = complete_total(5);
        assert!(verify(&Graph::complete(5), &c).is_valid);
        for k in 0..4usize {
            assert_eq!(c.edge(k, 4), Some(((k + 1) % 4) as Color + 1));
        }
        assert_eq!(c.vertex(4), 5);
        assert_eq!(complete_total(1).vertex_colors, vec![1]);
    }
}
