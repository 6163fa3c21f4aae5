//! Edge-coloring subroutines used by the constructions.

use std::collections::BTreeMap;

use super::Color;
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, Vertex};
use crate::numtheory::gcd;

pub type EdgeColoring = BTreeMap<Edge, Color>;

/// Default node budget for [`one_factorize`].
pub const ONE_FACTOR_BUDGET: u64 = 1_000_000;

/// Per-vertex table `slot[v][c] = Some(w)` when edge `{v, w}` has color `c`.
struct Slots {
    slot: Vec<Vec<Option<Vertex>>>,
}

impl Slots {
    fn new(n: usize, colors: usize) -> Self {
        Slots {
            slot: vec![vec![None; colors + 1]; n],
        }
    }

    fn is_free(&self, v: Vertex, c: Color) -> bool {
        self.slot[v][c as usize].is_none()
    }

    fn first_free(&self, v: Vertex) -> Color {
        (1..self.slot[v].len())
            .find(|&c| self.slot[v][c].is_none())
            .expect("a free color exists") as Color
    }

    fn color_of(&self, u: Vertex, v: Vertex) -> Option<Color> {
        self.slot[u]
            .iter()
            .position(|&w| w == Some(v))
            .map(|c| c as Color)
    }

    fn assign(&mut self, u: Vertex, v: Vertex, c: Color) {
        debug_assert!(self.is_free(u, c) && self.is_free(v, c));
        self.slot[u][c as usize] = Some(v);
        self.slot[v][c as usize] = Some(u);
    }

    fn clear(&mut self, u: Vertex, v: Vertex, c: Color) {
        self.slot[u][c as usize] = None;
        self.slot[v][c as usize] = None;
    }

    /// Swaps colors `a` and `b` along the maximal path leaving `start` on an
    /// `a`-colored edge.
    fn flip_path(&mut self, start: Vertex, a: Color, b: Color) {
        let mut path = Vec::new();
        let (mut x, mut col) = (start, a);
        while let Some(y) = self.slot[x][col as usize] {
            path.push((x, y, col));
            x = y;
            col = if col == a { b } else { a };
        }
        for &(x, y, c) in &path {
            self.clear(x, y, c);
        }
        for &(x, y, c) in &path {
            self.assign(x, y, if c == a { b } else { a });
        }
    }

    fn into_coloring(self) -> EdgeColoring {
        let mut out = BTreeMap::new();
        for (u, row) in self.slot.iter().enumerate() {
            for (c, w) in row.iter().enumerate() {
                if let Some(w) = *w {
                    out.insert(edge(u, w), c as Color);
                }
            }
        }
        out
    }
}

/// Proper edge coloring of a bipartite graph with exactly `Δ` colors
/// (König), by alternating-path recoloring.
pub fn bipartite_edge_color(g: &Graph) -> Result<EdgeColoring> {
    if g.bipartition().is_none() {
        return Err(Error::NotBipartite);
    }
    let delta = g.max_degree();
    let mut slots = Slots::new(g.vertex_count(), delta);
    for &(u, v) in g.edges() {
        let a = slots.first_free(u);
        if !slots.is_free(v, a) {
            let b = slots.first_free(v);
            // The a/b path from v cannot end at u in a bipartite graph.
            slots.flip_path(v, a, b);
        }
        slots.assign(u, v, a);
    }
    Ok(slots.into_coloring())
}

/// Proper edge coloring with at most `Δ + 1` colors (Misra–Gries fan
/// rotation). Edges are processed in sorted order and ties go to the lowest
/// color, so the output is deterministic.
pub fn edge_color_plus_one(g: &Graph) -> EdgeColoring {
    let delta = g.max_degree();
    let mut slots = Slots::new(g.vertex_count(), delta + 1);
    for &(u, v) in g.edges() {
        // Maximal fan at u starting from v.
        let mut fan = vec![v];
        loop {
            let last = *fan.last().unwrap();
            let next = (1..=delta as Color + 1)
                .filter(|&c| slots.is_free(last, c))
                .filter_map(|c| slots.slot[u][c as usize])
                .find(|w| !fan.contains(w));
            match next {
                Some(w) => fan.push(w),
                None => break,
            }
        }
        let c = slots.first_free(u);
        let d = slots.first_free(*fan.last().unwrap());
        if c != d {
            // u has no c edge, so the path from u starts with d.
            slots.flip_path(u, d, c);
        }
        // Shortest fan prefix ending at a vertex where d is now free.
        let is_fan_link = |slots: &Slots, j: usize| {
            slots
                .color_of(u, fan[j + 1])
                .is_some_and(|col| slots.is_free(fan[j], col))
        };
        let end = (0..fan.len())
            .find(|&i| slots.is_free(fan[i], d) && (0..i).all(|j| is_fan_link(&slots, j)))
            .expect("Misra-Gries guarantees a rotatable fan prefix");
        let shifted: Vec<Color> = (0..end)
            .map(|j| slots.color_of(u, fan[j + 1]).unwrap())
            .collect();
        for j in 1..=end {
            let col = slots.color_of(u, fan[j]).unwrap();
            slots.clear(u, fan[j], col);
        }
        for (j, &col) in shifted.iter().enumerate() {
            slots.assign(u, fan[j], col);
        }
        slots.assign(u, fan[end], d);
    }
    slots.into_coloring()
}

/// Splits the distance-`d` 2-factor of `Z_n` (a single even cycle when
/// `gcd(n, d) = 1`) into two perfect matchings by walking the cycle
/// `0, d, 2d, ...` and alternating.
pub fn hamiltonian_split(n: usize, d: usize) -> Result<(Vec<Edge>, Vec<Edge>)> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "hamiltonian split needs even n >= 4, got {n}"
        )));
    }
    if d == 0 || d > n / 2 || gcd(n, d) != 1 {
        return Err(Error::InvalidParameter(format!(
            "distance {d} must be in 1..=n/2 and coprime to n = {n}"
        )));
    }
    let mut first = Vec::with_capacity(n / 2);
    let mut second = Vec::with_capacity(n / 2);
    for t in 0..n {
        let e = edge(t * d % n, (t + 1) * d % n);
        if t % 2 == 0 {
            first.push(e);
        } else {
            second.push(e);
        }
    }
    first.sort_unstable();
    second.sort_unstable();
    Ok((first, second))
}

/// Partitions the edges of a regular graph of even order into perfect
/// matchings using the default node budget.
pub fn one_factorize(g: &Graph) -> Result<Vec<Vec<Edge>>> {
    one_factorize_with_budget(g, ONE_FACTOR_BUDGET)
}

/// Peels perfect matchings off one at a time, lexicographically smallest
/// first, backtracking across all levels. Exhausting the search returns
/// [`Error::NoFactorization`]; running out of nodes returns
/// [`Error::BudgetExhausted`].
pub fn one_factorize_with_budget(g: &Graph, budget: u64) -> Result<Vec<Vec<Edge>>> {
    let n = g.vertex_count();
    if n % 2 == 1 {
        return Err(Error::InvalidParameter(format!("1-factorization needs even order, got {n}")));
    }
    if !g.is_regular() {
        return Err(Error::InvalidParameter("1-factorization needs a regular graph".into()));
    }
    let mut search = FactorSearch {
        n,
        adj: (0..n)
            .map(|v| {
                let mut row = vec![false; n];
                for &w in g.neighbors(v) {
                    row[w] = true;
                }
                row
            })
            .collect(),
        mate: vec![None; n],
        factors: Vec::new(),
        nodes: 0,
        budget,
    };
    if search.factor(g.max_degree())? {
        Ok(search.factors)
    } else {
        Err(Error::NoFactorization {
            nodes: search.nodes,
        })
    }
}

struct FactorSearch {
    n: usize,
    adj: Vec<Vec<bool>>,
    mate: Vec<Option<Vertex>>,
    factors: Vec<Vec<Edge>>,
    nodes: u64,
    budget: u64,
}

impl FactorSearch {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(Error::BudgetExhausted {
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }

    /// Factors the remaining `degree`-regular graph.
    fn factor(&mut self, degree: usize) -> Result<bool> {
        if degree == 0 {
            return Ok(true);
        }
        self.mate = vec![None; self.n];
        self.extend_matching(degree)
    }

    fn extend_matching(&mut self, degree: usize) -> Result<bool> {
        self.tick()?;
        let Some(u) = (0..self.n).find(|&v| self.mate[v].is_none()) else {
            return self.commit_matching(degree);
        };
        for w in u + 1..self.n {
            if !self.adj[u][w] || self.mate[w].is_some() {
                continue;
            }
            self.mate[u] = Some(w);
            self.mate[w] = Some(u);
            if self.extend_matching(degree)? {
                return Ok(true);
            }
            self.mate[u] = None;
            self.mate[w] = None;
        }
        Ok(false)
    }

    fn commit_matching(&mut self, degree: usize) -> Result<bool> {
        let matching: Vec<Edge> = (0..self.n)
            .filter_map(|v| self.mate[v].filter(|&w| v < w).map(|w| (v, w)))
            .collect();
        for &(u, w) in &matching {
            self.adj[u][w] = false;
            self.adj[w][u] = false;
        }
        let saved = std::mem::replace(&mut self.mate, vec![None; self.n]);
        self.factors.push(matching.clone());
        if self.factor(degree - 1)? {
            return Ok(true);
        }
        self.factors.pop();
        for &(u, w) in &matching {
            self.adj[u][w] = true;
            self.adj[w][u] = true;
        }
        self.mate = saved;
        Ok(false)
    }
}
