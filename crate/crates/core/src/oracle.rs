//! Exact total chromatic number and chromatic index by DSATUR backtracking,
//! plus the powers-of-cycles sweep built on top of it.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{Color, TotalColoring};
use crate::error::{Error, Result};
use crate::families::build_power_of_cycle;
use crate::graph::{Edge, Graph};
use crate::search::{Interrupt, Meter, SearchLimits};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleOutcome {
    pub lower: usize,
    pub upper: usize,
    pub nodes: u64,
    pub budget_hit: bool,
    #[serde(default)]
    pub cancelled: bool,
    /// Coloring achieving `upper`.
    #[serde(skip)]
    pub witness: Option<TotalColoring>,
}

impl OracleOutcome {
    /// The exact value, when the search settled it.
    pub fn value(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.lower)
    }
}

/// Conflict graph over abstract elements; colors are `1..=palette`.
struct Conflicts {
    adj: Vec<Vec<usize>>,
}

impl Conflicts {
    fn len(&self) -> usize {
        self.adj.len()
    }

    /// Elements `0..n` are the vertices, `n + i` is edge `i`.
    fn total(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut adj = vec![Vec::new(); n + g.edge_count()];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            adj[u].push(v);
            adj[v].push(u);
            for w in [u, v] {
                adj[w].push(n + i);
                adj[n + i].push(w);
            }
        }
        for v in 0..n {
            let incident: Vec<usize> = g
                .neighbors(v)
                .iter()
                .map(|&w| n + g.edge_index(v, w).expect("adjacent"))
                .collect();
            for (a, &x) in incident.iter().enumerate() {
                for &y in &incident[a + 1..] {
                    adj[x].push(y);
                    adj[y].push(x);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Conflicts { adj }
    }

    fn line(g: &Graph) -> Self {
        let mut adj = vec![Vec::new(); g.edge_count()];
        for v in 0..g.vertex_count() {
            let incident: Vec<usize> = g
                .neighbors(v)
                .iter()
                .map(|&w| g.edge_index(v, w).expect("adjacent"))
                .collect();
            for (a, &x) in incident.iter().enumerate() {
                for &y in &incident[a + 1..] {
                    adj[x].push(y);
                    adj[y].push(x);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Conflicts { adj }
    }
}

/// DSATUR state shared by the greedy pass and the exact search.
struct Dsatur<'a> {
    conf: &'a Conflicts,
    palette: usize,
    colors: Vec<Color>,
    /// `seen[e * (palette + 1) + c]` counts neighbours of `e` colored `c`.
    seen: Vec<u32>,
    saturation: Vec<usize>,
}

impl<'a> Dsatur<'a> {
    fn new(conf: &'a Conflicts, palette: usize) -> Self {
        Dsatur {
            conf,
            palette,
            colors: vec![0; conf.len()],
            seen: vec![0; conf.len() * (palette + 1)],
            saturation: vec![0; conf.len()],
        }
    }

    fn assign(&mut self, e: usize, c: Color) {
        self.colors[e] = c;
        let stride = self.palette + 1;
        for &f in &self.conf.adj[e] {
            let slot = &mut self.seen[f * stride + c as usize];
            *slot += 1;
            if *slot == 1 {
                self.saturation[f] += 1;
            }
        }
    }

    fn unassign(&mut self, e: usize) {
        let c = self.colors[e];
        self.colors[e] = 0;
        let stride = self.palette + 1;
        for &f in &self.conf.adj[e] {
            let slot = &mut self.seen[f * stride + c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[f] -= 1;
            }
        }
    }

    fn blocked(&self, e: usize, c: Color) -> bool {
        self.seen[e * (self.palette + 1) + c as usize] > 0
    }

    /// Uncolored element of highest saturation, then degree, then lowest index.
    fn pick(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for e in 0..self.conf.len() {
            if self.colors[e] != 0 {
                continue;
            }
            best = match best {
                None => Some(e),
                Some(b) => {
                    let key_e = (self.saturation[e], self.conf.adj[e].len());
                    let key_b = (self.saturation[b], self.conf.adj[b].len());
                    if key_e > key_b {
                        Some(e)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        best
    }

    fn greedy(mut self) -> Vec<Color> {
        while let Some(e) = self.pick() {
            let c = (1..=self.palette as Color)
                .find(|&c| !self.blocked(e, c))
                .expect("palette exceeds the maximum degree");
            self.assign(e, c);
        }
        self.colors
    }

    fn search(&mut self, meter: &mut Meter, max_used: Color) -> std::result::Result<bool, Interrupt> {
        meter.tick()?;
        let Some(e) = self.pick() else {
            return Ok(true);
        };
        if self.saturation[e] >= self.palette {
            return Ok(false);
        }
        let top = (max_used + 1).min(self.palette as Color);
        for c in 1..=top {
            if self.blocked(e, c) {
                continue;
            }
            self.assign(e, c);
            if self.search(meter, max_used.max(c))? {
                return Ok(true);
            }
            self.unassign(e);
        }
        Ok(false)
    }
}

enum Attempt {
    Found(Vec<Color>),
    Impossible,
    Stopped(Interrupt),
}

fn attempt(conf: &Conflicts, palette: usize, meter: &mut Meter) -> Attempt {
    if conf.len() == 0 {
        return Attempt::Found(Vec::new());
    }
    if palette == 0 {
        return Attempt::Impossible;
    }
    let mut state = Dsatur::new(conf, palette);
    match state.search(meter, 0) {
        Ok(true) => Attempt::Found(state.colors),
        Ok(false) => Attempt::Impossible,
        Err(stop) => Attempt::Stopped(stop),
    }
}

fn max_degree_of(conf: &Conflicts) -> usize {
    conf.adj.iter().map(Vec::len).max().unwrap_or(0)
}

fn greedy_colors(conf: &Conflicts) -> Vec<Color> {
    Dsatur::new(conf, max_degree_of(conf) + 1).greedy()
}

fn palette_of(colors: &[Color]) -> usize {
    colors.iter().copied().max().unwrap_or(0) as usize
}

/// Exact minimum over `lower..upper` by ascending feasibility tests.
fn minimize(
    conf: &Conflicts,
    mut lower: usize,
    limits: &SearchLimits,
) -> (usize, usize, u64, Option<Interrupt>, Vec<Color>) {
    let mut best = greedy_colors(conf);
    let mut upper = palette_of(&best);
    lower = lower.min(upper);
    let mut meter = Meter::new(limits);
    while lower < upper {
        match attempt(conf, lower, &mut meter) {
            Attempt::Found(colors) => {
                upper = palette_of(&colors);
                best = colors;
            }
            Attempt::Impossible => lower += 1,
            Attempt::Stopped(stop) => return (lower, upper, meter.nodes, Some(stop), best),
        }
    }
    (lower, upper, meter.nodes, None, best)
}

/// Size of a largest independent set for graphs with at most 64 vertices.
pub fn independence_number(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    if n > 64 {
        return None;
    }
    let masks: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    fn grow(candidates: u64, size: usize, best: &mut usize, masks: &[u64]) {
        if candidates == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + candidates.count_ones() as usize <= *best {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        let rest = candidates & !(1 << v);
        grow(rest & !masks[v], size + 1, best, masks);
        if masks[v] & candidates != 0 {
            grow(rest, size, best, masks);
        }
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    grow(all, 0, &mut best, &masks);
    Some(best)
}

/// `max(Δ+1, ⌈(n+m) / ⌊(n+α)/2⌋⌉)`: a color class is an independent set of
/// vertices together with a matching on the remaining vertices.
pub fn total_lower_bound(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let m = g.edge_count();
    let delta = g.max_degree();
    let alpha = independence_number(g).unwrap_or_else(|| {
        if delta == 0 {
            n
        } else {
            n - m.div_ceil(delta)
        }
    });
    let class = ((n + alpha) / 2).max(1);
    (delta + 1).max((n + m).div_ceil(class))
}

fn coloring_from_elements(g: &Graph, colors: &[Color]) -> TotalColoring {
    let n = g.vertex_count();
    let edge_colors: BTreeMap<Edge, Color> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, colors[n + i]))
        .collect();
    TotalColoring::new(colors[..n].to_vec(), edge_colors)
}

/// Exact χ″ within the node budget; otherwise bounds with a witness for the
/// upper bound.
pub fn total_chromatic_exact(g: &Graph, limits: &SearchLimits) -> OracleOutcome {
    let conf = Conflicts::total(g);
    let (lower, upper, nodes, stop, colors) = minimize(&conf, total_lower_bound(g), limits);
    OracleOutcome {
        lower,
        upper,
        nodes,
        budget_hit: stop == Some(Interrupt::Budget),
        cancelled: stop == Some(Interrupt::Cancelled),
        witness: Some(coloring_from_elements(g, &colors)),
    }
}

/// Exact χ′; the witness stores edge colors and leaves vertices at 0.
pub fn chromatic_index_exact(g: &Graph, limits: &SearchLimits) -> OracleOutcome {
    let conf = Conflicts::line(g);
    let half = (g.vertex_count() / 2).max(1);
    let lower = g.max_degree().max(g.edge_count().div_ceil(half));
    let (lower, upper, nodes, stop, colors) = minimize(&conf, lower, limits);
    let edge_colors = g.edges().iter().copied().zip(colors).collect();
    OracleOutcome {
        lower,
        upper,
        nodes,
        budget_hit: stop == Some(Interrupt::Budget),
        cancelled: stop == Some(Interrupt::Cancelled),
        witness: Some(TotalColoring::new(vec![0; g.vertex_count()], edge_colors)),
    }
}

/// A total coloring of `g` with at most `palette` colors, `Ok(None)` if none
/// exists.
pub fn total_coloring_within(
    g: &Graph,
    palette: usize,
    limits: &SearchLimits,
) -> Result<Option<TotalColoring>> {
    let conf = Conflicts::total(g);
    let greedy = greedy_colors(&conf);
    if palette_of(&greedy) <= palette {
        return Ok(Some(coloring_from_elements(g, &greedy)));
    }
    let mut meter = Meter::new(limits);
    match attempt(&conf, palette, &mut meter) {
        Attempt::Found(colors) => Ok(Some(coloring_from_elements(g, &colors))),
        Attempt::Impossible => Ok(None),
        Attempt::Stopped(Interrupt::Budget) => Err(Error::BudgetExhausted {
            budget: limits.budget,
        }),
        Attempt::Stopped(Interrupt::Cancelled) => Err(Error::Cancelled),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    pub chi_total_lo: usize,
    pub chi_total_hi: usize,
    pub predicted: usize,
    /// `None` when the budget ran out before the value was settled.
    pub agrees: Option<bool>,
    pub nodes: u64,
}

/// `Δ+2` when `k > n/3 − 1` and `n` is odd, `Δ+1` otherwise.
pub fn predicted_total(n: usize, k: usize) -> usize {
    let delta = 2 * k;
    if n % 2 == 1 && 3 * k + 3 > n {
        delta + 2
    } else {
        delta + 1
    }
}

/// Oracle value of every `C_n^k` with `6 ≤ n ≤ n_max`, `2 ≤ k < ⌊n/2⌋`.
pub fn conjecture_sweep(n_max: usize, budget: u64, jobs: usize) -> Vec<SweepRow> {
    let instances: Vec<(usize, usize)> = (6..=n_max)
        .flat_map(|n| (2..n / 2).map(move |k| (n, k)))
        .collect();
    let run = |&(n, k): &(usize, usize)| {
        let g = build_power_of_cycle(n, k).expect("k < n/2");
        let out = total_chromatic_exact(&g, &SearchLimits::with_budget(budget));
        let predicted = predicted_total(n, k);
        SweepRow {
            n,
            k,
            delta: 2 * k,
            chi_total_lo: out.lower,
            chi_total_hi: out.upper,
            predicted,
            agrees: out.value().map(|v| v == predicted),
            nodes: out.nodes,
        }
    };
    let mut rows: Vec<SweepRow> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build();
        match pool {
            Ok(pool) => pool.install(|| instances.par_iter().map(run).collect()),
            Err(_) => instances.iter().map(run).collect(),
        }
    } else {
        instances.iter().map(run).collect()
    };
    rows.sort_by_key(|r| (r.n, r.k));
    rows
}

pub fn sweep_to_csv(rows: &[SweepRow]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record([
        "n",
        "k",
        "delta",
        "chi_total_lo",
        "chi_total_hi",
        "predicted",
        "agrees",
        "nodes",
    ])?;
    for r in rows {
        let agrees = match r.agrees {
            Some(true) => "true",
            Some(false) => "false",
            None => "unknown",
        };
        writer.write_record([
            r.n.to_string(),
            r.k.to_string(),
            r.delta.to_string(),
            r.chi_total_lo.to_string(),
            r.chi_total_hi.to_string(),
            r.predicted.to_string(),
            agrees.to_string(),
            r.nodes.to_string(),
        ])?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::Parse(format!("csv flush: {e}")))?;
    Ok(String::from_utf8(bytes).expect("ascii output"))
}
