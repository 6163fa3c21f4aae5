use std::collections::BTreeSet;

use super::ConstructionResult;
use crate::coloring::{one_factorize, verify, Color, TotalColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{build_cayley_from_table, GroupTable};
use crate::oracle::total_coloring_within;
use crate::search::SearchLimits;

const RECOLOR_BUDGET: u64 = 1_000_000;
const EXACT_BUDGET: u64 = 10_000_000;

/// Extends a total coloring `c` of `Cay(table, S)` to `Cay(table, S ∪ S_extra)`
/// by 1-factorizing `Cay(table, S_extra)` with `|S_extra|` fresh colors.
///
/// Vertex colors of `c` are kept. If a new edge joins two vertices of equal
/// color, the vertices are recolored from the existing palette by a bounded
/// search; if that fails too, the extended graph is colored by exact search
/// within the same bound. Either fallback is recorded in the notes.
pub fn cayley_extend(
    g: &Graph,
    c: &TotalColoring,
    table: &GroupTable,
    s: &[usize],
    s_extra: &[usize],
) -> Result<ConstructionResult> {
    let base = build_cayley_from_table(table, s)?;
    if &base != g {
        return Err(Error::InvalidGraph("graph is not Cay(table, S)".into()));
    }
    let report = verify(g, c);
    if !report.is_valid {
        return Err(Error::InvalidParameter(format!(
            "input coloring has {} violations",
            report.violations.len()
        )));
    }
    if s_extra.is_empty() {
        return ConstructionResult::checked(g, c.clone(), report.colors_used, "cayley-extend", Vec::new());
    }
    if table.order() % 2 == 1 {
        return Err(Error::InvalidParameter("group order must be even".into()));
    }
    table.check_connection_set(s_extra)?;
    if let Some(&x) = s_extra.iter().find(|x| s.contains(x)) {
        return Err(Error::InvalidParameter(format!("{x} lies in both S and S_extra")));
    }
    if let Some(&x) = s_extra.iter().find(|&&x| table.is_involution(x)) {
        return Err(Error::InvalidParameter(format!("{x} has order two")));
    }
    if !table.generates(s_extra) {
        return Err(Error::InvalidParameter("S_extra does not generate the group".into()));
    }

    let extra = build_cayley_from_table(table, s_extra)?;
    let factors = one_factorize(&extra)?;
    let union: Vec<usize> = s.iter().chain(s_extra).copied().collect();
    let big = build_cayley_from_table(table, &union)?;

    let offset = c.palette();
    let mut out = c.clone();
    for (f, matching) in factors.iter().enumerate() {
        for &(u, v) in matching {
            out.set_edge(u, v, offset + 1 + f as Color);
        }
    }
    let budget = report.colors_used + factors.len();
    let mut notes = Vec::new();
    let clash = big.edges().iter().any(|&(u, v)| out.vertex(u) == out.vertex(v));
    if clash {
        let palette: Vec<Color> = (1..=offset + factors.len() as Color).collect();
        let allowed: BTreeSet<Color> = out
            .vertex_colors
            .iter()
            .chain(out.edge_colors.values())
            .copied()
            .collect();
        let palette: Vec<Color> = palette.into_iter().filter(|c| allowed.contains(c)).collect();
        match recolor_vertices(&big, &out, &palette) {
            Ok(colors) => {
                out.vertex_colors = colors;
                notes.push("vertex colors clashed on new edges; recolored vertices by search".into());
            }
            Err(e) => {
                notes.push(format!("vertex recoloring failed ({e}); exact search on the extended graph"));
                let limits = SearchLimits::with_budget(EXACT_BUDGET);
                out = total_coloring_within(&big, budget, &limits)?.ok_or_else(|| {
                    Error::ConstructionFailed(format!("no total coloring within {budget} colors"))
                })?;
            }
        }
    }
    ConstructionResult::checked(&big, out, budget, "cayley-extend", notes)
}

/// Proper vertex coloring of `g` avoiding each vertex's incident edge colors,
/// preferring the current colors.
fn recolor_vertices(g: &Graph, c: &TotalColoring, palette: &[Color]) -> Result<Vec<Color>> {
    let n = g.vertex_count();
    let options: Vec<Vec<Color>> = (0..n)
        .map(|v| {
            let blocked: BTreeSet<Color> = g
                .neighbors(v)
                .iter()
                .filter_map(|&w| c.edge(v, w))
                .collect();
            let mut opts: Vec<Color> = palette.iter().copied().filter(|x| !blocked.contains(x)).collect();
            opts.sort_by_key(|&x| x != c.vertex(v));
            opts
        })
        .collect();
    fn place(
        v: usize,
        g: &Graph,
        options: &[Vec<Color>],
        colors: &mut Vec<Color>,
        nodes: &mut u64,
    ) -> Result<bool> {
        if v == colors.len() {
            return Ok(true);
        }
        *nodes += 1;
        if *nodes > RECOLOR_BUDGET {
            return Err(Error::BudgetExhausted {
                budget: RECOLOR_BUDGET,
            });
        }
        for &x in &options[v] {
            if g.neighbors(v).iter().any(|&w| w < v && colors[w] == x) {
                continue;
            }
            colors[v] = x;
            if place(v + 1, g, options, colors, nodes)? {
                return Ok(true);
            }
        }
        colors[v] = 0;
        Ok(false)
    }
    let mut colors = vec![0; n];
    let mut nodes = 0;
    if place(0, g, &options, &mut colors, &mut nodes)? {
        Ok(colors)
    } else {
        Err(Error::ConstructionFailed(
            "no vertex recoloring within the palette".into(),
        ))
    }
}
