//! Color matrices for powers of cycles.

use super::ConstructionResult;
use crate::coloring::{
    coloring_to_matrix, hamiltonian_split, matrix_to_coloring, verify, Color, ColorMatrix,
    TotalColoring,
};
use crate::error::{Error, Result};
use crate::families::build_power_of_cycle;
use crate::graph::Graph;
use crate::latin::anti_circulant_square;
use crate::numtheory::gcd;
use crate::oracle::total_coloring_within;
use crate::search::SearchLimits;

/// Node budget of the last-resort search in [`poc_any_odd`].
const FALLBACK_BUDGET: u64 = 10_000_000;

fn cyclic_distance(a: usize, b: usize, n: usize) -> usize {
    let d = a.abs_diff(b);
    d.min(n - d)
}

fn latin_cell(q: usize, a: usize, b: usize) -> Color {
    let half = (q + 1) / 2;
    (((a + b + 2) * half - 1) % q + 1) as Color
}

/// Verifies that `m` is a total coloring of `C_n^k` with at most `palette`
/// colors, returning the coloring.
fn check_matrix(m: &ColorMatrix, k: usize, palette: usize, what: &str) -> Result<TotalColoring> {
    let n = m.size();
    let g = build_power_of_cycle(n, k)?;
    let c = matrix_to_coloring(&g, m)?;
    let report = verify(&g, &c);
    if !report.is_valid {
        return Err(Error::ConstructionFailed(format!(
            "{what}: matrix for C_{n}^{k} has {} violations, first {:?}",
            report.violations.len(),
            report.violations[0]
        )));
    }
    if report.colors_used > palette {
        return Err(Error::ConstructionFailed(format!(
            "{what}: {} colors exceed {palette}",
            report.colors_used
        )));
    }
    Ok(c)
}

/// `M[i][j] = L[i mod q][j mod q]` on the support of `C_n^k`, where
/// `k = (n − 2)/4`, `q = 2k + 1` and `L` is the anti-circulant square.
pub fn poc_base(n: usize) -> Result<ColorMatrix> {
    if n < 6 || n % 4 != 2 {
        return Err(Error::InvalidParameter(format!(
            "base construction needs n = 2(2k+1) with k >= 1, got {n}"
        )));
    }
    let k = (n - 2) / 4;
    let q = 2 * k + 1;
    debug_assert!(anti_circulant_square(q).is_ok());
    let mut m = ColorMatrix::zeros(n);
    for a in 0..n {
        for b in a..n {
            if a == b || cyclic_distance(a, b, n) <= k {
                m.set(a, b, latin_cell(q, a % q, b % q));
            }
        }
    }
    check_matrix(&m, k, q, "base")?;
    Ok(m)
}

/// `(s, m, i)` with `n = s(2m+1)`, `s` even, `k = 2m + 1 − i`, using the
/// smallest admissible block order `2m + 1`.
pub fn block_parameters(n: usize, k: usize) -> Option<(usize, usize, usize)> {
    block_orders(n, k).next().map(|q| (n / q, (q - 1) / 2, q - k))
}

fn block_orders(n: usize, k: usize) -> impl Iterator<Item = usize> {
    (k + 1..=2 * k + 1)
        .filter(move |&q| q >= 3 && q % 2 == 1 && n % q == 0 && (n / q) % 2 == 0)
}

/// Block construction for `C_n^k` with `2k + 1` colors.
pub fn poc_block(n: usize, k: usize) -> Result<ColorMatrix> {
    let (s, m, i) = block_parameters(n, k).ok_or_else(|| {
        Error::InvalidParameter(format!(
            "no odd q in {}..={} with q | {n} and {n}/q even",
            k + 1,
            2 * k + 1
        ))
    })?;
    poc_block_with(s, m, i)
}

/// Block construction for `n = s(2m+1)`, `k = 2m + 1 − i`.
///
/// Vertices fall into `s` blocks of `q = 2m + 1`. Pairs inside a block, and
/// pairs at distance below `i`, copy the latin square `C′` of order `q`.
/// A crossing pair at distance `d ≥ i` whose forward block is `r` gets
/// `2m + 2 + k − d` when `r` is even and `k + 1 + d` when `r` is odd.
pub fn poc_block_with(s: usize, m: usize, i: usize) -> Result<ColorMatrix> {
    if s < 2 || s % 2 == 1 || m == 0 || i == 0 || i > m + 1 {
        return Err(Error::InvalidParameter(format!(
            "block construction needs even s >= 2, m >= 1 and 1 <= i <= m+1, got s={s}, m={m}, i={i}"
        )));
    }
    let q = 2 * m + 1;
    let k = q - i;
    let n = s * q;
    let mut mat = ColorMatrix::zeros(n);
    for a in 0..n {
        mat.set(a, a, latin_cell(q, a % q, a % q));
        for b in a + 1..n {
            let d = cyclic_distance(a, b, n);
            if d > k {
                continue;
            }
            let (ba, bb) = (a / q, b / q);
            let c = if ba == bb || d < i {
                latin_cell(q, a % q, b % q)
            } else {
                let forward = if (b + n - a) % n == d { ba } else { bb };
                if forward % 2 == 0 {
                    (2 * m + 2 + k - d) as Color
                } else {
                    (k + 1 + d) as Color
                }
            };
            mat.set(a, b, c);
        }
    }
    check_matrix(&mat, k, 2 * k + 1, &format!("block s={s} m={m} i={i}"))?;
    Ok(mat)
}

/// Adds distances `k₀+1..=k` to the base coloring of `C_n^{k₀}`, two fresh
/// colors per distance, each distance being a Hamiltonian cycle split into
/// two perfect matchings.
pub fn poc_augment(n: usize, k: usize) -> Result<TotalColoring> {
    let base = poc_base(n)?;
    let k0 = (n - 2) / 4;
    if k < k0 || 2 * k >= n {
        return Err(Error::InvalidParameter(format!(
            "augmentation needs {k0} <= k < {}, got {k}",
            n.div_ceil(2)
        )));
    }
    if let Some(x) = (k0 + 1..=k).find(|&x| gcd(n, x) != 1) {
        return Err(Error::InvalidParameter(format!(
            "added distance {x} shares the factor {} with n = {n}",
            gcd(n, x)
        )));
    }
    let g0 = build_power_of_cycle(n, k0)?;
    let mut c = matrix_to_coloring(&g0, &base)?;
    let mut next = (2 * k0 + 1) as Color;
    for x in k0 + 1..=k {
        let (first, second) = hamiltonian_split(n, x)?;
        for (matching, color) in [(first, next + 1), (second, next + 2)] {
            for (u, v) in matching {
                c.set_edge(u, v, color);
            }
        }
        next += 2;
    }
    let g = build_power_of_cycle(n, k)?;
    let report = verify(&g, &c);
    if !report.is_valid || report.colors_used != 2 * k + 1 {
        return Err(Error::ConstructionFailed(format!(
            "augmentation of C_{n}^{k}: valid={}, {} colors",
            report.is_valid, report.colors_used
        )));
    }
    Ok(c)
}

/// Drops the last vertex of a `(2k+1)`-color matrix of `C_{n+1}^k` and
/// closes the `k` wrap-around gaps `(i, i + n − k)` with color `2k + 2`.
pub fn poc_shrink(m: &ColorMatrix, k: usize) -> Result<ColorMatrix> {
    let big = m.size();
    if k == 0 || big < 2 * k + 2 {
        return Err(Error::InvalidParameter(format!(
            "shrink needs k >= 1 and a matrix of size > 2k+1, got k={k}, size {big}"
        )));
    }
    check_matrix(m, k, 2 * k + 1, "shrink input")?;
    let n = big - 1;
    let fresh = (2 * k + 2) as Color;
    let mut out = m.truncate(n);
    for i in 0..k {
        debug_assert_eq!(out.get(i, i + n - k), 0);
        out.set(i, i + n - k, fresh);
    }
    check_matrix(&out, k, 2 * k + 2, "shrink")?;
    Ok(out)
}

/// Appends a vertex to a `(2k+1)`-color matrix of `C_{n−1}^k`. The new
/// vertex takes color `2k + 2` and inherits the colors of the cells
/// `(i, i + k)` and `(i, i + n − 1 − k)`, `i < k`; the first become
/// `2k + 2`, the second are cleared.
pub fn poc_grow(m: &ColorMatrix, k: usize) -> Result<ColorMatrix> {
    let small = m.size();
    if k == 0 || small < 2 * k + 1 {
        return Err(Error::InvalidParameter(format!(
            "grow needs k >= 1 and a matrix of size > 2k, got k={k}, size {small}"
        )));
    }
    check_matrix(m, k, 2 * k + 1, "grow input")?;
    let n = small + 1;
    let last = n - 1;
    let fresh = (2 * k + 2) as Color;
    let mut out = m.extend(n);
    for i in 0..k {
        let near = out.get(i, i + k);
        out.set(i, last, near);
        out.set(i, i + k, fresh);
        let j = i + small - k;
        let wrap = out.get(i, j);
        out.set(j, last, wrap);
        out.set(i, j, 0);
    }
    out.set(last, last, fresh);
    check_matrix(&out, k, 2 * k + 2, "grow")?;
    Ok(out)
}

/// `(s, m, i)` with `n = s(2m+1)`, `s` even, `k/2 < m ≤ k`, `k = 2m+1−i`:
/// the block bases that [`poc_shrink`] and [`poc_grow`] extend.
pub fn extension_scope(n: usize, k: usize) -> Option<(usize, usize, usize)> {
    block_orders(n, k)
        .map(|q| (n / q, (q - 1) / 2, q - k))
        .find(|&(_, m, _)| 2 * m > k)
}

/// Even-order `(2k+1)`-color matrices of `C_n^k`, labelled.
fn even_bases(n: usize, k: usize) -> Vec<(String, Result<ColorMatrix>)> {
    let mut out: Vec<(String, Result<ColorMatrix>)> = block_orders(n, k)
        .map(|q| {
            let (s, m, i) = (n / q, (q - 1) / 2, q - k);
            (format!("block(q={q})"), poc_block_with(s, m, i))
        })
        .collect();
    if n % 4 == 2 && n >= 6 && (n - 2) / 4 <= k && 2 * k < n {
        let g = build_power_of_cycle(n, k);
        let m = poc_augment(n, k).and_then(|c| coloring_to_matrix(&g?, &c));
        out.push(("augment".into(), m));
    }
    out
}

/// Colors `C_n^k`, `n` odd, by shrinking a base of order `n + 1` or growing
/// one of order `n − 1`. The bound is `2k + 2` when `n ± 1 = s(2m+1)` has
/// a block base and `2k + 3` otherwise; when no base works a bounded exact search is run
/// with the same bound and noted.
pub fn poc_any_odd(n: usize, k: usize) -> Result<ConstructionResult> {
    if n % 2 == 0 || k == 0 || 2 * k >= n {
        return Err(Error::InvalidParameter(format!(
            "odd-order construction needs odd n and 1 <= k < n/2, got n={n}, k={k}"
        )));
    }
    let g = build_power_of_cycle(n, k)?;
    let has_block = block_parameters(n + 1, k).is_some() || block_parameters(n - 1, k).is_some();
    let budget = if has_block { 2 * k + 2 } else { 2 * k + 3 };
    let mut notes = Vec::new();
    type Step = fn(&ColorMatrix, usize) -> Result<ColorMatrix>;
    let mut plans: Vec<(&str, usize, Step)> = vec![("shrink", n + 1, poc_shrink)];
    if 2 * k < n - 1 {
        plans.push(("grow", n - 1, poc_grow));
    }
    for (verb, order, step) in plans {
        for (label, base) in even_bases(order, k) {
            let attempt = base.and_then(|b| step(&b, k)).and_then(|m| matrix_to_coloring(&g, &m));
            match attempt {
                Ok(c) => {
                    let method = format!("{verb} {label} of C_{order}^{k}");
                    return ConstructionResult::checked(&g, c, budget, method, notes);
                }
                Err(e) => notes.push(format!("{verb} {label} of C_{order}^{k} failed: {e}")),
            }
        }
    }
    let limits = SearchLimits::with_budget(FALLBACK_BUDGET);
    match total_coloring_within(&g, budget, &limits)? {
        Some(c) => {
            notes.push(format!("fell back to exact search within {budget} colors"));
            ConstructionResult::checked(&g, c, budget, "exact search", notes)
        }
        None => Err(Error::ConstructionFailed(format!(
            "C_{n}^{k} has no total coloring within {budget} colors"
        ))),
    }
}

/// Colors `C_n^k` with the named even-order construction.
pub fn poc_even(g: &Graph, n: usize, k: usize, method: &str) -> Result<ConstructionResult> {
    let (c, label) = match method {
        "base" => {
            if (n - 2) / 4 != k {
                return Err(Error::InvalidParameter(format!(
                    "base construction of C_{n} has k = {}, got {k}",
                    (n - 2) / 4
                )));
            }
            (matrix_to_coloring(g, &poc_base(n)?)?, "base")
        }
        "augment" => (poc_augment(n, k)?, "augment"),
        "block" => (matrix_to_coloring(g, &poc_block(n, k)?)?, "block"),
        other => {
            return Err(Error::InvalidParameter(format!("unknown even-order method {other:?}")))
        }
    };
    ConstructionResult::checked(g, c, 2 * k + 1, label, Vec::new())
}
