//! Latin squares with symbols `1..=q`.
//!
//! The constructions only need one square per odd order: the anti-circulant,
//! commutative, idempotent square whose cell `(i, j)` (1-based) is
//! `((i + j) * (q + 1) / 2 - 1) mod q + 1`. Its first row for `q = 2k + 1` is
//! `1, k+2, 2, k+3, ..., 2k+1, k+1`.

use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatinSquare {
    order: usize,
    cells: Vec<u32>,
}

impl LatinSquare {
    /// Wraps an arbitrary square array; no latin property is checked, so the
    /// predicates below can be applied to it.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::InvalidParameter("latin square rows must be square".into()));
        }
        Ok(LatinSquare {
            order,
            cells: rows.into_iter().flatten().collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Cell at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.cells[row * self.order + col]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.cells.chunks(self.order).map(<[u32]>::to_vec).collect()
    }

    pub fn is_latin(&self) -> bool {
        let q = self.order;
        let perm = |line: Vec<u32>| {
            let mut seen = vec![false; q + 1];
            line.into_iter().all(|s| {
                let ok = (1..=q as u32).contains(&s) && !seen[s as usize];
                if ok {
                    seen[s as usize] = true;
                }
                ok
            })
        };
        (0..q).all(|r| perm((0..q).map(|c| self.get(r, c)).collect()))
            && (0..q).all(|c| perm((0..q).map(|r| self.get(r, c)).collect()))
    }

    pub fn is_commutative(&self) -> bool {
        let q = self.order;
        (0..q).all(|r| (r + 1..q).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// Diagonal cell `i` (1-based) holds symbol `i`.
    pub fn is_idempotent(&self) -> bool {
        (0..self.order).all(|i| self.get(i, i) == i as u32 + 1)
    }

    /// Each row is the previous row shifted cyclically one place left.
    pub fn is_anti_circulant(&self) -> bool {
        let q = self.order;
        (1..q).all(|r| (0..q).all(|c| self.get(r, c) == self.get(r - 1, (c + 1) % q)))
    }

    /// `q` lines of comma-separated symbols.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.cells.chunks(self.order.max(1)) {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            let _ = writeln!(out, "{}", line.join(","));
        }
        out
    }
}

/// The anti-circulant commutative idempotent square of odd order `q`.
pub fn anti_circulant_square(q: usize) -> Result<LatinSquare> {
    if q == 0 || q % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "anti-circulant square needs odd positive order, got {q}"
        )));
    }
    let half = (q + 1) / 2;
    let cells = (0..q)
        .flat_map(|r| (0..q).map(move |c| ((r + c + 2) * half - 1) % q + 1))
        .map(|s| s as u32)
        .collect();
    Ok(LatinSquare { order: q, cells })
}
