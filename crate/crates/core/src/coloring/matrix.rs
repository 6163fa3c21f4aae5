use std::collections::BTreeMap;

use super::{Color, TotalColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Symmetric `n x n` array: vertex colors on the diagonal, the color of edge
/// `{i, j}` at `(i, j)` and `(j, i)`, `0` elsewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorMatrix {
    n: usize,
    cells: Vec<Color>,
}

impl ColorMatrix {
    pub fn zeros(n: usize) -> Self {
        ColorMatrix {
            n,
            cells: vec![0; n * n],
        }
    }

    /// Builds from rows; fails unless the rows form a symmetric square.
    pub fn from_rows(rows: &[Vec<Color>]) -> Result<Self> {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse(format!("row {i} has {} cells, expected {n}", row.len())));
            }
            m.cells[i * n..(i + 1) * n].copy_from_slice(row);
        }
        for i in 0..n {
            for j in i + 1..n {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::SupportMismatch {
                        row: i,
                        col: j,
                        reason: format!("asymmetric: {} vs {}", m.get(i, j), m.get(j, i)),
                    });
                }
            }
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Color {
        self.cells[i * self.n + j]
    }

    /// Writes both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, c: Color) {
        self.cells[i * self.n + j] = c;
        self.cells[j * self.n + i] = c;
    }

    pub fn rows(&self) -> Vec<Vec<Color>> {
        self.cells.chunks(self.n.max(1)).take(self.n).map(<[Color]>::to_vec).collect()
    }

    pub fn max_color(&self) -> Color {
        self.cells.iter().copied().max().unwrap_or(0)
    }

    /// Graph given by the off-diagonal nonzero cells.
    pub fn support_graph(&self) -> Graph {
        let n = self.n;
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Graph::from_edges_dedup(n, edges.filter(|&(i, j)| self.get(i, j) != 0))
    }

    /// Copy of the leading `k x k` block.
    pub fn truncate(&self, k: usize) -> ColorMatrix {
        let mut m = ColorMatrix::zeros(k);
        for i in 0..k {
            for j in 0..k {
                m.cells[i * k + j] = self.get(i, j);
            }
        }
        m
    }

    /// Copy padded with blank rows and columns up to size `k`.
    pub fn extend(&self, k: usize) -> ColorMatrix {
        let mut m = ColorMatrix::zeros(k);
        for i in 0..self.n {
            for j in 0..self.n {
                m.cells[i * k + j] = self.get(i, j);
            }
        }
        m
    }

    /// Same coloring with vertex `v` renamed `(v + shift) mod n`.
    pub fn rotate(&self, shift: usize) -> ColorMatrix {
        let n = self.n;
        let mut m = ColorMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.cells[((i + shift) % n) * n + (j + shift) % n] = self.get(i, j);
            }
        }
        m
    }

    /// One row per line, comma separated, blanks as `0`.
    pub fn to_csv(&self) -> String {
        let mut writer = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
        for row in self.rows() {
            writer.write_record(row.iter().map(Color::to_string)).expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("ascii output")
    }

    /// Parses CSV; empty cells read as blanks.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let mut rows = Vec::new();
        for record in reader.records() {
            let record = record?;
            let row = record
                .iter()
                .map(|cell| {
                    if cell.is_empty() {
                        Ok(0)
                    } else {
                        cell.parse::<Color>()
                            .map_err(|_| Error::Parse(format!("bad matrix cell {cell:?}")))
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Self::from_rows(&rows)
    }
}

/// Reads a full total coloring of `g` out of `m`. The off-diagonal support
/// must coincide with the adjacency of `g` and every diagonal cell must be
/// nonzero.
pub fn matrix_to_coloring(g: &Graph, m: &ColorMatrix) -> Result<TotalColoring> {
    let n = g.vertex_count();
    if m.size() != n {
        return Err(Error::SupportMismatch {
            row: m.size().min(n),
            col: m.size().min(n),
            reason: format!("matrix is {0}x{0} but the graph has {n} vertices", m.size()),
        });
    }
    let mut vertex_colors = Vec::with_capacity(n);
    let mut edge_colors = BTreeMap::new();
    for i in 0..n {
        if m.get(i, i) == 0 {
            return Err(Error::SupportMismatch {
                row: i,
                col: i,
                reason: "diagonal cell is blank".into(),
            });
        }
        vertex_colors.push(m.get(i, i));
        for j in i + 1..n {
            let c = m.get(i, j);
            match (c != 0, g.has_edge(i, j)) {
                (true, true) => {
                    edge_colors.insert((i, j), c);
                }
                (false, false) => {}
                (true, false) => {
                    return Err(Error::SupportMismatch {
                        row: i,
                        col: j,
                        reason: format!("color {c} on a non-edge"),
                    })
                }
                (false, true) => {
                    return Err(Error::SupportMismatch {
                        row: i,
                        col: j,
                        reason: "edge has a blank cell".into(),
                    })
                }
            }
        }
    }
    Ok(TotalColoring {
        vertex_colors,
        edge_colors,
    })
}

/// Writes `c` into a matrix. Colored pairs that are not edges of `g` are
/// rejected.
pub fn coloring_to_matrix(g: &Graph, c: &TotalColoring) -> Result<ColorMatrix> {
    let n = g.vertex_count();
    let mut m = ColorMatrix::zeros(n);
    for v in 0..n {
        m.set(v, v, c.vertex(v));
    }
    for (&(u, v), &col) in &c.edge_colors {
        if !g.has_edge(u, v) {
            return Err(Error::SupportMismatch {
                row: u,
                col: v,
                reason: "coloring assigns a color to a non-edge".into(),
            });
        }
        m.set(u, v, col);
    }
    Ok(m)
}
