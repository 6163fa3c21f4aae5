//! Finite groups given by explicit multiplication tables, and their Cayley
//! graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest group order accepted by [`GroupTable::new`].
pub const DEFAULT_MAX_ORDER: usize = 64;

/// A validated group operation table: `product(a, b)` is row `a`, column `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct GroupTable {
    order: usize,
    cells: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::with_max_order(rows, DEFAULT_MAX_ORDER)
    }

    /// Checks closure, associativity, identity and inverses.
    pub fn with_max_order(rows: Vec<Vec<usize>>, max_order: usize) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if order > max_order {
            return Err(Error::NotAGroup(format!(
                "order {order} exceeds the configured limit {max_order}"
            )));
        }
        let mut cells = Vec::with_capacity(order * order);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::NotAGroup(format!("row {a} has {} entries", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= order) {
                return Err(Error::NotAGroup(format!("entry {x} in row {a} is not an element")));
            }
            cells.extend_from_slice(row);
        }
        let mul = |a: usize, b: usize| cells[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| mul(e, a) == a && mul(a, e) == a))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inverse = vec![0; order];
        for a in 0..order {
            inverse[a] = (0..order)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))?;
        }
        for a in 0..order {
            for b in 0..order {
                let ab = mul(a, b);
                for c in 0..order {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails for ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(GroupTable {
            order,
            cells,
            identity,
            inverse,
        })
    }

    /// The cyclic group `Z_n` under addition.
    pub fn cyclic(n: usize) -> Result<Self> {
        Self::with_max_order(
            (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
            n.max(DEFAULT_MAX_ORDER),
        )
    }

    /// Direct product with element `(a, b)` encoded as `a * other.order + b`.
    pub fn direct_product(&self, other: &GroupTable) -> Result<Self> {
        let order = self.order * other.order;
        let rows = (0..order)
            .map(|x| {
                (0..order)
                    .map(|y| {
                        let (xa, xb) = (x / other.order, x % other.order);
                        let (ya, yb) = (y / other.order, y % other.order);
                        self.product(xa, ya) * other.order + other.product(xb, yb)
                    })
                    .collect()
            })
            .collect();
        Self::with_max_order(rows, order.max(DEFAULT_MAX_ORDER))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// Some `s != 1` with `s * s = 1`, or `None` for groups of odd order.
    pub fn order_two_element(&self) -> Option<usize> {
        (0..self.order).find(|&s| s != self.identity && self.product(s, s) == self.identity)
    }

    pub fn is_involution(&self, s: usize) -> bool {
        s != self.identity && self.product(s, s) == self.identity
    }

    /// Whether `set` generates the whole group.
    pub fn generates(&self, set: &[usize]) -> bool {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut stack = vec![self.identity];
        while let Some(a) = stack.pop() {
            for &s in set {
                let b = self.product(a, s);
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    /// Rejects sets containing the identity, out-of-range elements, or
    /// elements whose inverse is missing.
    pub fn check_connection_set(&self, set: &[usize]) -> Result<()> {
        for &s in set {
            if s >= self.order {
                return Err(Error::InvalidParameter(format!("{s} is not a group element")));
            }
            if s == self.identity {
                return Err(Error::InvalidParameter(
                    "connection set contains the identity".into(),
                ));
            }
            let inv = self.inverse(s);
            if !set.contains(&inv) {
                return Err(Error::NotInverseClosed(s, inv));
            }
        }
        Ok(())
    }
}

impl TryFrom<Vec<Vec<usize>>> for GroupTable {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        GroupTable::new(rows)
    }
}

impl From<GroupTable> for Vec<Vec<usize>> {
    fn from(table: GroupTable) -> Self {
        table.rows()
    }
}

/// `Cay(group, S)`: `a ~ b` iff `a * b^-1` is in `S`.
pub fn build_cayley_from_table(table: &GroupTable, generators: &[usize]) -> Result<Graph> {
    table.check_connection_set(generators)?;
    let n = table.order();
    let mut edges = Vec::new();
    for a in 0..n {
        for &s in generators {
            // a * b^-1 = s  <=>  b = s^-1 * a
            let b = table.product(table.inverse(s), a);
            edges.push((a, b));
        }
    }
    Ok(Graph::from_edges_dedup(n, edges))
}
