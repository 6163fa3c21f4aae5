//! Mock threshold graphs: construction scripts, realization, recognition.
//!
//! A graph is mock threshold when its vertices can be ordered `v_0, v_1, ...`
//! so that `v_i` has 0, 1, `i - 1` or `i` neighbours among `v_0..v_i`
//! (0-based, so "all previous" is `i` vertices). A [`MockThresholdScript`]
//! records one such ordering step by step. Vertex references inside steps
//! are 0-based indices of earlier steps.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    /// No neighbours among earlier vertices.
    Isolated,
    /// Exactly one earlier neighbour.
    Pendant(Vertex),
    /// Adjacent to every earlier vertex except the given one.
    CoDominant(Vertex),
    /// Adjacent to every earlier vertex.
    Dominant,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MockThresholdScript {
    pub steps: Vec<Step>,
}

impl MockThresholdScript {
    pub fn new(steps: Vec<Step>) -> Self {
        MockThresholdScript { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        for (i, step) in self.steps.iter().enumerate() {
            match *step {
                Step::Pendant(j) | Step::CoDominant(j) if j >= i => {
                    return Err(Error::InvalidScript(format!(
                        "step {i} refers to vertex {j}, which is not earlier"
                    )));
                }
                _ => {}
            }
        }
        Ok(())
    }

    /// Random valid script with `n` steps; every step kind is drawn uniformly
    /// among the kinds that are meaningful at that position.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Self {
        let mut steps = Vec::with_capacity(n);
        for i in 0..n {
            let step = if i == 0 {
                Step::Isolated
            } else {
                match rng.gen_range(0..4) {
                    0 => Step::Isolated,
                    1 => Step::Pendant(rng.gen_range(0..i)),
                    2 => Step::CoDominant(rng.gen_range(0..i)),
                    _ => Step::Dominant,
                }
            };
            steps.push(step);
        }
        MockThresholdScript { steps }
    }
}

impl fmt::Display for MockThresholdScript {
    /// Compact text form: `I,P0,C1,D`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .steps
            .iter()
            .map(|s| match s {
                Step::Isolated => "I".to_string(),
                Step::Pendant(j) => format!("P{j}"),
                Step::CoDominant(j) => format!("C{j}"),
                Step::Dominant => "D".to_string(),
            })
            .collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for MockThresholdScript {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut steps = Vec::new();
        for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (kind, rest) = token.split_at(1);
            let index = || {
                rest.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad script token {token:?}")))
            };
            steps.push(match kind {
                "I" | "i" if rest.is_empty() => Step::Isolated,
                "D" | "d" if rest.is_empty() => Step::Dominant,
                "P" | "p" => Step::Pendant(index()?),
                "C" | "c" => Step::CoDominant(index()?),
                _ => return Err(Error::Parse(format!("bad script token {token:?}"))),
            });
        }
        let script = MockThresholdScript { steps };
        script.validate()?;
        Ok(script)
    }
}

/// Earlier neighbours of step `i`.
pub(crate) fn step_neighbors(i: usize, step: Step) -> Vec<Vertex> {
    match step {
        Step::Isolated => vec![],
        Step::Pendant(j) => vec![j],
        Step::CoDominant(j) => (0..i).filter(|&x| x != j).collect(),
        Step::Dominant => (0..i).collect(),
    }
}

/// Realizes a script. Vertex `i` of the result is the vertex added at step `i`.
pub fn build_mock_threshold(script: &MockThresholdScript) -> Result<Graph> {
    script.validate()?;
    let edges = script
        .steps
        .iter()
        .enumerate()
        .flat_map(|(i, &step)| step_neighbors(i, step).into_iter().map(move |j| (j, i)));
    Ok(Graph::from_edges_dedup(script.len(), edges))
}

/// Output of [`recognize_mock_threshold`]: `order[i]` is the vertex of the
/// input graph that plays step `i` of `script`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MockThresholdRecognition {
    pub script: MockThresholdScript,
    pub order: Vec<Vertex>,
}

/// Finds a mock threshold ordering by peeling vertices off the end.
///
/// A vertex can be last iff its degree in the remaining graph `H` is 0, 1,
/// `|H| - 2` or `|H| - 1`. Vertices of degree at most 1 are tried first,
/// then the rest, each group lowest index first, with full backtracking;
/// vertex subsets already shown to be unpeelable are memoized.
pub fn recognize_mock_threshold(g: &Graph) -> Option<MockThresholdRecognition> {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut peeled = Vec::with_capacity(n);
    let mut failed: HashSet<Vec<bool>> = HashSet::new();
    if !peel(g, &mut alive, &mut degree, n, &mut peeled, &mut failed) {
        return None;
    }
    peeled.reverse();
    let order = peeled;
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let steps = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let earlier: Vec<usize> = g
                .neighbors(v)
                .iter()
                .map(|&w| position[w])
                .filter(|&p| p < i)
                .collect();
            match earlier.len() {
                0 => Step::Isolated,
                d if d == i => Step::Dominant,
                1 => Step::Pendant(earlier[0]),
                d if d + 1 == i => {
                    let missing = (0..i).find(|p| !earlier.contains(p)).expect("one non-neighbour");
                    Step::CoDominant(missing)
                }
                _ => unreachable!("peel only removes admissible vertices"),
            }
        })
        .collect();
    Some(MockThresholdRecognition {
        script: MockThresholdScript { steps },
        order,
    })
}

fn peel(
    g: &Graph,
    alive: &mut [bool],
    degree: &mut [usize],
    remaining: usize,
    peeled: &mut Vec<Vertex>,
    failed: &mut HashSet<Vec<bool>>,
) -> bool {
    if remaining == 0 {
        return true;
    }
    if failed.contains(alive) {
        return false;
    }
    let leaves = (0..alive.len()).filter(|&v| alive[v] && degree[v] <= 1);
    let dense = (0..alive.len())
        .filter(|&v| alive[v] && degree[v] > 1 && degree[v] + 2 >= remaining);
    let candidates: Vec<Vertex> = leaves.chain(dense).collect();
    for v in candidates {
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
            }
        }
        peeled.push(v);
        if peel(g, alive, degree, remaining - 1, peeled, failed) {
            return true;
        }
        peeled.pop();
        for &w in g.neighbors(v) {
            if alive[w] {
                degree[w] += 1;
            }
        }
        alive[v] = true;
    }
    failed.insert(alive.to_vec());
    false
}
