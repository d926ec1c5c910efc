//! Backtracking search for classical coprime labelings with labels in `1..=k`.
//!
//! Vertices are visited by descending degree (ties by id); candidate labels
//! are tried in ascending order. Labels with the same set of prime divisors
//! behave identically under every coprimality constraint, so at each level
//! only the first unused label of each such class is tried. An exhausted
//! search is therefore a proof of infeasibility.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::labeling::Labeling;
use crate::number_theory::factorize_u64;

/// Search limits. Hitting either one yields [`SolveStatus::Timeout`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveLimits {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits {
            max_nodes: Some(50_000_000),
            max_time: None,
        }
    }
}

impl SolveLimits {
    pub fn unlimited() -> Self {
        SolveLimits {
            max_nodes: None,
            max_time: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SolveStatus {
    Feasible { labeling: Labeling },
    Infeasible,
    Timeout,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    #[serde(flatten)]
    pub status: SolveStatus,
    pub nodes_explored: u64,
    /// Largest label allowed.
    pub budget: u64,
}

impl SolveResult {
    pub fn labeling(&self) -> Option<&Labeling> {
        match &self.status {
            SolveStatus::Feasible { labeling } => Some(labeling),
            _ => None,
        }
    }
}

/// Decides whether `g` has a coprime labeling with distinct labels in `1..=k`.
pub fn solve_coprime_labeling(g: &Graph, k: u64, limits: SolveLimits) -> Result<SolveResult> {
    let n = g.vertex_count();
    if k < n as u64 {
        return Err(Error::InvalidParameter(format!(
            "label budget k={k} is smaller than the vertex count {n}"
        )));
    }
    if k > u32::MAX as u64 {
        return Err(Error::InvalidParameter(format!("label budget k={k} too large")));
    }

    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // Neighbours placed earlier in the visiting order.
    let earlier: Vec<Vec<VertexId>> = order
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| position[w] < position[v])
                .collect()
        })
        .collect();

    let mut classes: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut class_of = vec![0usize; k as usize + 1];
    for label in 1..=k {
        let signature: Vec<u64> = factorize_u64(label).into_iter().map(|(p, _)| p).collect();
        let next = classes.len();
        class_of[label as usize] = *classes.entry(signature).or_insert(next);
    }

    let mut search = Search {
        k,
        order: &order,
        earlier: &earlier,
        class_of: &class_of,
        class_count: classes.len(),
        assigned: vec![0; n],
        used: vec![false; k as usize + 1],
        nodes: 0,
        limits,
        started: Instant::now(),
        timed_out: false,
    };
    let found = search.descend(0);
    let status = if found {
        SolveStatus::Feasible {
            labeling: Labeling::from_values(search.assigned.iter().copied())?,
        }
    } else if search.timed_out {
        SolveStatus::Timeout
    } else {
        SolveStatus::Infeasible
    };
    Ok(SolveResult {
        status,
        nodes_explored: search.nodes,
        budget: k,
    })
}

struct Search<'a> {
    k: u64,
    order: &'a [VertexId],
    earlier: &'a [Vec<VertexId>],
    class_of: &'a [usize],
    class_count: usize,
    assigned: Vec<u64>,
    used: Vec<bool>,
    nodes: u64,
    limits: SolveLimits,
    started: Instant,
    timed_out: bool,
}

impl Search<'_> {
    fn out_of_budget(&mut self) -> bool {
        if let Some(max) = self.limits.max_nodes {
            if self.nodes >= max {
                self.timed_out = true;
            }
        }
        if let Some(max) = self.limits.max_time {
            if self.nodes.is_multiple_of(1024) && self.started.elapsed() >= max {
                self.timed_out = true;
            }
        }
        self.timed_out
    }

    fn descend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let mut tried = vec![false; self.class_count];
        for label in 1..=self.k {
            let class = self.class_of[label as usize];
            if self.used[label as usize] || tried[class] {
                continue;
            }
            tried[class] = true;
            let fits = self.earlier[depth]
                .iter()
                .all(|&w| self.assigned[w].gcd(&label) == 1);
            if !fits {
                continue;
            }
            if self.out_of_budget() {
                return false;
            }
            self.nodes += 1;
            self.assigned[v] = label;
            self.used[label as usize] = true;
            if self.descend(depth + 1) {
                return true;
            }
            self.used[label as usize] = false;
            self.assigned[v] = 0;
            if self.timed_out {
                return false;
            }
        }
        false
    }
}
