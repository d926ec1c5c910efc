//! Finite simple undirected graphs and the named families used throughout
//! the crate.
//!
//! Vertex ids are dense indices in `0..n`. Graphs are immutable once built;
//! every constructor funnels through [`Graph::from_edge_list`] so the
//! simplicity invariants are checked in exactly one place.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;

/// Named graph families with canonical vertex numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `P_n`: vertices `0..n`, edges `i ~ i+1`.
    Path,
    /// `C_n`: the path plus the closing edge `n-1 ~ 0`.
    Cycle,
    /// `W_n`: hub `0` joined to rim vertices `1..=n`, which form a cycle.
    Wheel,
    /// `Q_n`: vertex id is the integer whose binary digits are the
    /// coordinate vector; edges join ids at Hamming distance one.
    Hypercube,
    /// `K_n`.
    Complete,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Path,
        Family::Cycle,
        Family::Wheel,
        Family::Hypercube,
        Family::Complete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Wheel => "wheel",
            Family::Hypercube => "hypercube",
            Family::Complete => "complete",
        }
    }

    /// Checks the size parameter and returns the vertex count of the member.
    pub fn vertex_count(self, n: usize) -> Result<usize> {
        let bad = |what: &str| Err(Error::InvalidParameter(format!("{} requires {what}, got n={n}", self.name())));
        match self {
            Family::Path | Family::Complete if n < 1 => bad("n >= 1"),
            Family::Cycle if n < 3 => bad("n >= 3"),
            Family::Wheel if n < 3 => bad("n >= 3"),
            Family::Hypercube if n < 1 => bad("n >= 1"),
            Family::Hypercube if n > 24 => bad("n <= 24"),
            Family::Path | Family::Cycle | Family::Complete => Ok(n),
            Family::Wheel => Ok(n + 1),
            Family::Hypercube => Ok(1 << n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "unknown family {s:?}; expected one of path, cycle, wheel, hypercube, complete"
                ))
            })
    }
}

/// A finite simple undirected graph.
///
/// Serializes as `{"n": <vertex count>, "edges": [[a, b], ...]}` with
/// `a < b` and edges in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<VertexId>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<[VertexId; 2]>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::from_edge_list(raw.n, raw.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            n: g.n,
            edges: g.edges.into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl Graph {
    /// Validates and normalizes an edge list. Pairs are unordered, so
    /// `(0, 1)` and `(1, 0)` collapse into a single edge.
    pub fn from_edge_list<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        if vertex_count == 0 {
            return Err(Error::InvalidParameter("vertex_count must be positive".into()));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::VertexOutOfRange(a, b, vertex_count));
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            set.insert((a.min(b), a.max(b)));
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            n: vertex_count,
            edges,
            adjacency,
        })
    }

    /// Builds the `n`-th member of a named family.
    pub fn family(family: Family, n: usize) -> Result<Self> {
        let count = family.vertex_count(n)?;
        let edges: Vec<(usize, usize)> = match family {
            Family::Path => (1..n).map(|i| (i - 1, i)).collect(),
            Family::Cycle => (0..n).map(|i| (i, (i + 1) % n)).collect(),
            Family::Wheel => (1..=n)
                .map(|i| (0, i))
                .chain((1..=n).map(|i| (i, if i == n { 1 } else { i + 1 })))
                .collect(),
            Family::Hypercube => (0..count)
                .flat_map(|v| (0..n).map(move |bit| (v, v ^ (1 << bit))))
                .filter(|&(a, b)| a < b)
                .collect(),
            Family::Complete => (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .collect(),
        };
        Graph::from_edge_list(count, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Normalized edges, `a < b`, sorted.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        a < self.n && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Two-colours the graph; returns `None` exactly when an odd cycle exists.
    pub fn bipartition(&self) -> Option<Bipartition> {
        self.two_colouring().ok()
    }

    /// Like [`Graph::bipartition`] but returns an odd cycle as the witness
    /// when the graph is not bipartite.
    pub fn two_colouring(&self) -> std::result::Result<Bipartition, Vec<VertexId>> {
        let mut colour: Vec<Option<u8>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        // Components are rooted at their smallest id, which lands in part0.
        for root in 0..self.n {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(0);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for &w in &self.adjacency[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(1 - cu);
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => {
                            return Err(odd_cycle(u, w, &parent, &depth));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut part0, mut part1) = (Vec::new(), Vec::new());
        for (v, c) in colour.into_iter().enumerate() {
            if c == Some(0) {
                part0.push(v);
            } else {
                part1.push(v);
            }
        }
        Ok(Bipartition { part0, part1 })
    }
}

/// Walks both BFS-tree branches up to their common ancestor; together with
/// the same-colour edge `u ~ w` they close an odd cycle.
fn odd_cycle(u: VertexId, w: VertexId, parent: &[usize], depth: &[usize]) -> Vec<VertexId> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// A proper two-colouring. `part0` holds the smallest id of every component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub part0: Vec<VertexId>,
    pub part1: Vec<VertexId>,
}
