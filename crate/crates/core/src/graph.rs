//! Simple undirected graphs, cheap necessary conditions for Hamiltonicity, and
//! cycle verification.
//!
//! Vertices are `0..n` internally. Every reader and writer in [`crate::io`]
//! shifts to the 1-based labels used by TSPLIB files.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Vertex;

/// Immutable simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
    max_degree: usize,
}

/// A graph together with the number of duplicate input pairs that were dropped.
#[derive(Debug, Clone)]
pub struct Built {
    pub graph: Graph,
    pub duplicate_edges: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices from 0-based pairs.
    ///
    /// Duplicate pairs (in either orientation) are dropped and counted;
    /// self-loops and out-of-range vertices are rejected.
    pub fn build(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Built> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::LabelOutOfRange {
                        label: w as i64 + 1,
                        n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut duplicates = 0;
        for list in &mut adj {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            duplicates += before - list.len();
        }
        let degree_sum: usize = adj.iter().map(Vec::len).sum();
        let max_degree = adj.iter().map(Vec::len).max().unwrap_or(0);
        Ok(Built {
            graph: Graph {
                adj,
                edge_count: degree_sum / 2,
                max_degree,
            },
            // each dropped duplicate pair was counted from both endpoints
            duplicate_edges: duplicates / 2,
        })
    }

    /// Same as [`Graph::build`] but discards the duplicate count.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        Graph::build(n, edges).map(|b| b.graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` in ascending order.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        let n = self.vertex_count();
        if !is_permutation(perm, n) {
            return Err(Error::NotAPermutation { n });
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::new(n, &edges)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == n
    }
}

/// Why a graph was proven non-Hamiltonian before any search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum NonHamiltonianReason {
    TooFewVertices { n: usize },
    DegreeBelowTwo { vertex: Vertex },
    Disconnected,
}

impl fmt::Display for NonHamiltonianReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonHamiltonianReason::TooFewVertices { n } => {
                write!(f, "fewer than 3 vertices (n = {n})")
            }
            NonHamiltonianReason::DegreeBelowTwo { vertex } => {
                write!(f, "vertex {} has degree below 2", vertex + 1)
            }
            NonHamiltonianReason::Disconnected => write!(f, "graph is disconnected"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Presolve {
    Pass,
    NonHamiltonian(NonHamiltonianReason),
}

/// Cheap necessary conditions: `n >= 3`, minimum degree 2, connected.
pub fn presolve(g: &Graph) -> Presolve {
    let n = g.vertex_count();
    if n < 3 {
        return Presolve::NonHamiltonian(NonHamiltonianReason::TooFewVertices { n });
    }
    if let Some(vertex) = (0..n).find(|&v| g.degree(v) < 2) {
        return Presolve::NonHamiltonian(NonHamiltonianReason::DegreeBelowTwo { vertex });
    }
    if !g.is_connected() {
        return Presolve::NonHamiltonian(NonHamiltonianReason::Disconnected);
    }
    Presolve::Pass
}

/// A cyclic sequence containing every vertex exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cycle(Vec<Vertex>);

impl Cycle {
    pub fn new(seq: Vec<Vertex>) -> Result<Cycle> {
        let n = seq.len();
        if n == 0 || !is_permutation(&seq, n) {
            return Err(Error::NotAPermutation { n });
        }
        Ok(Cycle(seq))
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    /// Rotation starting at vertex 0, oriented towards its smaller cycle neighbor.
    pub fn normalized(&self) -> Cycle {
        let n = self.0.len();
        let start = self.0.iter().position(|&v| v == 0).unwrap_or(0);
        let next = self.0[(start + 1) % n];
        let prev = self.0[(start + n - 1) % n];
        let seq = if next <= prev {
            (0..n).map(|i| self.0[(start + i) % n]).collect()
        } else {
            (0..n).map(|i| self.0[(start + n - i) % n]).collect()
        };
        Cycle(seq)
    }
}

/// True iff `seq` visits every vertex once and each cyclic neighbor pair is an edge.
pub fn verify_hamiltonian_cycle(g: &Graph, seq: &[Vertex]) -> bool {
    let n = g.vertex_count();
    if seq.len() != n || n < 3 || !is_permutation(seq, n) {
        return false;
    }
    (0..n).all(|i| g.has_edge(seq[i], seq[(i + 1) % n]))
}

pub(crate) fn is_permutation(seq: &[Vertex], n: usize) -> bool {
    if seq.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in seq {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}
