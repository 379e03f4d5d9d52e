//! Exhaustive backtracking search used as ground truth on small graphs.

use crate::graph::{Cycle, Graph};
use crate::Vertex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// Up to `limit` cycles, each starting at vertex 0 and heading to its
    /// smaller cycle neighbor, in lexicographic order.
    pub cycles: Vec<Cycle>,
    /// Number of distinct Hamiltonian cycles; `None` when the budget ran out.
    pub count: Option<u64>,
    pub completed: bool,
    pub nodes_expanded: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathSearch {
    Yes(Vec<Vertex>),
    No,
    Unknown,
}

struct Dfs<'a> {
    g: &'a Graph,
    n: usize,
    visited: Vec<bool>,
    path: Vec<Vertex>,
    nodes: u64,
    budget: u64,
    out_of_budget: bool,
    queue: Vec<Vertex>,
    mark: Vec<u32>,
    epoch: u32,
}

impl<'a> Dfs<'a> {
    fn new(g: &'a Graph, budget: u64) -> Self {
        let n = g.vertex_count();
        Dfs {
            g,
            n,
            visited: vec![false; n],
            path: Vec::with_capacity(n),
            nodes: 0,
            budget,
            out_of_budget: false,
            queue: Vec::with_capacity(n),
            mark: vec![0; n],
            epoch: 0,
        }
    }

    /// Unvisited vertices reachable from `end` through unvisited vertices.
    fn reachable_unvisited(&mut self, end: Vertex) -> usize {
        self.epoch += 1;
        let epoch = self.epoch;
        self.queue.clear();
        let mut count = 0;
        for &w in self.g.neighbors(end) {
            if !self.visited[w] && self.mark[w] != epoch {
                self.mark[w] = epoch;
                self.queue.push(w);
                count += 1;
            }
        }
        while let Some(u) = self.queue.pop() {
            for &w in self.g.neighbors(u) {
                if !self.visited[w] && self.mark[w] != epoch {
                    self.mark[w] = epoch;
                    self.queue.push(w);
                    count += 1;
                }
            }
        }
        count
    }

    /// Every unvisited vertex needs two usable neighbors: unvisited ones, the
    /// path end, or (for cycles) the anchor.
    fn degrees_ok(&self, end: Vertex, anchor: Option<Vertex>) -> bool {
        let mut dead_ends = 0;
        for w in 0..self.n {
            if self.visited[w] {
                continue;
            }
            let usable = self
                .g
                .neighbors(w)
                .iter()
                .filter(|&&u| !self.visited[u] || u == end || Some(u) == anchor)
                .count();
            match anchor {
                Some(_) if usable < 2 => return false,
                None if usable == 0 => return false,
                None if usable == 1 => {
                    dead_ends += 1;
                    if dead_ends > 1 {
                        return false;
                    }
                }
                _ => {}
            }
        }
        true
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.out_of_budget = true;
        }
        !self.out_of_budget
    }

    fn cycles(&mut self, limit: usize, found: &mut Vec<Cycle>, count: &mut u64) {
        if !self.tick() {
            return;
        }
        let end = *self.path.last().expect("path starts at the anchor");
        if self.path.len() == self.n {
            if self.path[1] < self.path[self.n - 1] && self.g.has_edge(end, 0) {
                *count += 1;
                if found.len() < limit {
                    found.push(Cycle::new(self.path.clone()).expect("path is a permutation"));
                }
            }
            return;
        }
        let remaining = self.n - self.path.len();
        if self.path.len() > 1
            && (!self.degrees_ok(end, Some(0)) || self.reachable_unvisited(end) != remaining)
        {
            return;
        }
        for i in 0..self.g.degree(end) {
            let w = self.g.neighbors(end)[i];
            if self.visited[w] {
                continue;
            }
            // the second vertex must be smaller than the last one; once the
            // second is fixed, larger neighbors of 0 remain possible as last
            if self.path.len() == 1 && !self.g.neighbors(0).iter().any(|&z| z > w) {
                continue;
            }
            self.visited[w] = true;
            self.path.push(w);
            self.cycles(limit, found, count);
            self.path.pop();
            self.visited[w] = false;
            if self.out_of_budget {
                return;
            }
        }
    }

    fn paths(&mut self) -> bool {
        if !self.tick() {
            return false;
        }
        if self.path.len() == self.n {
            return true;
        }
        let end = *self.path.last().expect("non-empty path");
        let remaining = self.n - self.path.len();
        if !self.degrees_ok(end, None) || self.reachable_unvisited(end) != remaining {
            return false;
        }
        for i in 0..self.g.degree(end) {
            let w = self.g.neighbors(end)[i];
            if self.visited[w] {
                continue;
            }
            self.visited[w] = true;
            self.path.push(w);
            if self.paths() {
                return true;
            }
            self.path.pop();
            self.visited[w] = false;
            if self.out_of_budget {
                return false;
            }
        }
        false
    }
}

/// Enumerates Hamiltonian cycles by extending a path from vertex 0 in
/// ascending neighbor order. Each cycle is counted once.
pub fn enumerate_hamiltonian_cycles(g: &Graph, limit: usize, node_budget: u64) -> OracleResult {
    let n = g.vertex_count();
    let mut found = Vec::new();
    let mut count = 0;
    let mut dfs = Dfs::new(g, node_budget);
    if n >= 3 {
        dfs.visited[0] = true;
        dfs.path.push(0);
        dfs.cycles(limit, &mut found, &mut count);
    }
    let completed = !dfs.out_of_budget;
    OracleResult {
        cycles: found,
        count: completed.then_some(count),
        completed,
        nodes_expanded: dfs.nodes,
    }
}

/// Number of Hamiltonian cycles, or `None` if the budget ran out.
pub fn count_hamiltonian_cycles(g: &Graph, node_budget: u64) -> Option<u64> {
    enumerate_hamiltonian_cycles(g, 0, node_budget).count
}

pub fn is_hamiltonian(g: &Graph, node_budget: u64) -> Option<bool> {
    let r = enumerate_hamiltonian_cycles(g, 1, node_budget);
    if !r.cycles.is_empty() {
        Some(true)
    } else {
        r.count.map(|c| c > 0)
    }
}

/// Looks for a Hamiltonian path, trying start vertices in ascending order.
/// The budget is shared by all starts.
pub fn has_hamiltonian_path(g: &Graph, node_budget: u64) -> PathSearch {
    let n = g.vertex_count();
    if n == 1 {
        return PathSearch::Yes(vec![0]);
    }
    let mut dfs = Dfs::new(g, node_budget);
    for s in 0..n {
        dfs.visited.iter_mut().for_each(|v| *v = false);
        dfs.path.clear();
        dfs.visited[s] = true;
        dfs.path.push(s);
        if dfs.paths() {
            return PathSearch::Yes(dfs.path.clone());
        }
        if dfs.out_of_budget {
            return PathSearch::Unknown;
        }
    }
    PathSearch::No
}
