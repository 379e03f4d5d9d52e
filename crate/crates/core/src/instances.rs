//! Generators for the benchmark families and seeded relabeling.
//!
//! All randomness comes from SplitMix64 seeded with the caller's `u64`, and
//! bounded integers are drawn with plain rejection sampling, so a seed gives
//! the same graph on every platform and every crate version.

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Vertex;

/// Deterministic generator used by every randomized routine in this crate.
pub struct Rng(SplitMix64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform integer in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let v = self.0.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }

    /// In-place Fisher–Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

/// GP(n, k): outer cycle `0..n`, spokes `i -- n+i`, inner edges `n+i -- n+(i+k mod n)`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k < 1 || 2 * k >= n {
        return Err(Error::InvalidParameters(format!(
            "GP(n, k) needs n >= 3 and 1 <= k < n/2, got n = {n}, k = {k}"
        )));
    }
    let mut e = Vec::with_capacity(3 * n);
    for i in 0..n {
        e.push((i, (i + 1) % n));
        e.push((i, n + i));
        e.push((n + i, n + (i + k) % n));
    }
    Graph::new(2 * n, &e)
}

/// Flower snark J_k on `4k` vertices: centers `0..k`, then the x, y and z rows.
/// The y row runs into the z row at the wrap, giving a single `2k`-cycle.
pub fn flower_snark(k: usize) -> Result<Graph> {
    if k < 5 || k.is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!(
            "flower snark needs odd k >= 5, got {k}"
        )));
    }
    let (c, x, y, z) = (0, k, 2 * k, 3 * k);
    let mut e = Vec::with_capacity(6 * k);
    for i in 0..k {
        e.push((c + i, x + i));
        e.push((c + i, y + i));
        e.push((c + i, z + i));
        e.push((x + i, x + (i + 1) % k));
    }
    for i in 0..k - 1 {
        e.push((y + i, y + i + 1));
        e.push((z + i, z + i + 1));
    }
    e.push((y + k - 1, z));
    e.push((z + k - 1, y));
    Graph::new(4 * k, &e)
}

/// A maximally dense graph with exactly one Hamiltonian cycle, the cycle
/// `0, 1, ..., n-1`.
///
/// Besides the cycle it has every pair of even vertices and every pair
/// `(i, j)` with `i` even, `j` odd, `i + 3 <= j <= n - 3`; that is
/// `n^2/4 + 1` edges.
pub fn sheehan(n: usize) -> Result<Graph> {
    if n < 6 || n % 2 == 1 {
        return Err(Error::InvalidParameters(format!(
            "uniquely Hamiltonian construction needs even n >= 6, got {n}"
        )));
    }
    let mut e: Vec<(Vertex, Vertex)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in (0..n).step_by(2) {
        for j in (i + 2..n).step_by(2) {
            e.push((i, j));
        }
        for j in (i + 3..=n - 3).step_by(2) {
            e.push((i, j));
        }
    }
    Graph::new(n, &e)
}

/// Uniform random cubic graph from the pairing model, resampling the whole
/// pairing until it has no loops or repeated edges.
pub fn random_cubic(n: usize, seed: u64) -> Result<Graph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidParameters(format!(
            "cubic graphs need even n >= 4, got {n}"
        )));
    }
    let mut rng = Rng::new(seed);
    let mut points: Vec<Vertex> = (0..3 * n).map(|p| p / 3).collect();
    let mut adj = vec![[usize::MAX; 3]; n];
    'sample: loop {
        rng.shuffle(&mut points);
        adj.iter_mut().for_each(|a| *a = [usize::MAX; 3]);
        let mut fill = vec![0u8; n];
        let mut edges = Vec::with_capacity(3 * n / 2);
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || adj[u].contains(&v) {
                continue 'sample;
            }
            adj[u][fill[u] as usize] = v;
            adj[v][fill[v] as usize] = u;
            fill[u] += 1;
            fill[v] += 1;
            edges.push((u, v));
        }
        return Graph::new(n, &edges);
    }
}

/// Random permutation of `0..n` from `seed`.
pub fn random_permutation(n: usize, seed: u64) -> Vec<Vertex> {
    let mut perm: Vec<Vertex> = (0..n).collect();
    Rng::new(seed).shuffle(&mut perm);
    perm
}

/// Isomorphic copy of `g` with vertex `v` renamed to `perm[v]` for a
/// seeded random `perm`, which is returned alongside.
pub fn relabel_random(g: &Graph, seed: u64) -> (Graph, Vec<Vertex>) {
    let perm = random_permutation(g.vertex_count(), seed);
    let h = g.relabel(&perm).expect("random permutation is valid");
    (h, perm)
}
