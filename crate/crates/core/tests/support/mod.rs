//! Shared helpers for the integration tests: exhaustive graph enumeration up to
//! isomorphism and ordering enumeration up to rotation and reflection.
#![allow(dead_code)]

use std::collections::HashMap;

use itertools::Itertools;
use slh::instances::Rng;
use slh::moves::{all_candidates, predicted_gap_delta, MoveClass, MoveKind};
use slh::{CircleOrdering, Fingerprint, Graph};

/// Adjacency bitmasks, one per vertex.
pub type Masks = Vec<u16>;

pub fn to_graph(adj: &[u16]) -> Graph {
    let n = adj.len();
    let mut edges = Vec::new();
    for (u, &mask) in adj.iter().enumerate() {
        for v in u + 1..n {
            if mask >> v & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn refine(adj: &[u16]) -> Vec<usize> {
    let n = adj.len();
    let mut color: Vec<usize> = adj.iter().map(|m| m.count_ones() as usize).collect();
    let mut classes = color.iter().unique().count();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = (0..n)
                    .filter(|&u| adj[v] >> u & 1 == 1)
                    .map(|u| color[u])
                    .collect();
                around.sort_unstable();
                (color[v], around)
            })
            .collect();
        let ranks: Vec<_> = sigs.iter().cloned().sorted().dedup().collect();
        color = sigs
            .iter()
            .map(|s| ranks.binary_search(s).unwrap())
            .collect();
        if ranks.len() == classes {
            return color;
        }
        classes = ranks.len();
    }
}

fn code_of(adj: &[u16], order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | (adj[order[i]] >> order[j] & 1) as u64;
        }
    }
    code
}

fn search(adj: &[u16], cells: &[Vec<usize>], k: usize, order: &mut Vec<usize>, best: &mut u64) {
    if k == cells.len() {
        *best = (*best).min(code_of(adj, order));
        return;
    }
    let len = cells[k].len();
    for p in cells[k].iter().copied().permutations(len) {
        let base = order.len();
        order.extend(p);
        search(adj, cells, k + 1, order, best);
        order.truncate(base);
    }
}

/// Isomorphism-invariant code of a graph with at most 11 vertices: the least
/// upper-triangle bit string over labelings that respect a colour refinement.
pub fn canonical_code(adj: &[u16]) -> u64 {
    let color = refine(adj);
    let classes = color.iter().copied().max().map_or(0, |c| c + 1);
    let mut cells = vec![Vec::new(); classes];
    for (v, &c) in color.iter().enumerate() {
        cells[c].push(v);
    }
    let mut best = u64::MAX;
    search(
        adj,
        &cells,
        0,
        &mut Vec::with_capacity(adj.len()),
        &mut best,
    );
    best
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// sorted by canonical code.
pub fn all_graphs(n: usize) -> Vec<Masks> {
    assert!(n <= 9);
    let mut level: Vec<Masks> = vec![vec![]];
    for m in 1..=n {
        let mut seen: HashMap<u64, Masks> = HashMap::new();
        for g in &level {
            for nb in 0u16..1 << (m - 1) {
                let mut adj = g.clone();
                adj.push(nb);
                for (u, a) in adj.iter_mut().enumerate().take(m - 1) {
                    *a |= (nb >> u & 1) << (m - 1);
                }
                seen.entry(canonical_code(&adj)).or_insert(adj);
            }
        }
        level = seen
            .into_iter()
            .sorted_by_key(|(c, _)| *c)
            .map(|(_, a)| a)
            .collect();
    }
    level
}

pub fn is_connected(adj: &[u16]) -> bool {
    let n = adj.len();
    if n == 0 {
        return false;
    }
    let mut seen = 1u16;
    let mut frontier = 1u16;
    while frontier != 0 {
        let mut next = 0;
        for (v, &mask) in adj.iter().enumerate() {
            if frontier >> v & 1 == 1 {
                next |= mask;
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen.count_ones() as usize == n
}

pub fn connected_graphs(n: usize) -> Vec<Masks> {
    all_graphs(n)
        .into_iter()
        .filter(|a| is_connected(a))
        .collect()
}

/// Every arrangement with vertex 0 first and `seq[1] < seq[n-1]`: one per
/// class under rotation and reflection.
pub fn orderings_up_to_symmetry(n: usize) -> Vec<Vec<usize>> {
    if n < 3 {
        return vec![(0..n).collect()];
    }
    (1..n)
        .permutations(n - 1)
        .filter(|p| p[0] < p[n - 2])
        .map(|p| std::iter::once(0).chain(p).collect())
        .collect()
}

pub fn all_orderings(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// Gap count computed straight from the graph.
pub fn count_gaps(g: &Graph, seq: &[usize]) -> usize {
    let n = seq.len();
    (0..n)
        .filter(|&i| !g.has_edge(seq[i], seq[(i + 1) % n]))
        .count()
}

pub fn fingerprint_of(seq: &[usize]) -> Fingerprint {
    let n = seq.len();
    (0..n).fold(Fingerprint::default(), |f, i| {
        f.add(seq[i], seq[(i + 1) % n])
    })
}

pub fn is_perm(seq: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    seq.len() == n
        && seq
            .iter()
            .all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
}

/// Applies every move available at `o` and checks its gap change against the
/// class bound and the prediction. `predicted_gap_delta` is looked up for
/// every candidate when there are at most 64, else for an even sample of
/// that size. Returns the number of moves checked.
pub fn check_move_contract(o: &CircleOrdering<'_>) -> Result<usize, String> {
    let g = o.graph();
    let n = o.len();
    let before = count_gaps(g, o.seq());
    let cands = all_candidates(o, &MoveKind::ALL);
    let stride = cands.len().div_ceil(64).max(1);
    for (i, c) in cands.iter().enumerate() {
        let fail = |what: &str| format!("{what}: {} on {:?}", c.spec, o.seq());
        let mut r = o.detached();
        for gen in c.spec.generators().map_err(|e| fail(&e.to_string()))? {
            r.apply_generator_in_place(gen)
                .map_err(|e| fail(&e.to_string()))?;
        }
        if !is_perm(r.seq(), n) {
            return Err(fail("result is not a permutation"));
        }
        let actual = count_gaps(g, r.seq()) as i64 - before as i64;
        let ok = match c.spec.kind.class() {
            MoveClass::Closing => actual <= -1,
            MoveClass::Floating => actual <= 0,
            MoveClass::Opening => (-1..=1).contains(&actual),
        };
        if !ok {
            return Err(fail(&format!(
                "gap change {actual} outside the class bound"
            )));
        }
        if c.delta as i64 != actual || r.gap_count() as i64 - before as i64 != actual {
            return Err(fail(&format!(
                "predicted {} but recount gives {actual}",
                c.delta
            )));
        }
        if i % stride == 0
            && predicted_gap_delta(o, &c.spec).map_err(|e| fail(&e.to_string()))? != c.delta
        {
            return Err(fail(
                "predicted_gap_delta disagrees with the enumerated delta",
            ));
        }
        if c.fingerprint != fingerprint_of(r.seq()) || r.fingerprint() != c.fingerprint {
            return Err(fail("fingerprint mismatch"));
        }
    }
    Ok(cands.len())
}

/// Erdős–Rényi graph with edge probability `p_per_mille / 1000`.
pub fn random_graph(n: usize, p_per_mille: u64, rng: &mut Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.below(1000) < p_per_mille {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}
