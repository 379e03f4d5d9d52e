//! Circle orderings: a cyclic arrangement of all vertices of a graph, the gaps
//! it leaves, and the two generator isomorphisms that rearrange it.
//!
//! The ordering stores a flat sequence plus its inverse. Segment reversal is
//! the only mutation; it keeps the gap count and an order-independent
//! fingerprint of the adjacency pairs up to date by looking at the two pairs
//! that cross the segment boundary.

use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_permutation, Cycle, Graph};
use crate::Vertex;

/// A pair of circle-adjacent vertices that is not an edge. Stored with the
/// smaller label first so `{u, v}` and `{v, u}` compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Gap(pub Vertex, pub Vertex);

impl Gap {
    pub fn new(u: Vertex, v: Vertex) -> Gap {
        if u <= v {
            Gap(u, v)
        } else {
            Gap(v, u)
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }
}

impl fmt::Display for Gap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0 + 1, self.1 + 1)
    }
}

/// Lexicographically least sequence over all rotations of the ordering and
/// of its reversal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(pub Vec<Vertex>);

/// 128-bit hash of the multiset of circle-adjacent pairs.
///
/// Two orderings of the same vertex set (n >= 3) have the same adjacency pairs
/// exactly when they are rotations or reversals of each other, so this is a
/// hash of the equivalence class that can be updated in O(1) per reversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fingerprint(pub u64, pub u64);

impl Fingerprint {
    #[inline]
    pub fn add(self, u: Vertex, v: Vertex) -> Fingerprint {
        let (h0, h1) = pair_hash(u, v);
        Fingerprint(self.0.wrapping_add(h0), self.1.wrapping_add(h1))
    }

    #[inline]
    pub fn sub(self, u: Vertex, v: Vertex) -> Fingerprint {
        let (h0, h1) = pair_hash(u, v);
        Fingerprint(self.0.wrapping_sub(h0), self.1.wrapping_sub(h1))
    }

    pub fn to_hex(self) -> String {
        format!("{:016x}{:016x}", self.0, self.1)
    }
}

#[inline]
fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[inline]
fn pair_hash(u: Vertex, v: Vertex) -> (u64, u64) {
    let (lo, hi) = if u <= v { (u, v) } else { (v, u) };
    let k = ((lo as u64) << 32) | hi as u64;
    (
        splitmix(k ^ 0x243f_6a88_85a3_08d3),
        splitmix(k ^ 0x1319_8a2e_0370_7344),
    )
}

/// One of the two generator isomorphisms with its vertex parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum Generator {
    /// Reverses the segment from `x` up to the vertex before `a`, reading away from `y`.
    Gamma { y: Vertex, x: Vertex, a: Vertex },
    /// Maps `(A, B, C, D)` to `(A^R, B^R, D, C^R)` where `B = (c..a)` and `D` starts at `d`.
    Kappa {
        x: Vertex,
        a: Vertex,
        c: Vertex,
        d: Vertex,
    },
}

impl Generator {
    /// Same generator with every vertex shifted to 1-based labels.
    pub fn external(self) -> Generator {
        match self {
            Generator::Gamma { y, x, a } => Generator::Gamma {
                y: y + 1,
                x: x + 1,
                a: a + 1,
            },
            Generator::Kappa { x, a, c, d } => Generator::Kappa {
                x: x + 1,
                a: a + 1,
                c: c + 1,
                d: d + 1,
            },
        }
    }

    /// Inverse of [`Generator::external`]; fails on label 0.
    pub fn internal(self) -> Result<Generator> {
        let dec = |v: Vertex| {
            v.checked_sub(1)
                .ok_or_else(|| Error::InvalidGenerator("vertex label 0".into()))
        };
        Ok(match self {
            Generator::Gamma { y, x, a } => Generator::Gamma {
                y: dec(y)?,
                x: dec(x)?,
                a: dec(a)?,
            },
            Generator::Kappa { x, a, c, d } => Generator::Kappa {
                x: dec(x)?,
                a: dec(a)?,
                c: dec(c)?,
                d: dec(d)?,
            },
        })
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::Gamma { y, x, a } => write!(f, "gamma({},{},{})", y + 1, x + 1, a + 1),
            Generator::Kappa { x, a, c, d } => {
                write!(f, "kappa({},{},{},{})", x + 1, a + 1, c + 1, d + 1)
            }
        }
    }
}

/// A linear reading of the circle: position `start` is relative index 0 and
/// relative index `r` sits `r` steps away in direction `dir`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Frame {
    start: usize,
    forward: bool,
    n: usize,
}

impl Frame {
    #[inline]
    pub(crate) fn phys(&self, r: usize) -> usize {
        if self.forward {
            let p = self.start + r;
            if p >= self.n {
                p - self.n
            } else {
                p
            }
        } else if r <= self.start {
            self.start - r
        } else {
            self.start + self.n - r
        }
    }

    #[inline]
    pub(crate) fn rel_of_phys(&self, p: usize) -> usize {
        if self.forward {
            if p >= self.start {
                p - self.start
            } else {
                p + self.n - self.start
            }
        } else if p <= self.start {
            self.start - p
        } else {
            self.start + self.n - p
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Reversal {
    first: usize,
    len: usize,
}

/// A circle ordering of the vertices of a borrowed graph.
#[derive(Clone)]
pub struct CircleOrdering<'g> {
    graph: &'g Graph,
    seq: Vec<Vertex>,
    pos: Vec<usize>,
    gap_count: usize,
    fingerprint: Fingerprint,
    journal: Option<Vec<Reversal>>,
}

impl fmt::Debug for CircleOrdering<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CircleOrdering")
            .field("seq", &self.seq)
            .field("gap_count", &self.gap_count)
            .finish()
    }
}

impl PartialEq for CircleOrdering<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.seq == other.seq
    }
}

impl Eq for CircleOrdering<'_> {}

impl Hash for CircleOrdering<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.seq.hash(state)
    }
}

impl<'g> CircleOrdering<'g> {
    pub fn new(graph: &'g Graph, seq: Vec<Vertex>) -> Result<Self> {
        let n = graph.vertex_count();
        if !is_permutation(&seq, n) {
            return Err(Error::NotAPermutation { n });
        }
        let mut pos = vec![0; n];
        for (i, &v) in seq.iter().enumerate() {
            pos[v] = i;
        }
        let mut o = CircleOrdering {
            graph,
            seq,
            pos,
            gap_count: 0,
            fingerprint: Fingerprint::default(),
            journal: None,
        };
        o.gap_count = o.recount_gaps();
        o.fingerprint = o.recompute_fingerprint();
        Ok(o)
    }

    /// The ordering `0, 1, ..., n-1`.
    pub fn identity(graph: &'g Graph) -> Self {
        CircleOrdering::new(graph, (0..graph.vertex_count()).collect())
            .expect("identity is a permutation")
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn seq(&self) -> &[Vertex] {
        &self.seq
    }

    #[inline]
    pub fn position(&self, v: Vertex) -> usize {
        self.pos[v]
    }

    #[inline]
    pub fn gap_count(&self) -> usize {
        self.gap_count
    }

    #[inline]
    pub fn fingerprint(&self) -> Fingerprint {
        self.fingerprint
    }

    #[inline]
    pub(crate) fn at_phys(&self, p: usize) -> Vertex {
        self.seq[p]
    }

    #[inline]
    pub fn next(&self, v: Vertex) -> Vertex {
        let p = self.pos[v] + 1;
        self.seq[if p == self.seq.len() { 0 } else { p }]
    }

    #[inline]
    pub fn prev(&self, v: Vertex) -> Vertex {
        let p = self.pos[v];
        self.seq[if p == 0 { self.seq.len() - 1 } else { p - 1 }]
    }

    pub fn are_circle_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        u != v && (self.next(u) == v || self.prev(u) == v)
    }

    /// True when `u` and `v` are circle-adjacent and not joined by an edge.
    pub fn is_gap(&self, u: Vertex, v: Vertex) -> bool {
        self.are_circle_adjacent(u, v) && !self.graph.has_edge(u, v)
    }

    /// True when the ordering is a Hamiltonian cycle of the graph.
    pub fn is_hamiltonian(&self) -> bool {
        self.gap_count == 0 && self.seq.len() >= 3
    }

    pub fn to_cycle(&self) -> Cycle {
        Cycle::new(self.seq.clone()).expect("ordering is a permutation")
    }

    pub fn recount_gaps(&self) -> usize {
        let n = self.seq.len();
        (0..n)
            .filter(|&i| {
                !self
                    .graph
                    .has_edge_or_self(self.seq[i], self.seq[(i + 1) % n])
            })
            .count()
    }

    fn recompute_fingerprint(&self) -> Fingerprint {
        let n = self.seq.len();
        (0..n).fold(Fingerprint::default(), |fp, i| {
            fp.add(self.seq[i], self.seq[(i + 1) % n])
        })
    }

    /// Gaps in ascending order of the position of their first element; the
    /// pair that wraps from the last position to position 0 comes last.
    pub fn gaps(&self) -> Vec<Gap> {
        self.gap_slots()
            .into_iter()
            .map(|i| Gap::new(self.seq[i], self.seq[(i + 1) % self.seq.len()]))
            .collect()
    }

    /// Positions `i` such that `(seq[i], seq[i+1])` is a gap.
    pub(crate) fn gap_slots(&self) -> Vec<usize> {
        let n = self.seq.len();
        if self.gap_count == 0 {
            return Vec::new();
        }
        (0..n)
            .filter(|&i| {
                !self
                    .graph
                    .has_edge_or_self(self.seq[i], self.seq[(i + 1) % n])
            })
            .collect()
    }

    pub fn canonical_key(&self) -> CanonicalKey {
        let forward = least_rotation(&self.seq);
        let mut rev = self.seq.clone();
        rev.reverse();
        let backward = least_rotation(&rev);
        CanonicalKey(forward.min(backward))
    }

    /// Reading from `x` away from its circle neighbor `y`.
    pub(crate) fn frame_from(&self, x: Vertex, y: Vertex) -> Result<Frame> {
        let n = self.seq.len();
        if x == y || x >= n || y >= n {
            return Err(Error::NotCircleAdjacent(x.min(n), y.min(n)));
        }
        if self.prev(x) == y {
            Ok(Frame {
                start: self.pos[x],
                forward: true,
                n,
            })
        } else if self.next(x) == y {
            Ok(Frame {
                start: self.pos[x],
                forward: false,
                n,
            })
        } else {
            Err(Error::NotCircleAdjacent(x, y))
        }
    }

    #[inline]
    pub(crate) fn rel(&self, frame: &Frame, v: Vertex) -> usize {
        frame.rel_of_phys(self.pos[v])
    }

    #[inline]
    pub(crate) fn at(&self, frame: &Frame, r: usize) -> Vertex {
        self.seq[frame.phys(r)]
    }

    /// Reverses relative indices `i..=j` of `frame` in place.
    pub(crate) fn reverse_rel(&mut self, frame: &Frame, i: usize, j: usize) {
        debug_assert!(i <= j && j < self.seq.len());
        let first = if frame.forward {
            frame.phys(i)
        } else {
            frame.phys(j)
        };
        self.reverse_span(first, j - i + 1);
    }

    /// Reverses the physical slots `first, first+1, ..., first+len-1` (mod n).
    fn reverse_span(&mut self, first: usize, len: usize) {
        let n = self.seq.len();
        if len <= 1 {
            return;
        }
        let last = (first + len - 1) % n;
        let before = (first + n - 1) % n;
        let after = (last + 1) % n;
        let boundary = len < n;
        if boundary {
            let (p, f, l, q) = (
                self.seq[before],
                self.seq[first],
                self.seq[last],
                self.seq[after],
            );
            let g = self.graph;
            let old = !g.has_edge_or_self(p, f) as usize + !g.has_edge_or_self(l, q) as usize;
            let new = !g.has_edge_or_self(p, l) as usize + !g.has_edge_or_self(f, q) as usize;
            self.gap_count = self.gap_count + new - old;
            self.fingerprint = self.fingerprint.sub(p, f).sub(l, q).add(p, l).add(f, q);
        }
        let (mut i, mut j) = (first, last);
        for _ in 0..len / 2 {
            self.seq.swap(i, j);
            self.pos[self.seq[i]] = i;
            self.pos[self.seq[j]] = j;
            i = if i + 1 == n { 0 } else { i + 1 };
            j = if j == 0 { n - 1 } else { j - 1 };
        }
        if let Some(journal) = self.journal.as_mut() {
            journal.push(Reversal { first, len });
        }
        self.debug_check();
    }

    fn debug_check(&self) {
        #[cfg(debug_assertions)]
        if self.seq.len() <= 16 {
            assert_eq!(
                self.gap_count,
                self.recount_gaps(),
                "gap count cache drifted"
            );
            assert_eq!(
                self.fingerprint,
                self.recompute_fingerprint(),
                "fingerprint cache drifted"
            );
        }
    }

    /// Starts recording reversals so they can be rolled back.
    pub(crate) fn enable_journal(&mut self) {
        if self.journal.is_none() {
            self.journal = Some(Vec::new());
        }
    }

    pub(crate) fn journal_mark(&self) -> usize {
        self.journal.as_ref().map_or(0, Vec::len)
    }

    /// Undoes every reversal recorded after `mark`.
    pub(crate) fn rollback(&mut self, mark: usize) {
        let Some(mut journal) = self.journal.take() else {
            return;
        };
        while journal.len() > mark {
            let r = journal.pop().expect("length checked");
            self.reverse_span(r.first, r.len);
        }
        self.journal = Some(journal);
    }

    pub(crate) fn clear_journal(&mut self) {
        if let Some(j) = self.journal.as_mut() {
            j.clear();
        }
    }

    /// Applies the generator γ(y, x, a) in place.
    pub fn gamma_in_place(&mut self, y: Vertex, x: Vertex, a: Vertex) -> Result<()> {
        let frame = self.frame_from(x, y)?;
        let n = self.seq.len();
        if a >= n || a == x || a == y {
            return Err(Error::InvalidGenerator(format!(
                "gamma({},{},{}): a must differ from x and y",
                y + 1,
                x + 1,
                a + 1
            )));
        }
        let ra = self.rel(&frame, a);
        self.reverse_rel(&frame, 0, ra - 1);
        Ok(())
    }

    /// Works out the reading direction for κ(x, a, c, d): the one in which
    /// `x` precedes `c`, `c` precedes or equals `a`, and `a` precedes `d`.
    pub(crate) fn kappa_frame(
        &self,
        x: Vertex,
        a: Vertex,
        c: Vertex,
        d: Vertex,
    ) -> Result<(Frame, usize, usize, usize)> {
        let n = self.seq.len();
        if [x, a, c, d].iter().any(|&v| v >= n) {
            return Err(Error::InvalidGenerator("vertex out of range".into()));
        }
        for forward in [true, false] {
            let frame = Frame {
                start: self.pos[x],
                forward,
                n,
            };
            let (rc, ra, rd) = (
                self.rel(&frame, c),
                self.rel(&frame, a),
                self.rel(&frame, d),
            );
            if 1 <= rc && rc <= ra && ra < rd {
                return Ok((frame, rc, ra, rd));
            }
        }
        Err(Error::InvalidGenerator(format!(
            "kappa({},{},{},{}): need x, then c, then a, then d around the circle",
            x + 1,
            a + 1,
            c + 1,
            d + 1
        )))
    }

    pub(crate) fn kappa_with(&mut self, frame: &Frame, rc: usize, ra: usize, rd: usize) {
        let n = self.seq.len();
        self.reverse_rel(frame, 0, rc - 1);
        self.reverse_rel(frame, rc, ra);
        if rd > ra + 1 {
            self.reverse_rel(frame, ra + 1, n - 1);
            self.reverse_rel(frame, ra + 1, ra + n - rd);
        }
    }

    /// Applies the generator κ(x, a, c, d) in place.
    pub fn kappa_in_place(&mut self, x: Vertex, a: Vertex, c: Vertex, d: Vertex) -> Result<()> {
        let (frame, rc, ra, rd) = self.kappa_frame(x, a, c, d)?;
        self.kappa_with(&frame, rc, ra, rd);
        Ok(())
    }

    pub fn apply_generator_in_place(&mut self, gen: Generator) -> Result<()> {
        match gen {
            Generator::Gamma { y, x, a } => self.gamma_in_place(y, x, a),
            Generator::Kappa { x, a, c, d } => self.kappa_in_place(x, a, c, d),
        }
    }

    /// Returns γ(y, x, a) applied to a copy of this ordering.
    pub fn apply_gamma(&self, y: Vertex, x: Vertex, a: Vertex) -> Result<Self> {
        let mut o = self.detached();
        o.gamma_in_place(y, x, a)?;
        Ok(o)
    }

    /// Returns κ(x, a, c, d) applied to a copy of this ordering.
    pub fn apply_kappa(&self, x: Vertex, a: Vertex, c: Vertex, d: Vertex) -> Result<Self> {
        let mut o = self.detached();
        o.kappa_in_place(x, a, c, d)?;
        Ok(o)
    }

    /// Copy without the undo journal.
    pub fn detached(&self) -> Self {
        CircleOrdering {
            graph: self.graph,
            seq: self.seq.clone(),
            pos: self.pos.clone(),
            gap_count: self.gap_count,
            fingerprint: self.fingerprint,
            journal: None,
        }
    }

    /// Overwrites the arrangement with `seq`, which must be a permutation.
    pub(crate) fn reset_to(&mut self, seq: &[Vertex]) {
        self.seq.copy_from_slice(seq);
        for (i, &v) in seq.iter().enumerate() {
            self.pos[v] = i;
        }
        self.gap_count = self.recount_gaps();
        self.fingerprint = self.recompute_fingerprint();
        self.clear_journal();
    }
}

impl Graph {
    /// Edge test that treats `u == v` as connected; only reached for n = 1.
    #[inline]
    pub(crate) fn has_edge_or_self(&self, u: Vertex, v: Vertex) -> bool {
        u == v || self.has_edge(u, v)
    }
}

/// Booth's algorithm: the lexicographically least rotation of `s`.
pub fn least_rotation<T: Ord + Copy>(s: &[T]) -> Vec<T> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let mut f: Vec<isize> = vec![-1; 2 * n];
    let mut k = 0usize;
    let at = |i: usize| s[i % n];
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = f[j - k - 1];
        while i != -1 && sj != at(k + i as usize + 1) {
            if sj < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = f[i as usize];
        }
        if i == -1 && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    (0..n).map(|i| s[(k + i) % n]).collect()
}
