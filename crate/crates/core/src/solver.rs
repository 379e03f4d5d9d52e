//! The four-stage search.
//!
//! * Stage 0 applies closing moves until none is left.
//! * Stage 1 is a depth-first search over floating moves. A move is accepted
//!   when it closes a gap or creates a gap never seen before, and its result
//!   is not on the ordering list.
//! * Stage 2 tries every opening move from the gaps of the latest ordering and
//!   reruns stage 1 after each one.
//! * Stage 3 chains opening moves with gap-reducing floating moves until the
//!   ordering list reaches its cap.
//!
//! Any improvement on the gap count recorded when stage 2 started sends the
//! search back to stage 1 with fresh tabu lists.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    is_permutation, presolve, verify_hamiltonian_cycle, Cycle, Graph, NonHamiltonianReason,
    Presolve,
};
use crate::moves::{apply_unchecked, for_each_at_slot, Candidate, MoveKind};
use crate::ordering::{CircleOrdering, Fingerprint, Gap, Generator};
use crate::Vertex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    /// The ordering list may hold at most `n^budget_exponent` orderings.
    pub budget_exponent: u32,
    /// Total generator applications allowed; `None` means `n^4`.
    pub generator_cap: Option<u64>,
    /// Number of returns to stage 1 after an improvement; `None` means `n`.
    pub max_reentries: Option<usize>,
    pub record_trace: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            budget_exponent: 3,
            generator_cap: None,
            max_reentries: None,
            record_trace: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    HamiltonianCycle { cycle: Cycle },
    LikelyNonHamiltonian,
    CertifiedNonHamiltonian { reason: NonHamiltonianReason },
}

impl Verdict {
    pub fn cycle(&self) -> Option<&Cycle> {
        match self {
            Verdict::HamiltonianCycle { cycle } => Some(cycle),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::HamiltonianCycle { .. } => "hamiltonian",
            Verdict::LikelyNonHamiltonian => "likely_non_hamiltonian",
            Verdict::CertifiedNonHamiltonian { .. } => "certified_non_hamiltonian",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::HamiltonianCycle { .. } => f.write_str("Hamiltonian cycle found"),
            Verdict::LikelyNonHamiltonian => f.write_str("likely non-Hamiltonian"),
            Verdict::CertifiedNonHamiltonian { reason } => {
                write!(f, "certified non-Hamiltonian: {reason}")
            }
        }
    }
}

/// Why the search stopped without a cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "stop", rename_all = "snake_case")]
pub enum StopReason {
    Solved,
    Presolve,
    /// The ordering list reached `n^budget_exponent` during `stage`.
    OrderingCap {
        stage: u8,
    },
    GeneratorCap {
        stage: u8,
    },
    /// Stage 3 ran out of openings to try.
    SearchExhausted,
    /// Too many returns to stage 1.
    ReentryCap,
}

impl StopReason {
    pub fn is_budget(self) -> bool {
        matches!(
            self,
            StopReason::OrderingCap { .. }
                | StopReason::GeneratorCap { .. }
                | StopReason::ReentryCap
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveStats {
    pub n: usize,
    pub stage_reached: u8,
    pub gap_count: usize,
    pub best_gap_count: usize,
    /// Orderings accepted over the whole run.
    pub orderings_explored: u64,
    pub orderings_listed: usize,
    pub peak_orderings_listed: usize,
    pub ordering_cap: usize,
    pub generator_applications: u64,
    pub generator_cap: u64,
    pub reentries: usize,
    pub stop: StopReason,
    pub budget_exhausted: bool,
    #[serde(with = "secs")]
    pub elapsed: Duration,
}

mod secs {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        Ok(Duration::from_secs_f64(f64::deserialize(d)?))
    }
}

/// One accepted move. Labels are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEvent {
    pub step: u64,
    /// Step that produced the ordering this move was applied to; 0 is the initial ordering.
    pub from: u64,
    pub stage: u8,
    pub kind: MoveKind,
    pub params: BTreeMap<String, Vertex>,
    pub generators: Vec<Generator>,
    pub gap_count_after: usize,
    pub orderings_listed: usize,
    pub canonical_hash: String,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub verdict: Verdict,
    pub stats: SolveStats,
    pub trace: Vec<TraceEvent>,
    /// The initial ordering the trace starts from (0-based).
    pub initial: Vec<Vertex>,
    /// Arrangement with the fewest gaps seen last (0-based).
    pub final_ordering: Vec<Vertex>,
}

impl SolveResult {
    pub fn is_hamiltonian(&self) -> bool {
        matches!(self.verdict, Verdict::HamiltonianCycle { .. })
    }
}

enum Flow {
    Solved,
    Improved,
    Exhausted,
    Stop(StopReason),
}

struct Node {
    step: u64,
    mark: usize,
    cursor: (usize, usize),
}

struct ChainEntry {
    seq: Box<[u32]>,
    step: u64,
    cursor: (usize, usize),
}

struct Search<'g> {
    g: &'g Graph,
    n: usize,
    cur: CircleOrdering<'g>,
    cur_step: u64,
    gap_list: FxHashSet<Gap>,
    listed: FxHashSet<Fingerprint>,
    ordering_cap: usize,
    generator_cap: u64,
    generators_used: u64,
    steps: u64,
    explored: u64,
    peak_listed: usize,
    latest: Vec<Vertex>,
    latest_step: u64,
    best: usize,
    stage_reached: u8,
    record_trace: bool,
    trace: Vec<TraceEvent>,
}

/// Finds the first candidate at or after `start` (gap index, candidate
/// index) that `accept` approves, returning it with the cursor just past it.
fn scan_from<A>(
    o: &CircleOrdering<'_>,
    start: (usize, usize),
    kinds: &[MoveKind],
    mut accept: A,
) -> Option<(Candidate, (usize, usize))>
where
    A: FnMut(&Candidate) -> bool,
{
    let slots = o.gap_slots();
    for (i, &slot) in slots.iter().enumerate().skip(start.0) {
        let skip = if i == start.0 { start.1 } else { 0 };
        let mut k = 0;
        let mut hit = None;
        let _ = for_each_at_slot(o, slot, kinds, &mut |c| {
            if k >= skip && accept(c) {
                hit = Some(*c);
                ControlFlow::Break(())
            } else {
                k += 1;
                ControlFlow::Continue(())
            }
        });
        if let Some(c) = hit {
            return Some((c, (i, k + 1)));
        }
    }
    None
}

impl<'g> Search<'g> {
    fn commit(&mut self, cand: &Candidate, stage: u8) -> std::result::Result<(), StopReason> {
        let len = match cand.spec.kind {
            MoveKind::F4a => 3,
            MoveKind::C3 | MoveKind::F3 | MoveKind::F5 => 2,
            _ => 1,
        };
        if self.generators_used + len > self.generator_cap {
            return Err(StopReason::GeneratorCap { stage });
        }
        let before = self.cur.gap_count() as i64;
        let gens = apply_unchecked(&mut self.cur, &cand.spec).expect("enumerated move applies");
        self.generators_used += gens.len() as u64;
        debug_assert_eq!(self.cur.fingerprint(), cand.fingerprint);
        debug_assert_eq!(self.cur.gap_count() as i64 - before, cand.delta as i64);
        self.steps += 1;
        self.explored += 1;
        self.listed.insert(cand.fingerprint);
        self.peak_listed = self.peak_listed.max(self.listed.len());
        self.best = self.best.min(self.cur.gap_count());
        if self.record_trace {
            let params = cand
                .spec
                .external_params()
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect();
            self.trace.push(TraceEvent {
                step: self.steps,
                from: self.cur_step,
                stage,
                kind: cand.spec.kind,
                params,
                generators: gens.iter().map(|g| g.external()).collect(),
                gap_count_after: self.cur.gap_count(),
                orderings_listed: self.listed.len(),
                canonical_hash: cand.fingerprint.to_hex(),
            });
        }
        self.cur_step = self.steps;
        self.latest.copy_from_slice(self.cur.seq());
        self.latest_step = self.steps;
        Ok(())
    }

    fn cap_reached(&self) -> bool {
        self.listed.len() >= self.ordering_cap
    }

    fn reset_lists(&mut self) {
        self.gap_list.clear();
        self.listed.clear();
        self.listed.insert(self.cur.fingerprint());
    }

    fn add_current_gaps(&mut self) {
        for gap in self.cur.gaps() {
            self.gap_list.insert(gap);
        }
    }

    fn restore_latest(&mut self) {
        let latest = std::mem::take(&mut self.latest);
        self.cur.reset_to(&latest);
        self.latest = latest;
        self.cur_step = self.latest_step;
    }

    fn stage0(&mut self) -> Flow {
        loop {
            if self.cur.gap_count() == 0 {
                return Flow::Solved;
            }
            let Some((cand, _)) = scan_from(&self.cur, (0, 0), &MoveKind::CLOSING, |_| true) else {
                break;
            };
            if let Err(stop) = self.commit(&cand, 0) {
                return Flow::Stop(stop);
            }
        }
        self.gap_list.clear();
        self.listed.clear();
        self.listed.insert(self.cur.fingerprint());
        Flow::Exhausted
    }

    /// Floating-move search from the current ordering. With a threshold, any
    /// ordering below it ends the search with `Improved`.
    fn stage1(&mut self, threshold: Option<usize>) -> Flow {
        let stage = if threshold.is_some() { 2 } else { 1 };
        self.cur.enable_journal();
        self.cur.clear_journal();
        self.add_current_gaps();
        self.listed.insert(self.cur.fingerprint());
        let mut stack = vec![Node {
            step: self.cur_step,
            mark: self.cur.journal_mark(),
            cursor: (0, 0),
        }];
        while let Some(top) = stack.last_mut() {
            let (gap_list, listed, g) = (&self.gap_list, &self.listed, self.g);
            let hit = scan_from(&self.cur, top.cursor, &MoveKind::FLOATING, |c| {
                !listed.contains(&c.fingerprint)
                    && (c.delta < 0
                        || c.joins().iter().any(|&(u, v)| {
                            !g.has_edge(u, v) && !gap_list.contains(&Gap::new(u, v))
                        }))
            });
            let Some((cand, next)) = hit else {
                let node = stack.pop().expect("non-empty");
                self.cur.rollback(node.mark);
                if let Some(parent) = stack.last() {
                    self.cur_step = parent.step;
                }
                continue;
            };
            top.cursor = next;
            let mark = self.cur.journal_mark();
            if let Err(stop) = self.commit(&cand, stage) {
                return Flow::Stop(stop);
            }
            self.gap_list.insert(cand.spec.pivot());
            for &(u, v) in cand.joins() {
                if !self.g.has_edge(u, v) {
                    self.gap_list.insert(Gap::new(u, v));
                }
            }
            let gaps = self.cur.gap_count();
            if gaps == 0 {
                return Flow::Solved;
            }
            if let Some(t) = threshold {
                if gaps < t {
                    return Flow::Improved;
                }
            }
            if cand.delta < 0 {
                self.reset_lists();
                self.add_current_gaps();
                self.cur.clear_journal();
                stack.clear();
                stack.push(Node {
                    step: self.cur_step,
                    mark: 0,
                    cursor: (0, 0),
                });
            } else {
                stack.push(Node {
                    step: self.cur_step,
                    mark,
                    cursor: (0, 0),
                });
            }
            if self.cap_reached() {
                return Flow::Stop(StopReason::OrderingCap { stage });
            }
        }
        Flow::Exhausted
    }

    fn stage2(&mut self) -> Flow {
        self.restore_latest();
        let base: Vec<Vertex> = self.cur.seq().to_vec();
        let base_step = self.cur_step;
        let base_gaps = self.cur.gap_count();
        let mut openings = Vec::new();
        for slot in self.cur.gap_slots() {
            let _ = for_each_at_slot(&self.cur, slot, &MoveKind::OPENING, &mut |c| {
                openings.push(*c);
                ControlFlow::Continue(())
            });
        }
        for cand in openings {
            self.cur.reset_to(&base);
            self.cur_step = base_step;
            if self.listed.contains(&cand.fingerprint) {
                continue;
            }
            if let Err(stop) = self.commit(&cand, 2) {
                return Flow::Stop(stop);
            }
            if self.cur.gap_count() == 0 {
                return Flow::Solved;
            }
            if self.cur.gap_count() < base_gaps {
                return Flow::Improved;
            }
            if self.cap_reached() {
                return Flow::Stop(StopReason::OrderingCap { stage: 2 });
            }
            match self.stage1(Some(base_gaps)) {
                Flow::Exhausted => {}
                other => return other,
            }
        }
        Flow::Exhausted
    }

    fn stage3(&mut self, threshold: usize) -> Flow {
        self.restore_latest();
        let mut chain = vec![ChainEntry {
            seq: self.cur.seq().iter().map(|&v| v as u32).collect(),
            step: self.cur_step,
            cursor: (0, 0),
        }];
        let mut scratch = vec![0; self.n];
        while let Some(entry) = chain.last_mut() {
            for (s, &v) in scratch.iter_mut().zip(entry.seq.iter()) {
                *s = v as usize;
            }
            self.cur.reset_to(&scratch);
            self.cur_step = entry.step;
            let listed = &self.listed;
            let hit = scan_from(&self.cur, entry.cursor, &MoveKind::OPENING, |c| {
                !listed.contains(&c.fingerprint)
            });
            let Some((opening, next)) = hit else {
                chain.pop();
                continue;
            };
            entry.cursor = next;
            if let Err(stop) = self.commit(&opening, 3) {
                return Flow::Stop(stop);
            }
            if let Some(flow) = self.check_stage3(threshold) {
                return flow;
            }
            self.cur.enable_journal();
            self.cur.clear_journal();
            let mut stack = vec![Node {
                step: self.cur_step,
                mark: 0,
                cursor: (0, 0),
            }];
            while let Some(top) = stack.last_mut() {
                let listed = &self.listed;
                let hit = scan_from(&self.cur, top.cursor, &MoveKind::FLOATING, |c| {
                    c.delta < 0 && !listed.contains(&c.fingerprint)
                });
                let Some((cand, next)) = hit else {
                    let node = stack.pop().expect("non-empty");
                    self.cur.rollback(node.mark);
                    if let Some(parent) = stack.last() {
                        self.cur_step = parent.step;
                    }
                    continue;
                };
                top.cursor = next;
                let mark = self.cur.journal_mark();
                if let Err(stop) = self.commit(&cand, 3) {
                    return Flow::Stop(stop);
                }
                if let Some(flow) = self.check_stage3(threshold) {
                    return flow;
                }
                stack.push(Node {
                    step: self.cur_step,
                    mark,
                    cursor: (0, 0),
                });
            }
            chain.push(ChainEntry {
                seq: self.latest.iter().map(|&v| v as u32).collect(),
                step: self.latest_step,
                cursor: (0, 0),
            });
        }
        Flow::Stop(StopReason::SearchExhausted)
    }

    fn check_stage3(&self, threshold: usize) -> Option<Flow> {
        let gaps = self.cur.gap_count();
        if gaps == 0 {
            Some(Flow::Solved)
        } else if gaps < threshold {
            Some(Flow::Improved)
        } else if self.cap_reached() {
            Some(Flow::Stop(StopReason::OrderingCap { stage: 3 }))
        } else {
            None
        }
    }
}

fn ordering_cap(n: usize, exp: u32) -> usize {
    (n as u128).saturating_pow(exp).min(usize::MAX as u128) as usize
}

/// Runs the full search on `g`, starting from `initial` (0-based) or from the
/// identity arrangement.
pub fn solve(g: &Graph, config: &SolverConfig, initial: Option<&[Vertex]>) -> Result<SolveResult> {
    let started = Instant::now();
    let n = g.vertex_count();
    if config.budget_exponent < 1 {
        return Err(Error::InvalidParameters(
            "budget exponent must be at least 1".into(),
        ));
    }
    let generator_cap = config
        .generator_cap
        .unwrap_or_else(|| (n as u64).saturating_pow(4));
    if generator_cap < n as u64 {
        return Err(Error::InvalidParameters(format!(
            "generator cap {generator_cap} is below n = {n}"
        )));
    }
    let seq: Vec<Vertex> = match initial {
        Some(s) => {
            if !is_permutation(s, n) {
                return Err(Error::NotAPermutation { n });
            }
            s.to_vec()
        }
        None => (0..n).collect(),
    };
    let ordering_cap = ordering_cap(n, config.budget_exponent);
    let mut stats = SolveStats {
        n,
        stage_reached: 0,
        gap_count: 0,
        best_gap_count: 0,
        orderings_explored: 0,
        orderings_listed: 0,
        peak_orderings_listed: 0,
        ordering_cap,
        generator_applications: 0,
        generator_cap,
        reentries: 0,
        stop: StopReason::Presolve,
        budget_exhausted: false,
        elapsed: Duration::ZERO,
    };
    if let Presolve::NonHamiltonian(reason) = presolve(g) {
        stats.elapsed = started.elapsed();
        return Ok(SolveResult {
            verdict: Verdict::CertifiedNonHamiltonian { reason },
            stats,
            trace: Vec::new(),
            final_ordering: seq.clone(),
            initial: seq,
        });
    }
    let cur = CircleOrdering::new(g, seq.clone())?;
    let mut s = Search {
        g,
        n,
        best: cur.gap_count(),
        cur,
        cur_step: 0,
        gap_list: FxHashSet::default(),
        listed: FxHashSet::default(),
        ordering_cap,
        generator_cap,
        generators_used: 0,
        steps: 0,
        explored: 0,
        peak_listed: 1,
        latest: seq.clone(),
        latest_step: 0,
        stage_reached: 0,
        record_trace: config.record_trace,
        trace: Vec::new(),
    };
    let max_reentries = config.max_reentries.unwrap_or(n);
    let mut reentries = 0;
    let mut outcome = s.stage0();
    if matches!(outcome, Flow::Exhausted) {
        outcome = 'search: loop {
            s.stage_reached = s.stage_reached.max(1);
            s.restore_latest();
            match s.stage1(None) {
                Flow::Solved => break Flow::Solved,
                Flow::Stop(r) => break Flow::Stop(r),
                _ => {}
            }
            s.stage_reached = s.stage_reached.max(2);
            s.restore_latest();
            let threshold = s.cur.gap_count();
            let mut flow = s.stage2();
            if matches!(flow, Flow::Exhausted) {
                s.stage_reached = s.stage_reached.max(3);
                flow = s.stage3(threshold);
            }
            match flow {
                Flow::Solved => break 'search Flow::Solved,
                Flow::Stop(r) => break 'search Flow::Stop(r),
                Flow::Exhausted => break 'search Flow::Stop(StopReason::SearchExhausted),
                Flow::Improved => {
                    reentries += 1;
                    if reentries > max_reentries {
                        break 'search Flow::Stop(StopReason::ReentryCap);
                    }
                    s.reset_lists();
                }
            }
        };
    }
    let (verdict, stop) = match outcome {
        Flow::Solved => {
            assert!(
                verify_hamiltonian_cycle(g, s.cur.seq()),
                "solver produced an invalid cycle"
            );
            (
                Verdict::HamiltonianCycle {
                    cycle: s.cur.to_cycle(),
                },
                StopReason::Solved,
            )
        }
        Flow::Stop(r) => (Verdict::LikelyNonHamiltonian, r),
        _ => (Verdict::LikelyNonHamiltonian, StopReason::SearchExhausted),
    };
    assert!(
        s.peak_listed <= ordering_cap.max(1),
        "ordering list exceeded its cap"
    );
    assert!(s.generators_used <= generator_cap, "generator cap exceeded");
    if !matches!(verdict, Verdict::HamiltonianCycle { .. }) {
        s.restore_latest();
    }
    stats.stage_reached = s.stage_reached;
    stats.gap_count = s.cur.gap_count();
    stats.best_gap_count = s.best;
    stats.orderings_explored = s.explored;
    stats.orderings_listed = s.listed.len();
    stats.peak_orderings_listed = s.peak_listed;
    stats.generator_applications = s.generators_used;
    stats.reentries = reentries;
    stats.stop = stop;
    stats.budget_exhausted = stop.is_budget();
    stats.elapsed = started.elapsed();
    Ok(SolveResult {
        verdict,
        stats,
        final_ordering: s.cur.seq().to_vec(),
        trace: s.trace,
        initial: seq,
    })
}

/// Rebuilds the ordering produced by each trace event, in order, checking it
/// against the recorded gap count and hash.
fn replay_each<F>(g: &Graph, initial: &[Vertex], trace: &[TraceEvent], mut visit: F) -> Result<()>
where
    F: FnMut(&TraceEvent, &[Vertex]) -> bool,
{
    let mut states: HashMap<u64, Vec<Vertex>> = HashMap::new();
    states.insert(0, initial.to_vec());
    for ev in trace {
        let from = states
            .get(&ev.from)
            .ok_or_else(|| Error::InvalidGenerator(format!("unknown source step {}", ev.from)))?;
        let mut o = CircleOrdering::new(g, from.clone())?;
        for gen in &ev.generators {
            o.apply_generator_in_place(gen.internal()?)?;
        }
        if o.gap_count() != ev.gap_count_after || o.fingerprint().to_hex() != ev.canonical_hash {
            return Err(Error::InvalidGenerator(format!(
                "step {} does not reproduce its recorded ordering",
                ev.step
            )));
        }
        if !visit(ev, o.seq()) {
            break;
        }
        states.insert(ev.step, o.seq().to_vec());
    }
    Ok(())
}

/// Replays a trace from the initial arrangement and returns the ordering
/// produced by the last event.
pub fn replay_trace(g: &Graph, initial: &[Vertex], trace: &[TraceEvent]) -> Result<Vec<Vertex>> {
    let mut last = initial.to_vec();
    replay_each(g, initial, trace, |_, seq| {
        last = seq.to_vec();
        true
    })?;
    Ok(last)
}

/// Orderings produced by the first `limit` trace events.
pub fn replay_trace_frames(
    g: &Graph,
    initial: &[Vertex],
    trace: &[TraceEvent],
    limit: usize,
) -> Result<Vec<Vec<Vertex>>> {
    let mut out = Vec::new();
    if limit == 0 {
        return Ok(out);
    }
    replay_each(g, initial, trace, |_, seq| {
        out.push(seq.to_vec());
        out.len() < limit
    })?;
    Ok(out)
}
