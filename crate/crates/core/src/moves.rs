//! The nine circle transformations performed around a gap: three closing
//! moves, five floating moves and one opening move.
//!
//! Every move is read on the linear sequence that starts at `x` and ends at
//! `y`, where `(y, x)` is the pivot gap. Enumeration is deterministic: pivot
//! orientation, then kind, then free vertices in ascending neighbor order.
//! Each candidate carries the pairs it cuts and joins, which gives the gap
//! delta and the fingerprint of the result without building it.

use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ordering::{CircleOrdering, Fingerprint, Frame, Gap, Generator};
use crate::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    /// Closing 2-opt, first type.
    C2a,
    /// Closing 2-opt, second type.
    C2b,
    /// Closing 3-opt.
    C3,
    /// Floating 2-flo.
    F2,
    /// Floating 3-flo.
    F3,
    /// Floating 4-flo, first type.
    F4a,
    /// Floating 4-flo, second type.
    F4b,
    /// Floating 5-flo.
    F5,
    /// Opening 4-flo.
    O4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveClass {
    Closing,
    Floating,
    Opening,
}

impl MoveKind {
    pub const CLOSING: [MoveKind; 3] = [MoveKind::C2a, MoveKind::C2b, MoveKind::C3];
    pub const FLOATING: [MoveKind; 5] = [
        MoveKind::F2,
        MoveKind::F3,
        MoveKind::F4a,
        MoveKind::F4b,
        MoveKind::F5,
    ];
    pub const OPENING: [MoveKind; 1] = [MoveKind::O4];
    pub const ALL: [MoveKind; 9] = [
        MoveKind::C2a,
        MoveKind::C2b,
        MoveKind::C3,
        MoveKind::F2,
        MoveKind::F3,
        MoveKind::F4a,
        MoveKind::F4b,
        MoveKind::F5,
        MoveKind::O4,
    ];

    pub fn class(self) -> MoveClass {
        match self {
            MoveKind::C2a | MoveKind::C2b | MoveKind::C3 => MoveClass::Closing,
            MoveKind::O4 => MoveClass::Opening,
            _ => MoveClass::Floating,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::C2a => "C2a",
            MoveKind::C2b => "C2b",
            MoveKind::C3 => "C3",
            MoveKind::F2 => "F2",
            MoveKind::F3 => "F3",
            MoveKind::F4a => "F4a",
            MoveKind::F4b => "F4b",
            MoveKind::F5 => "F5",
            MoveKind::O4 => "O4",
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Named vertices of a move pattern besides the pivot `x`, `y`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bindings {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f: Option<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<Vertex>,
}

/// A transformation around the pivot gap `(y, x)`; `x` is where the linear
/// reading starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TransformSpec {
    pub kind: MoveKind,
    pub x: Vertex,
    pub y: Vertex,
    #[serde(flatten)]
    pub bind: Bindings,
}

impl TransformSpec {
    pub fn pivot(&self) -> Gap {
        Gap::new(self.x, self.y)
    }

    fn req(v: Option<Vertex>, name: &str, kind: MoveKind) -> Result<Vertex> {
        v.ok_or_else(|| Error::Ineligible(format!("{kind} needs vertex {name}")))
    }

    /// The generator applications that realize this move, in application order.
    pub fn generators(&self) -> Result<Vec<Generator>> {
        let k = self.kind;
        let (x, y) = (self.x, self.y);
        let p = &self.bind;
        let a = Self::req(p.a, "a", k)?;
        Ok(match k {
            MoveKind::C2a | MoveKind::C2b | MoveKind::F2 => vec![Generator::Gamma { y, x, a }],
            MoveKind::C3 | MoveKind::F3 => {
                let c = Self::req(p.c, "c", k)?;
                let b = Self::req(p.b, "b", k)?;
                vec![
                    Generator::Gamma { y, x, a },
                    Generator::Gamma { y: c, x: y, a: b },
                ]
            }
            MoveKind::F4a => {
                let (b, c, d) = (
                    Self::req(p.b, "b", k)?,
                    Self::req(p.c, "c", k)?,
                    Self::req(p.d, "d", k)?,
                );
                let (e, f) = (Self::req(p.e, "e", k)?, Self::req(p.f, "f", k)?);
                vec![
                    Generator::Kappa { x, a, c, d },
                    Generator::Gamma { y: b, x: e, a: f },
                    Generator::Gamma { y: d, x: b, a: y },
                ]
            }
            MoveKind::F4b | MoveKind::O4 => {
                let (c, d) = (Self::req(p.c, "c", k)?, Self::req(p.d, "d", k)?);
                vec![Generator::Kappa { x, a, c, d }]
            }
            MoveKind::F5 => {
                let (c, d) = (Self::req(p.c, "c", k)?, Self::req(p.d, "d", k)?);
                let (g, h, j) = (
                    Self::req(p.g, "g", k)?,
                    Self::req(p.h, "h", k)?,
                    Self::req(p.j, "j", k)?,
                );
                vec![
                    Generator::Kappa { x, a, c, d },
                    Generator::Kappa {
                        x: j,
                        a: d,
                        c: g,
                        d: h,
                    },
                ]
            }
        })
    }

    /// Pattern vertices as `(name, 1-based label)` pairs, pivot first.
    pub fn external_params(&self) -> Vec<(char, Vertex)> {
        let p = &self.bind;
        let mut out = vec![('x', self.x + 1), ('y', self.y + 1)];
        for (name, v) in [
            ('a', p.a),
            ('b', p.b),
            ('c', p.c),
            ('d', p.d),
            ('e', p.e),
            ('f', p.f),
            ('g', p.g),
            ('h', p.h),
            ('j', p.j),
        ] {
            if let Some(v) = v {
                out.push((name, v + 1));
            }
        }
        out
    }
}

impl fmt::Display for TransformSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.kind)?;
        for (i, (name, v)) in self.external_params().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{name}={v}")?;
        }
        write!(f, ")")
    }
}

type Pair = (Vertex, Vertex);

/// An enumerated move together with its effect on the ordering.
#[derive(Debug, Clone, Copy)]
pub struct Candidate {
    pub spec: TransformSpec,
    /// Gap count after the move minus gap count before.
    pub delta: i32,
    /// Fingerprint of the resulting ordering.
    pub fingerprint: Fingerprint,
    joins: [Pair; 5],
    join_len: u8,
}

impl Candidate {
    /// Circle pairs created by the move.
    pub fn joins(&self) -> &[Pair] {
        &self.joins[..self.join_len as usize]
    }
}

struct Ctx<'a, 'g> {
    o: &'a CircleOrdering<'g>,
    g: &'g Graph,
    fr: Frame,
    x: Vertex,
    y: Vertex,
    n: usize,
}

impl Ctx<'_, '_> {
    #[inline]
    fn rel(&self, v: Vertex) -> usize {
        self.o.rel(&self.fr, v)
    }

    #[inline]
    fn at(&self, r: usize) -> Vertex {
        self.o.at(&self.fr, r)
    }

    #[inline]
    fn edge(&self, u: Vertex, v: Vertex) -> bool {
        self.g.has_edge(u, v)
    }

    #[inline]
    fn gap(&self, u: Vertex, v: Vertex) -> i32 {
        !self.g.has_edge(u, v) as i32
    }

    fn emit<F>(
        &self,
        kind: MoveKind,
        bind: Bindings,
        cut: &[Pair],
        join: &[Pair],
        f: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&Candidate) -> ControlFlow<()>,
    {
        let mut fp = self.o.fingerprint();
        let mut delta = 0;
        for &(u, v) in cut {
            fp = fp.sub(u, v);
            delta -= self.gap(u, v);
        }
        let mut joins = [(0, 0); 5];
        for (i, &(u, v)) in join.iter().enumerate() {
            fp = fp.add(u, v);
            delta += self.gap(u, v);
            joins[i] = (u, v);
        }
        let cand = Candidate {
            spec: TransformSpec {
                kind,
                x: self.x,
                y: self.y,
                bind,
            },
            delta,
            fingerprint: fp,
            joins,
            join_len: join.len() as u8,
        };
        f(&cand)
    }

    /// Closing 2-opt (both types) and floating 2-flo: `(x,..,b,a,..,y | x)`.
    fn two_opt<F>(&self, kind: MoveKind, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Candidate) -> ControlFlow<()>,
    {
        let (x, y, n) = (self.x, self.y, self.n);
        for &a in self.g.neighbors(x) {
            let ra = self.rel(a);
            if ra < 2 || ra > n - 2 {
                continue;
            }
            let b = self.at(ra - 1);
            let ok = match kind {
                MoveKind::C2a => !self.edge(b, a),
                MoveKind::C2b => self.edge(y, b),
                _ => true,
            };
            if !ok {
                continue;
            }
            let bind = Bindings {
                a: Some(a),
                b: Some(b),
                ..Bindings::default()
            };
            self.emit(kind, bind, &[(b, a), (y, x)], &[(x, a), (y, b)], f)?;
        }
        ControlFlow::Continue(())
    }

    /// `(x,..,c,a,..,b,d,..,y | x)`.
    fn three_opt<F>(&self, kind: MoveKind, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Candidate) -> ControlFlow<()>,
    {
        let (x, y, n) = (self.x, self.y, self.n);
        let emit = |a, b, c, d, f: &mut F| {
            let bind = Bindings {
                a: Some(a),
                b: Some(b),
                c: Some(c),
                d: Some(d),
                ..Bindings::default()
            };
            self.emit(
                kind,
                bind,
                &[(c, a), (b, d), (y, x)],
                &[(y, b), (a, x), (c, d)],
                f,
            )
        };
        for &a in self.g.neighbors(x) {
            let ra = self.rel(a);
            if ra < 2 || ra > n - 2 {
                continue;
            }
            let c = self.at(ra - 1);
            if kind == MoveKind::F3 {
                for &d in self.g.neighbors(c) {
                    let rd = self.rel(d);
                    if rd <= ra || rd > n - 1 {
                        continue;
                    }
                    emit(a, self.at(rd - 1), c, d, f)?;
                }
            }
            for &b in self.g.neighbors(y) {
                let rb = self.rel(b);
                if rb < ra || rb + 3 > n {
                    continue;
                }
                let d = self.at(rb + 1);
                let cd = self.edge(c, d);
                if (kind == MoveKind::C3) != cd {
                    continue;
                }
                emit(a, b, c, d, f)?;
            }
        }
        ControlFlow::Continue(())
    }

    /// `(x,..,e,c,..,a,b,..,d,f,..,y | x)` with ladders `(x,a)`, `(b,y)`, `(c,d)`.
    fn four_flo_a<F>(&self, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Candidate) -> ControlFlow<()>,
    {
        let (x, y, n) = (self.x, self.y, self.n);
        for &a in self.g.neighbors(x) {
            let ra = self.rel(a);
            if ra < 2 || ra + 4 > n {
                continue;
            }
            let rb = ra + 1;
            let b = self.at(rb);
            if !self.edge(b, y) {
                continue;
            }
            for rc in 1..=ra {
                let c = self.at(rc);
                let e = self.at(rc - 1);
                for &d in self.g.neighbors(c) {
                    let rd = self.rel(d);
                    if rd <= rb || rd + 2 > n {
                        continue;
                    }
                    let fv = self.at(rd + 1);
                    let bind = Bindings {
                        a: Some(a),
                        b: Some(b),
                        c: Some(c),
                        d: Some(d),
                        e: Some(e),
                        f: Some(fv),
                        ..Bindings::default()
                    };
                    self.emit(
                        MoveKind::F4a,
                        bind,
                        &[(e, c), (a, b), (d, fv), (y, x)],
                        &[(b, y), (fv, e), (x, a), (c, d)],
                        f,
                    )?;
                }
            }
        }
        ControlFlow::Continue(())
    }

    /// `(x,..,e,c,..,a,b,..,f,d,..,y | x)` with ladders `(x,a)`, `(c,d)` and
    /// at least one of `(e,b)`, `(f,y)`.
    fn four_flo_b<F>(&self, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Candidate) -> ControlFlow<()>,
    {
        let (x, y, n) = (self.x, self.y, self.n);
        for &a in self.g.neighbors(x) {
            let ra = self.rel(a);
            if ra < 2 || ra + 3 > n {
                continue;
            }
            let b = self.at(ra + 1);
            for rc in 1..=ra {
                let c = self.at(rc);
                let e = self.at(rc - 1);
                let eb = self.edge(e, b);
                for &d in self.g.neighbors(c) {
                    let rd = self.rel(d);
                    if rd < ra + 2 {
                        continue;
                    }
                    let rf = rd - 1;
                    let fv = self.at(rf);
                    if !(eb || (rf + 3 <= n && self.edge(fv, y))) {
                        continue;
                    }
                    let bind = Bindings {
                        a: Some(a),
                        b: Some(b),
                        c: Some(c),
                        d: Some(d),
                        e: Some(e),
                        f: Some(fv),
                        ..Bindings::default()
                    };
                    self.emit(
                        MoveKind::F4b,
                        bind,
                        &[(e, c), (a, b), (fv, d), (y, x)],
                        &[(x, a), (c, d), (y, fv), (b, e)],
                        f,
                    )?;
                }
            }
        }
        ControlFlow::Continue(())
    }

    /// `(x,..,e,c,..,a,f,..,g,b,..,j,d,h,..,y | x)` with ladders `(x,a)`,
    /// `(b,y)`, `(c,d)`, `(f,e)`.
    fn five_flo<F>(&self, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Candidate) -> ControlFlow<()>,
    {
        let (x, y, n) = (self.x, self.y, self.n);
        for &a in self.g.neighbors(x) {
            let ra = self.rel(a);
            if ra < 2 || ra + 5 > n {
                continue;
            }
            let rf = ra + 1;
            let fv = self.at(rf);
            for &e in self.g.neighbors(fv) {
                let re = self.rel(e);
                if re >= ra {
                    continue;
                }
                let c = self.at(re + 1);
                for &d in self.g.neighbors(c) {
                    let rd = self.rel(d);
                    if rd < rf + 2 || rd + 2 > n {
                        continue;
                    }
                    let j = self.at(rd - 1);
                    let h = self.at(rd + 1);
                    for &b in self.g.neighbors(y) {
                        let rb = self.rel(b);
                        if rb <= rf || rb >= rd {
                            continue;
                        }
                        let g = self.at(rb - 1);
                        let bind = Bindings {
                            a: Some(a),
                            b: Some(b),
                            c: Some(c),
                            d: Some(d),
                            e: Some(e),
                            f: Some(fv),
                            g: Some(g),
                            h: Some(h),
                            j: Some(j),
                        };
                        self.emit(
                            MoveKind::F5,
                            bind,
                            &[(e, c), (a, fv), (g, b), (d, h), (y, x)],
                            &[(d, c), (a, x), (e, fv), (g, h), (y, b)],
                            f,
                        )?;
                    }
                }
            }
        }
        ControlFlow::Continue(())
    }

    /// `(x,..,e,c,..,a,b,..,f,d,..,y | x)` with ladders `(x,a)`, `(c,d)`; the
    /// three cut pairs other than the pivot must be snakes.
    fn opening<F>(&self, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Candidate) -> ControlFlow<()>,
    {
        let (x, y, n) = (self.x, self.y, self.n);
        for &a in self.g.neighbors(x) {
            let ra = self.rel(a);
            if ra < 2 || ra > n - 2 {
                continue;
            }
            let b = self.at(ra + 1);
            if !self.edge(a, b) {
                continue;
            }
            for rc in 1..=ra {
                let c = self.at(rc);
                let e = self.at(rc - 1);
                if !self.edge(e, c) {
                    continue;
                }
                for &d in self.g.neighbors(c) {
                    let rd = self.rel(d);
                    if rd <= ra || rd < rc + 2 {
                        continue;
                    }
                    if rd == ra + 1 {
                        let bind = Bindings {
                            a: Some(a),
                            c: Some(c),
                            d: Some(d),
                            e: Some(e),
                            ..Bindings::default()
                        };
                        self.emit(
                            MoveKind::O4,
                            bind,
                            &[(e, c), (a, d), (y, x)],
                            &[(x, a), (c, d), (y, e)],
                            f,
                        )?;
                    } else {
                        let fv = self.at(rd - 1);
                        if !self.edge(fv, d) {
                            continue;
                        }
                        let bind = Bindings {
                            a: Some(a),
                            b: Some(b),
                            c: Some(c),
                            d: Some(d),
                            e: Some(e),
                            f: Some(fv),
                            ..Bindings::default()
                        };
                        self.emit(
                            MoveKind::O4,
                            bind,
                            &[(e, c), (a, b), (fv, d), (y, x)],
                            &[(x, a), (c, d), (y, fv), (b, e)],
                            f,
                        )?;
                    }
                }
            }
        }
        ControlFlow::Continue(())
    }

    fn kind<F>(&self, kind: MoveKind, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Candidate) -> ControlFlow<()>,
    {
        if self.n < 4 {
            return ControlFlow::Continue(());
        }
        match kind {
            MoveKind::C2a | MoveKind::C2b | MoveKind::F2 => self.two_opt(kind, f),
            MoveKind::C3 | MoveKind::F3 => self.three_opt(kind, f),
            MoveKind::F4a => self.four_flo_a(f),
            MoveKind::F4b => self.four_flo_b(f),
            MoveKind::F5 => self.five_flo(f),
            MoveKind::O4 => self.opening(f),
        }
    }
}

/// Visits every candidate of `kind` for the orientation where `x` starts the
/// reading and `y` ends it. Does not require `(x, y)` to be a gap.
pub fn for_each_oriented<F>(
    o: &CircleOrdering<'_>,
    x: Vertex,
    y: Vertex,
    kind: MoveKind,
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&Candidate) -> ControlFlow<()>,
{
    let Ok(fr) = o.frame_from(x, y) else {
        return ControlFlow::Continue(());
    };
    let ctx = Ctx {
        o,
        g: o.graph(),
        fr,
        x,
        y,
        n: o.len(),
    };
    ctx.kind(kind, f)
}

/// The two readings of the circle pair at physical slot `i`: the endpoint at
/// the lower position plays `x` first, then the other endpoint.
pub(crate) fn slot_orientations(o: &CircleOrdering<'_>, slot: usize) -> [(Vertex, Vertex); 2] {
    let n = o.len();
    let (p, q) = (o.at_phys(slot), o.at_phys((slot + 1) % n));
    if slot + 1 < n {
        [(p, q), (q, p)]
    } else {
        [(q, p), (p, q)]
    }
}

fn slot_of(o: &CircleOrdering<'_>, pivot: Gap) -> Option<usize> {
    let (u, v) = (pivot.0, pivot.1);
    let n = o.len();
    if u >= n || v >= n || !o.are_circle_adjacent(u, v) {
        return None;
    }
    let (pu, pv) = (o.position(u), o.position(v));
    Some(if (pu + 1) % n == pv { pu } else { pv })
}

/// Visits candidates around the pair at `slot`: both orientations, then
/// `kinds` in the given order.
pub fn for_each_at_slot<F>(
    o: &CircleOrdering<'_>,
    slot: usize,
    kinds: &[MoveKind],
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&Candidate) -> ControlFlow<()>,
{
    for (x, y) in slot_orientations(o, slot) {
        for &kind in kinds {
            for_each_oriented(o, x, y, kind, f)?;
        }
    }
    ControlFlow::Continue(())
}

/// Visits candidates around `pivot` (which need not be a gap).
pub fn for_each_around<F>(
    o: &CircleOrdering<'_>,
    pivot: Gap,
    kinds: &[MoveKind],
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&Candidate) -> ControlFlow<()>,
{
    match slot_of(o, pivot) {
        Some(slot) => for_each_at_slot(o, slot, kinds, f),
        None => ControlFlow::Continue(()),
    }
}

fn find_candidate(o: &CircleOrdering<'_>, spec: &TransformSpec) -> Option<Candidate> {
    if !o.is_gap(spec.x, spec.y) {
        return None;
    }
    let mut found = None;
    let _ = for_each_oriented(o, spec.x, spec.y, spec.kind, &mut |c| {
        if c.spec == *spec {
            found = Some(*c);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

/// True when the pivot of `spec` is a gap and `spec` matches its kind's pattern.
pub fn eligible(o: &CircleOrdering<'_>, spec: &TransformSpec) -> bool {
    find_candidate(o, spec).is_some()
}

/// Gap count after the move minus gap count before, computed from the pairs
/// the move cuts and joins.
pub fn predicted_gap_delta(o: &CircleOrdering<'_>, spec: &TransformSpec) -> Result<i32> {
    find_candidate(o, spec)
        .map(|c| c.delta)
        .ok_or_else(|| Error::Ineligible(spec.to_string()))
}

/// Applies `spec` to a copy of `o`, returning the result and the generators used.
pub fn apply_move<'g>(
    o: &CircleOrdering<'g>,
    spec: &TransformSpec,
) -> Result<(CircleOrdering<'g>, Vec<Generator>)> {
    if !eligible(o, spec) {
        return Err(Error::Ineligible(spec.to_string()));
    }
    let mut out = o.detached();
    let gens = apply_unchecked(&mut out, spec)?;
    Ok((out, gens))
}

/// Applies the generators of `spec` in place without checking the pattern.
pub(crate) fn apply_unchecked(
    o: &mut CircleOrdering<'_>,
    spec: &TransformSpec,
) -> Result<Vec<Generator>> {
    let gens = spec.generators()?;
    for &g in &gens {
        o.apply_generator_in_place(g)?;
    }
    Ok(gens)
}

/// First closing move in scan order, if any.
pub fn scan_closing(o: &CircleOrdering<'_>) -> Option<TransformSpec> {
    let mut found = None;
    for slot in o.gap_slots() {
        let _ = for_each_at_slot(o, slot, &MoveKind::CLOSING, &mut |c| {
            debug_assert!(c.delta < 0, "closing move {} has delta {}", c.spec, c.delta);
            found = Some(c.spec);
            ControlFlow::Break(())
        });
        if found.is_some() {
            break;
        }
    }
    found
}

/// First floating move around `pivot` whose result is not rejected.
pub fn scan_floating<'g, R>(
    o: &CircleOrdering<'g>,
    pivot: Gap,
    mut reject: R,
) -> Option<(TransformSpec, CircleOrdering<'g>)>
where
    R: FnMut(Fingerprint) -> bool,
{
    if !o.is_gap(pivot.0, pivot.1) {
        return None;
    }
    let mut found = None;
    let _ = for_each_around(o, pivot, &MoveKind::FLOATING, &mut |c| {
        if reject(c.fingerprint) {
            ControlFlow::Continue(())
        } else {
            found = Some(c.spec);
            ControlFlow::Break(())
        }
    });
    let spec = found?;
    let mut out = o.detached();
    apply_unchecked(&mut out, &spec).expect("enumerated move applies");
    Some((spec, out))
}

/// Every opening move around `pivot`, both orientations, in scan order.
pub fn enumerate_opening(o: &CircleOrdering<'_>, pivot: Gap) -> Vec<TransformSpec> {
    let mut out = Vec::new();
    let _ = for_each_around(o, pivot, &MoveKind::OPENING, &mut |c| {
        out.push(c.spec);
        ControlFlow::Continue(())
    });
    out
}

/// Every candidate of the given kinds around every gap, in scan order.
pub fn all_candidates(o: &CircleOrdering<'_>, kinds: &[MoveKind]) -> Vec<Candidate> {
    let mut out = Vec::new();
    for slot in o.gap_slots() {
        let _ = for_each_at_slot(o, slot, kinds, &mut |c| {
            out.push(*c);
            ControlFlow::Continue(())
        });
    }
    out
}
