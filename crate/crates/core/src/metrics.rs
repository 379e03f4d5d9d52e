//! Distance of an ordering from a known Hamiltonian cycle, and a brute-force
//! search for a generator move that brings it closer.

use std::fmt;
use std::ops::Sub;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{verify_hamiltonian_cycle, Cycle, Graph};
use crate::ordering::{CircleOrdering, Frame, Generator};
use crate::Vertex;

/// An exact multiple of one third.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Thirds(pub i64);

impl Thirds {
    pub fn from_parts(whole: i64, thirds: i64) -> Thirds {
        Thirds(3 * whole + thirds)
    }
}

impl Sub for Thirds {
    type Output = Thirds;
    fn sub(self, rhs: Thirds) -> Thirds {
        Thirds(self.0 - rhs.0)
    }
}

impl fmt::Display for Thirds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (whole, rem) = (self.0.div_euclid(3), self.0.rem_euclid(3));
        match rem {
            0 => write!(f, "{whole}"),
            r => write!(f, "{whole} {r}/3"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceReport {
    /// Circle-adjacent pairs of the ordering that are edges of the cycle.
    pub common_snakes: usize,
    /// `n - common_snakes`.
    pub dist: usize,
    pub gaps: usize,
    /// `gaps / 3 + dist`.
    pub delta: Thirds,
}

/// Position of every vertex on the reference cycle.
struct CyclePos {
    pos: Vec<usize>,
    n: usize,
}

impl CyclePos {
    fn new(h: &Cycle) -> CyclePos {
        let mut pos = vec![0; h.len()];
        for (i, &v) in h.as_slice().iter().enumerate() {
            pos[v] = i;
        }
        CyclePos { pos, n: h.len() }
    }

    #[inline]
    fn on_cycle(&self, u: Vertex, v: Vertex) -> bool {
        let d = self.pos[u].abs_diff(self.pos[v]);
        d == 1 || d == self.n - 1
    }
}

fn report(n: usize, common: usize, gaps: usize) -> DistanceReport {
    let dist = n - common;
    DistanceReport {
        common_snakes: common,
        dist,
        gaps,
        delta: Thirds(gaps as i64 + 3 * dist as i64),
    }
}

fn check_cycle(g: &Graph, h: &Cycle) -> Result<()> {
    if verify_hamiltonian_cycle(g, h.as_slice()) {
        Ok(())
    } else {
        Err(Error::NotHamiltonian)
    }
}

pub fn distance_report(o: &CircleOrdering<'_>, h: &Cycle) -> Result<DistanceReport> {
    check_cycle(o.graph(), h)?;
    let hp = CyclePos::new(h);
    let s = o.seq();
    let n = s.len();
    let common = (0..n)
        .filter(|&i| hp.on_cycle(s[i], s[(i + 1) % n]))
        .count();
    Ok(report(n, common, o.gap_count()))
}

/// A generator composition that improves the ordering relative to a cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImprovingMove {
    /// Generators in application order.
    pub generators: Vec<Generator>,
    pub before: DistanceReport,
    pub after: DistanceReport,
    pub result: Vec<Vertex>,
}

type Pair = (Vertex, Vertex);

/// A single generator found on some ordering, with its junction pairs.
struct Found {
    gen: Generator,
    d_common: i64,
    d_gaps: i64,
}

fn evaluate(g: &Graph, hp: &CyclePos, cut: &[Pair], join: &[Pair]) -> (i64, i64) {
    let (mut dc, mut dg) = (0i64, 0i64);
    for &(u, v) in cut {
        dc -= hp.on_cycle(u, v) as i64;
        dg -= !g.has_edge(u, v) as i64;
    }
    for &(u, v) in join {
        dc += hp.on_cycle(u, v) as i64;
        dg += !g.has_edge(u, v) as i64;
    }
    (dc, dg)
}

fn frames(o: &CircleOrdering<'_>) -> Vec<(Vertex, Vertex, Frame)> {
    let n = o.len();
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        let (p, q) = (o.seq()[i], o.seq()[(i + 1) % n]);
        for (x, y) in [(q, p), (p, q)] {
            out.push((x, y, o.frame_from(x, y).expect("circle neighbors")));
        }
    }
    out
}

/// Visits every valid γ on `o` until `f` returns true.
fn each_gamma(o: &CircleOrdering<'_>, hp: &CyclePos, mut f: impl FnMut(Found) -> bool) -> bool {
    let g = o.graph();
    let n = o.len();
    for (x, y, fr) in frames(o) {
        for ra in 2..n - 1 {
            let a = o.at(&fr, ra);
            let b = o.at(&fr, ra - 1);
            let (dc, dg) = evaluate(g, hp, &[(b, a), (y, x)], &[(x, a), (y, b)]);
            if f(Found {
                gen: Generator::Gamma { y, x, a },
                d_common: dc,
                d_gaps: dg,
            }) {
                return true;
            }
        }
    }
    false
}

/// Visits every valid κ on `o` until `f` returns true.
fn each_kappa(o: &CircleOrdering<'_>, hp: &CyclePos, mut f: impl FnMut(Found) -> bool) -> bool {
    let g = o.graph();
    let n = o.len();
    for (x, y, fr) in frames(o) {
        for rc in 1..n - 1 {
            let c = o.at(&fr, rc);
            let e = o.at(&fr, rc - 1);
            for ra in rc..n - 1 {
                let a = o.at(&fr, ra);
                for rd in ra + 1..n {
                    let d = o.at(&fr, rd);
                    let (dc, dg) = if rd == ra + 1 {
                        evaluate(g, hp, &[(e, c), (a, d), (y, x)], &[(x, a), (c, d), (y, e)])
                    } else {
                        let b = o.at(&fr, ra + 1);
                        let fv = o.at(&fr, rd - 1);
                        evaluate(
                            g,
                            hp,
                            &[(e, c), (a, b), (fv, d), (y, x)],
                            &[(x, a), (c, d), (y, fv), (b, e)],
                        )
                    };
                    if f(Found {
                        gen: Generator::Kappa { x, a, c, d },
                        d_common: dc,
                        d_gaps: dg,
                    }) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Searches single γ moves, single κ moves and κ followed by γ for one that
/// raises the number of snakes shared with `h` by at least one while adding
/// at most one gap (two when `o` has no gaps). Fails if there is none.
pub fn find_improving_generator_move(o: &CircleOrdering<'_>, h: &Cycle) -> Result<ImprovingMove> {
    let before = distance_report(o, h)?;
    if before.dist == 0 {
        return Err(Error::InvalidParameters(
            "ordering already follows the reference cycle".into(),
        ));
    }
    let hp = CyclePos::new(h);
    let allowed = if before.gaps == 0 { 2 } else { 1 };
    let good = |dc: i64, dg: i64| dc >= 1 && dg <= allowed;
    let finish = |gens: Vec<Generator>| -> Result<ImprovingMove> {
        let mut r = o.detached();
        for &g in &gens {
            r.apply_generator_in_place(g)?;
        }
        let after = distance_report(&r, h)?;
        Ok(ImprovingMove {
            generators: gens,
            before,
            after,
            result: r.seq().to_vec(),
        })
    };

    let mut hit = None;
    each_gamma(o, &hp, |m| {
        if good(m.d_common, m.d_gaps) {
            hit = Some(vec![m.gen]);
            true
        } else {
            false
        }
    });
    if hit.is_none() {
        each_kappa(o, &hp, |m| {
            if good(m.d_common, m.d_gaps) {
                hit = Some(vec![m.gen]);
                true
            } else {
                false
            }
        });
    }
    if hit.is_none() {
        each_kappa(o, &hp, |k| {
            let mut mid = o.detached();
            mid.apply_generator_in_place(k.gen)
                .expect("enumerated kappa applies");
            each_gamma(&mid, &hp, |m| {
                if good(k.d_common + m.d_common, k.d_gaps + m.d_gaps) {
                    hit = Some(vec![k.gen, m.gen]);
                    true
                } else {
                    false
                }
            })
        });
    }
    match hit {
        Some(gens) => finish(gens),
        None => Err(Error::InvalidParameters(format!(
            "no improving generator move: ordering {:?}, cycle {:?}",
            o.seq(),
            h.as_slice()
        ))),
    }
}
