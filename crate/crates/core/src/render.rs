//! SVG drawing of circle orderings: vertices on a circle, snakes as arcs,
//! ladders as chords and gaps as dashed red arcs.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::error::Result;
use crate::graph::Graph;
use crate::ordering::CircleOrdering;
use crate::solver::{replay_trace_frames, TraceEvent};
use crate::Vertex;

const FRAME: f64 = 320.0;
const RADIUS: f64 = 120.0;

#[derive(Debug, Clone)]
pub struct Frame {
    pub title: String,
    pub seq: Vec<Vertex>,
}

fn point(cx: f64, cy: f64, i: usize, n: usize) -> (f64, f64) {
    let t = 2.0 * PI * i as f64 / n as f64 - PI / 2.0;
    (cx + RADIUS * t.cos(), cy + RADIUS * t.sin())
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn draw_frame(out: &mut String, g: &Graph, frame: &Frame, ox: f64, oy: f64) -> Result<()> {
    let o = CircleOrdering::new(g, frame.seq.clone())?;
    let n = o.len();
    let (cx, cy) = (ox + FRAME / 2.0, oy + FRAME / 2.0 + 10.0);
    writeln!(
        out,
        r#"<g><text x="{:.1}" y="{:.1}" text-anchor="middle" font-size="13">{} (gaps: {})</text>"#,
        cx,
        oy + 18.0,
        escape(&frame.title),
        o.gap_count()
    )
    .unwrap();
    for (u, v) in g.edges() {
        if o.are_circle_adjacent(u, v) {
            continue;
        }
        let (x1, y1) = point(cx, cy, o.position(u), n);
        let (x2, y2) = point(cx, cy, o.position(v), n);
        writeln!(
            out,
            r##"<line class="ladder" x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="#7a8ca3" stroke-width="1"/>"##
        )
        .unwrap();
    }
    for i in 0..n {
        let (u, v) = (o.seq()[i], o.seq()[(i + 1) % n]);
        let (x1, y1) = point(cx, cy, i, n);
        let (x2, y2) = point(cx, cy, (i + 1) % n, n);
        let style = if g.has_edge(u, v) {
            r##"class="snake" stroke="#1b7f3b" stroke-width="3""##
        } else {
            r##"class="gap" stroke="#d62728" stroke-width="2" stroke-dasharray="5,4""##
        };
        writeln!(
            out,
            r#"<path d="M {x1:.1} {y1:.1} A {RADIUS:.1} {RADIUS:.1} 0 0 1 {x2:.1} {y2:.1}" fill="none" {style}/>"#
        )
        .unwrap();
    }
    for (i, &v) in o.seq().iter().enumerate() {
        let (x, y) = point(cx, cy, i, n);
        writeln!(
            out,
            r##"<circle cx="{x:.1}" cy="{y:.1}" r="9" fill="white" stroke="#333"/><text x="{x:.1}" y="{:.1}" text-anchor="middle" font-size="9">{}</text>"##,
            y + 3.0,
            v + 1
        )
        .unwrap();
    }
    out.push_str("</g>\n");
    Ok(())
}

/// One SVG document with the frames laid out in rows of `columns`.
pub fn render_frames(g: &Graph, frames: &[Frame], columns: usize) -> Result<String> {
    let columns = columns.max(1);
    let rows = frames.len().div_ceil(columns).max(1);
    let width = FRAME * columns.min(frames.len().max(1)) as f64;
    let height = FRAME * rows as f64;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}" font-family="sans-serif">"#
    )
    .unwrap();
    for (k, frame) in frames.iter().enumerate() {
        let (col, row) = (k % columns, k / columns);
        draw_frame(&mut out, g, frame, col as f64 * FRAME, row as f64 * FRAME)?;
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Frames for the initial ordering and the result of each trace event, at
/// most `max_frames` of them.
pub fn trace_frames(
    g: &Graph,
    initial: &[Vertex],
    trace: &[TraceEvent],
    max_frames: usize,
) -> Result<Vec<Frame>> {
    let mut frames = vec![Frame {
        title: "initial".into(),
        seq: initial.to_vec(),
    }];
    let states = replay_trace_frames(g, initial, trace, max_frames.saturating_sub(1))?;
    for (ev, seq) in trace.iter().zip(states) {
        frames.push(Frame {
            title: format!("step {} {}", ev.step, ev.kind),
            seq,
        });
    }
    Ok(frames)
}
