//! Readers and writers for TSPLIB HCP files, plain edge lists, TSPLIB tours
//! and the solver trace (one JSON object per line).
//!
//! Files use 1-based labels. Readers accept `\n` and `\r\n`; writers always
//! emit `\n`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Built, Cycle, Graph};
use crate::solver::TraceEvent;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    At { line: usize, message: String },
    #[error("unexpected end of input: {0}")]
    Eof(String),
    #[error(transparent)]
    Graph(#[from] crate::error::Error),
}

fn at(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::At {
        line,
        message: message.into(),
    }
}

/// Contents of a TSPLIB HCP file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HcpFile {
    pub name: String,
    pub comment: Option<String>,
    pub dimension: usize,
    /// 1-based pairs as they appear in the file.
    pub edges: Vec<(usize, usize)>,
}

impl HcpFile {
    pub fn to_built(&self) -> Result<Built, ParseError> {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
        Ok(Graph::build(self.dimension, &edges)?)
    }

    pub fn to_graph(&self) -> Result<Graph, ParseError> {
        self.to_built().map(|b| b.graph)
    }
}

/// Splits `KEY : value`, `KEY: value` or `KEY value`.
fn keyword(line: &str) -> (&str, &str) {
    let line = line.trim();
    let end = line
        .find(|c: char| c == ':' || c.is_whitespace())
        .unwrap_or(line.len());
    let key = &line[..end];
    let rest = line[end..].trim_start();
    let rest = rest.strip_prefix(':').unwrap_or(rest).trim();
    (key, rest)
}

fn parse_label(tok: &str, line: usize, n: usize) -> Result<usize, ParseError> {
    let v: i64 = tok
        .parse()
        .map_err(|_| at(line, format!("expected a vertex label, found `{tok}`")))?;
    if v < 1 || v as u64 > n as u64 {
        return Err(at(line, format!("vertex label {v} out of range 1..={n}")));
    }
    Ok(v as usize)
}

pub fn parse_tsplib_hcp_file(text: &str) -> Result<HcpFile, ParseError> {
    let mut name = None;
    let mut comment: Option<String> = None;
    let mut dimension = None;
    let mut typed = false;
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut edges = Vec::new();
    let mut section = false;
    for (ln, raw) in lines.by_ref() {
        if raw.trim().is_empty() {
            continue;
        }
        let (key, value) = keyword(raw);
        match key.to_ascii_uppercase().as_str() {
            "NAME" => name = Some(value.to_string()),
            "COMMENT" => {
                comment = Some(match comment {
                    Some(c) => format!("{c}\n{value}"),
                    None => value.to_string(),
                })
            }
            "TYPE" => {
                if value != "HCP" {
                    return Err(at(ln, format!("TYPE must be HCP, found `{value}`")));
                }
                typed = true;
            }
            "DIMENSION" => {
                let d: usize = value
                    .parse()
                    .map_err(|_| at(ln, format!("invalid DIMENSION `{value}`")))?;
                if d == 0 {
                    return Err(at(ln, "DIMENSION must be at least 1"));
                }
                dimension = Some(d);
            }
            "EDGE_DATA_FORMAT" => {
                if value != "EDGE_LIST" {
                    return Err(at(
                        ln,
                        format!("only EDGE_LIST edge data is supported, found `{value}`"),
                    ));
                }
            }
            "EDGE_DATA_SECTION" => {
                section = true;
                break;
            }
            "EOF" => break,
            other => return Err(at(ln, format!("unsupported keyword `{other}`"))),
        }
    }
    if !typed {
        return Err(ParseError::Eof("missing TYPE : HCP".into()));
    }
    let n = dimension.ok_or_else(|| ParseError::Eof("missing DIMENSION".into()))?;
    if !section {
        return Err(ParseError::Eof("missing EDGE_DATA_SECTION".into()));
    }
    let mut terminated = false;
    let mut pending: Option<(usize, usize)> = None;
    'edges: for (ln, raw) in lines.by_ref() {
        for tok in raw.split_whitespace() {
            if tok == "-1" {
                if pending.is_some() {
                    return Err(at(ln, "edge list ends in the middle of a pair"));
                }
                terminated = true;
                break 'edges;
            }
            if tok.eq_ignore_ascii_case("EOF") {
                return Err(at(ln, "EOF before the -1 terminator of EDGE_DATA_SECTION"));
            }
            let v = parse_label(tok, ln, n)?;
            match pending.take() {
                None => pending = Some((v, ln)),
                Some((u, _)) => edges.push((u, v)),
            }
        }
    }
    if !terminated {
        return Err(ParseError::Eof(
            "EDGE_DATA_SECTION is not terminated by -1".into(),
        ));
    }
    for (ln, raw) in lines {
        let t = raw.trim();
        if !(t.is_empty() || t.eq_ignore_ascii_case("EOF")) {
            return Err(at(ln, format!("unexpected content after edge data: `{t}`")));
        }
    }
    Ok(HcpFile {
        name: name.unwrap_or_default(),
        comment,
        dimension: n,
        edges,
    })
}

pub fn parse_tsplib_hcp(text: &str) -> Result<Graph, ParseError> {
    parse_tsplib_hcp_file(text)?.to_graph()
}

pub fn write_tsplib_hcp(g: &Graph, name: &str, comment: Option<&str>) -> String {
    let mut out = String::new();
    writeln!(out, "NAME : {name}").unwrap();
    if let Some(c) = comment {
        for line in c.lines() {
            writeln!(out, "COMMENT : {line}").unwrap();
        }
    }
    writeln!(out, "TYPE : HCP").unwrap();
    writeln!(out, "DIMENSION : {}", g.vertex_count()).unwrap();
    writeln!(out, "EDGE_DATA_FORMAT : EDGE_LIST").unwrap();
    writeln!(out, "EDGE_DATA_SECTION").unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out.push_str("-1\nEOF\n");
    out
}

/// Plain edge list: a header line `n m` followed by `m` lines `u v`.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines
        .next()
        .ok_or_else(|| ParseError::Eof("missing `n m` header".into()))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(at(hl, "header must be `n m`"));
    }
    let n: usize = head[0]
        .parse()
        .map_err(|_| at(hl, format!("invalid vertex count `{}`", head[0])))?;
    let m: usize = head[1]
        .parse()
        .map_err(|_| at(hl, format!("invalid edge count `{}`", head[1])))?;
    if n == 0 {
        return Err(at(hl, "vertex count must be at least 1"));
    }
    let mut edges = Vec::with_capacity(m.min(1 << 20));
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(at(ln, "expected `u v`"));
        }
        let u = parse_label(toks[0], ln, n)?;
        let v = parse_label(toks[1], ln, n)?;
        edges.push((u - 1, v - 1));
    }
    if edges.len() != m {
        return Err(ParseError::Eof(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn write_tour(c: &Cycle, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "NAME : {name}").unwrap();
    writeln!(out, "TYPE : TOUR").unwrap();
    writeln!(out, "DIMENSION : {}", c.len()).unwrap();
    writeln!(out, "TOUR_SECTION").unwrap();
    for &v in c.as_slice() {
        writeln!(out, "{}", v + 1).unwrap();
    }
    out.push_str("-1\nEOF\n");
    out
}

pub fn read_tour(text: &str) -> Result<Cycle, ParseError> {
    let mut dimension = None;
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut section = false;
    for (ln, raw) in lines.by_ref() {
        if raw.trim().is_empty() {
            continue;
        }
        let (key, value) = keyword(raw);
        match key.to_ascii_uppercase().as_str() {
            "NAME" | "COMMENT" => {}
            "TYPE" => {
                if value != "TOUR" {
                    return Err(at(ln, format!("TYPE must be TOUR, found `{value}`")));
                }
            }
            "DIMENSION" => {
                dimension = Some(
                    value
                        .parse::<usize>()
                        .map_err(|_| at(ln, format!("invalid DIMENSION `{value}`")))?,
                )
            }
            "TOUR_SECTION" => {
                section = true;
                break;
            }
            other => return Err(at(ln, format!("unsupported keyword `{other}`"))),
        }
    }
    let n = dimension.ok_or_else(|| ParseError::Eof("missing DIMENSION".into()))?;
    if !section {
        return Err(ParseError::Eof("missing TOUR_SECTION".into()));
    }
    let mut seq = Vec::with_capacity(n);
    let mut terminated = false;
    let mut last_line = 0;
    'tour: for (ln, raw) in lines.by_ref() {
        last_line = ln;
        for tok in raw.split_whitespace() {
            if tok == "-1" {
                terminated = true;
                break 'tour;
            }
            seq.push(parse_label(tok, ln, n)? - 1);
        }
    }
    if !terminated {
        return Err(ParseError::Eof(
            "TOUR_SECTION is not terminated by -1".into(),
        ));
    }
    for (ln, raw) in lines {
        let t = raw.trim();
        if !(t.is_empty() || t.eq_ignore_ascii_case("EOF")) {
            return Err(at(ln, format!("unexpected content after tour: `{t}`")));
        }
    }
    if seq.len() != n {
        return Err(at(
            last_line,
            format!("tour lists {} vertices, DIMENSION is {n}", seq.len()),
        ));
    }
    Cycle::new(seq).map_err(|e| at(last_line, e.to_string()))
}

pub fn write_trace(events: &[TraceEvent]) -> String {
    let mut out = String::new();
    for ev in events {
        out.push_str(&serde_json::to_string(ev).expect("trace events serialize"));
        out.push('\n');
    }
    out
}

pub fn read_trace(text: &str) -> Result<Vec<TraceEvent>, ParseError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| at(i + 1, e.to_string())))
        .collect()
}
