//! Line-oriented text formats: colored graphs, clique instances and solver results.
//!
//! Graph files:
//!
//! ```text
//! c <comment>
//! p fairpath <n> <m> <c>
//! v <id> <color>          (n lines, ids 1..=n, colors 1..=c)
//! a <tail> <head> <len>   (m lines, len >= 1)
//! ```
//!
//! Comments of the form `c query <s> <t> [<ell>]` and
//! `c bounds <i>:<alpha>:<beta> ...` carry an optional default query.
//! Clique files use `p mcc <k> <eta>` followed by `e <u> <v>` lines over ids
//! `1..=k·eta`, where id `x` lies in partition `(x - 1) / eta`.
//!
//! Ids and colors are 1-based in text and 0-based in memory.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Color, ColoredDigraph, GraphError, Vertex};
use crate::result::SolveResult;
use crate::testkit::{CliqueError, CliqueInstance};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{0}")]
    Incomplete(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Clique(#[from] CliqueError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// A default query carried in comment lines; vertices and colors 0-based.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QueryHint {
    pub source: Option<Vertex>,
    pub target: Option<Vertex>,
    pub ell: Option<u64>,
    /// `(color, alpha, beta)`
    pub bounds: Vec<(Color, u32, u32)>,
}

impl QueryHint {
    pub fn is_empty(&self) -> bool {
        self == &QueryHint::default()
    }
}

#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: ColoredDigraph,
    pub hint: QueryHint,
}

fn number<T: std::str::FromStr>(line: usize, what: &str, token: Option<&str>) -> Result<T, FormatError> {
    let token = token.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| syntax(line, format!("invalid {what} `{token}`")))
}

/// Parses `i:alpha:beta` with a 1-based color.
pub fn parse_bound(token: &str) -> Option<(Color, u32, u32)> {
    let mut parts = token.split(':');
    let i: usize = parts.next()?.parse().ok()?;
    let a = parts.next()?.parse().ok()?;
    let b = parts.next()?.parse().ok()?;
    if parts.next().is_some() || i == 0 {
        return None;
    }
    Some((i - 1, a, b))
}

fn parse_hint(line: usize, words: &[&str], hint: &mut QueryHint) -> Result<(), FormatError> {
    match words.first() {
        Some(&"query") => {
            if !(3..=4).contains(&words.len()) {
                return Err(syntax(line, "expected `c query <s> <t> [<ell>]`"));
            }
            let s: usize = number(line, "source", Some(words[1]))?;
            let t: usize = number(line, "target", Some(words[2]))?;
            if s == 0 || t == 0 {
                return Err(syntax(line, "vertex ids start at 1"));
            }
            hint.source = Some(s - 1);
            hint.target = Some(t - 1);
            if let Some(ell) = words.get(3) {
                hint.ell = Some(number(line, "ell", Some(ell))?);
            }
        }
        Some(&"bounds") => {
            for token in &words[1..] {
                let bound = parse_bound(token).ok_or_else(|| syntax(line, format!("invalid bound `{token}`")))?;
                hint.bounds.push(bound);
            }
        }
        _ => {}
    }
    Ok(())
}

pub fn parse_graph(text: &str) -> Result<ParsedGraph, FormatError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut colors: Vec<Option<Color>> = Vec::new();
    let mut arcs = Vec::new();
    let mut hint = QueryHint::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let words: Vec<&str> = raw.split_whitespace().collect();
        let Some((&kind, rest)) = words.split_first() else {
            continue;
        };
        match kind {
            "c" => parse_hint(line, rest, &mut hint)?,
            "p" => {
                if header.is_some() {
                    return Err(syntax(line, "duplicate problem line"));
                }
                if rest.len() != 4 || rest[0] != "fairpath" {
                    return Err(syntax(line, "expected `p fairpath <n> <m> <c>`"));
                }
                let n = number(line, "vertex count", Some(rest[1]))?;
                let m = number(line, "arc count", Some(rest[2]))?;
                let c = number(line, "color count", Some(rest[3]))?;
                header = Some((n, m, c));
                colors = vec![None; n];
            }
            _ if header.is_none() => return Err(syntax(line, "problem line must come first")),
            "v" => {
                let (n, _, c) = header.unwrap();
                if rest.len() != 2 {
                    return Err(syntax(line, "expected `v <id> <color>`"));
                }
                let id: usize = number(line, "vertex id", Some(rest[0]))?;
                let color: usize = number(line, "color", Some(rest[1]))?;
                if id == 0 || id > n {
                    return Err(syntax(line, format!("vertex id {id} outside 1..={n}")));
                }
                if color == 0 || color > c {
                    return Err(syntax(line, format!("color {color} outside 1..={c}")));
                }
                if colors[id - 1].replace(color - 1).is_some() {
                    return Err(syntax(line, format!("duplicate vertex {id}")));
                }
            }
            "a" => {
                let (n, m, _) = header.unwrap();
                if rest.len() != 3 {
                    return Err(syntax(line, "expected `a <tail> <head> <length>`"));
                }
                let tail: usize = number(line, "tail", Some(rest[0]))?;
                let head: usize = number(line, "head", Some(rest[1]))?;
                let length: u64 = number(line, "length", Some(rest[2]))?;
                for id in [tail, head] {
                    if id == 0 || id > n {
                        return Err(syntax(line, format!("vertex id {id} outside 1..={n}")));
                    }
                }
                if length == 0 {
                    return Err(syntax(line, "arc length must be at least 1"));
                }
                if arcs.len() == m {
                    return Err(syntax(line, format!("more than {m} arcs")));
                }
                arcs.push((tail - 1, head - 1, length));
            }
            other => return Err(syntax(line, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m, c) = header.ok_or_else(|| FormatError::Incomplete("missing `p fairpath` line".into()))?;
    if arcs.len() != m {
        return Err(FormatError::Incomplete(format!(
            "expected {m} arcs, found {}",
            arcs.len()
        )));
    }
    let colors = colors
        .into_iter()
        .enumerate()
        .map(|(v, col)| col.ok_or_else(|| FormatError::Incomplete(format!("vertex {} has no `v` line", v + 1))))
        .collect::<Result<Vec<_>, _>>()?;
    for v in [hint.source, hint.target].into_iter().flatten() {
        if v >= n {
            return Err(FormatError::Incomplete(format!(
                "query vertex {} outside 1..={n}",
                v + 1
            )));
        }
    }
    let graph = ColoredDigraph::new(n, c, arcs, colors)?;
    Ok(ParsedGraph { graph, hint })
}

/// Canonical serialization: hint comments, problem line, vertices by id, arcs in stored order.
pub fn write_graph(graph: &ColoredDigraph, hint: &QueryHint) -> String {
    let mut out = String::new();
    if let (Some(s), Some(t)) = (hint.source, hint.target) {
        match hint.ell {
            Some(ell) => writeln!(out, "c query {} {} {}", s + 1, t + 1, ell),
            None => writeln!(out, "c query {} {}", s + 1, t + 1),
        }
        .unwrap();
    }
    if !hint.bounds.is_empty() {
        out.push_str("c bounds");
        for (i, a, b) in &hint.bounds {
            write!(out, " {}:{}:{}", i + 1, a, b).unwrap();
        }
        out.push('\n');
    }
    writeln!(out, "p fairpath {} {} {}", graph.n(), graph.m(), graph.num_colors()).unwrap();
    for v in 0..graph.n() {
        writeln!(out, "v {} {}", v + 1, graph.color(v) + 1).unwrap();
    }
    for arc in graph.arcs() {
        writeln!(out, "a {} {} {}", arc.tail + 1, arc.head + 1, arc.length).unwrap();
    }
    out
}

pub fn parse_mcc(text: &str) -> Result<CliqueInstance, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let words: Vec<&str> = raw.split_whitespace().collect();
        let Some((&kind, rest)) = words.split_first() else {
            continue;
        };
        match kind {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(syntax(line, "duplicate problem line"));
                }
                if rest.len() != 3 || rest[0] != "mcc" {
                    return Err(syntax(line, "expected `p mcc <k> <eta>`"));
                }
                header = Some((number(line, "k", Some(rest[1]))?, number(line, "eta", Some(rest[2]))?));
            }
            _ if header.is_none() => return Err(syntax(line, "problem line must come first")),
            "e" => {
                let (k, eta) = header.unwrap();
                if rest.len() != 2 {
                    return Err(syntax(line, "expected `e <u> <v>`"));
                }
                let mut ends = [(0, 0); 2];
                for (end, token) in ends.iter_mut().zip(rest) {
                    let id: usize = number(line, "vertex id", Some(token))?;
                    if id == 0 || id > k * eta {
                        return Err(syntax(line, format!("vertex id {id} outside 1..={}", k * eta)));
                    }
                    *end = ((id - 1) / eta, (id - 1) % eta);
                }
                if ends[0].0 == ends[1].0 {
                    return Err(syntax(line, "edge inside a partition"));
                }
                edges.push((ends[0], ends[1]));
            }
            other => return Err(syntax(line, format!("unknown line type `{other}`"))),
        }
    }
    let (k, eta) = header.ok_or_else(|| FormatError::Incomplete("missing `p mcc` line".into()))?;
    Ok(CliqueInstance::new(k, eta, edges)?)
}

pub fn write_mcc(instance: &CliqueInstance) -> String {
    let mut out = String::new();
    writeln!(out, "p mcc {} {}", instance.k(), instance.eta()).unwrap();
    for &(a, b) in instance.edges() {
        writeln!(out, "e {} {}", instance.id(a) + 1, instance.id(b) + 1).unwrap();
    }
    out
}

/// Result lines: `result`, then `path`/`length`/`counts` on yes or `reason`
/// on no, then a `meta` line. Path vertices are printed 1-based.
pub fn render_result(result: &SolveResult, time_ms: Option<u128>) -> String {
    let mut out = String::new();
    writeln!(out, "result {}", if result.decision { "yes" } else { "no" }).unwrap();
    if let Some(path) = &result.witness {
        out.push_str("path");
        for v in path.vertices() {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
        writeln!(out, "length {}", path.length()).unwrap();
    }
    if let Some(counts) = &result.counts {
        writeln!(out, "counts {counts}").unwrap();
    }
    if let Some(reason) = result.reason {
        writeln!(out, "reason {reason}").unwrap();
    }
    let opt = |x: Option<String>| x.unwrap_or_else(|| "-".into());
    writeln!(
        out,
        "meta solver={} seed={} epsilon={} time_ms={}",
        result.solver,
        opt(result.seed.map(|s| s.to_string())),
        opt(result.epsilon.map(|e| e.to_string())),
        opt(time_ms.map(|t| t.to_string())),
    )
    .unwrap();
    out
}
