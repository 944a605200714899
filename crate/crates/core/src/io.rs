//! Text formats for graphs, interval and permutation models, and cotrees.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::models::{CoKind, CoNode, Cotree, IntervalModel, Model, PermutationModel, Rational};

/// Non-empty, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn header(text: &str, keyword: &str) -> Result<(usize, usize)> {
    let (line, l) = content_lines(text).next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let mut parts = l.split_whitespace();
    if parts.next() != Some(keyword) {
        return Err(Error::parse(line, format!("expected `{keyword} <n>` header")));
    }
    let n = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::parse(line, "missing vertex count"))?;
    if parts.next().is_some() {
        return Err(Error::parse(line, "trailing tokens in header"));
    }
    Ok((line, n))
}

fn num<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    tok.and_then(|s| s.parse().ok()).ok_or_else(|| Error::parse(line, format!("bad or missing {what}")))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let (hline, n) = header(text, "graph")?;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (line, l) in content_lines(text).skip_while(|&(i, _)| i <= hline) {
        let mut parts = l.split_whitespace();
        if parts.next() != Some("e") {
            return Err(Error::parse(line, "expected `e <u> <v>`"));
        }
        let u: usize = num(parts.next(), line, "endpoint")?;
        let v: usize = num(parts.next(), line, "endpoint")?;
        if parts.next().is_some() {
            return Err(Error::parse(line, "trailing tokens"));
        }
        if u >= v || v >= n {
            return Err(Error::parse(line, format!("edge must satisfy 0 <= u < v < {n}")));
        }
        if !seen.insert((u, v)) {
            return Err(Error::parse(line, "duplicate edge"));
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("graph {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(s, "e {u} {v}").unwrap();
    }
    s
}

fn parse_rational(tok: &str, line: usize) -> Result<Rational> {
    let bad = || Error::parse(line, format!("bad endpoint `{tok}`"));
    match tok.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.parse().map_err(|_| bad())?;
            let q: i64 = q.parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(tok.parse().map_err(|_| bad())?)),
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Reads `<id> <a> <b>` rows for ids `0..n`, each exactly once.
fn rows<T: Clone>(
    text: &str,
    keyword: &str,
    mut field: impl FnMut(&str, usize) -> Result<T>,
) -> Result<Vec<(T, T)>> {
    let (hline, n) = header(text, keyword)?;
    let mut out: Vec<Option<(T, T)>> = vec![None; n];
    for (line, l) in content_lines(text).skip_while(|&(i, _)| i <= hline) {
        let parts: Vec<&str> = l.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(Error::parse(line, "expected `<id> <a> <b>`"));
        }
        let id: usize = num(Some(parts[0]), line, "id")?;
        if id >= n || out[id].is_some() {
            return Err(Error::parse(line, format!("id {id} out of range or repeated")));
        }
        out[id] = Some((field(parts[1], line)?, field(parts[2], line)?));
    }
    out.into_iter()
        .enumerate()
        .map(|(i, r)| r.ok_or_else(|| Error::parse(0, format!("missing row for id {i}"))))
        .collect()
}

pub fn parse_intervals(text: &str) -> Result<IntervalModel> {
    IntervalModel::new(rows(text, "intervals", parse_rational)?)
}

pub fn write_intervals(m: &IntervalModel) -> String {
    let mut s = format!("intervals {}\n", m.len());
    for (i, (l, r)) in m.intervals.iter().enumerate() {
        writeln!(s, "{i} {} {}", fmt_rational(l), fmt_rational(r)).unwrap();
    }
    s
}

pub fn parse_permutation(text: &str) -> Result<PermutationModel> {
    PermutationModel::new(rows(text, "permutation", |tok, line| num(Some(tok), line, "index"))?)
}

pub fn write_permutation(m: &PermutationModel) -> String {
    let mut s = format!("permutation {}\n", m.len());
    for (i, (t, b)) in m.segments.iter().enumerate() {
        writeln!(s, "{i} {t} {b}").unwrap();
    }
    s
}

pub fn parse_cotree(text: &str) -> Result<Cotree> {
    let cleaned: String = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .collect::<Vec<_>>()
        .join(" ");
    let spaced = cleaned.replace('(', " ( ").replace(')', " ) ");
    let mut tokens = spaced.split_whitespace().peekable();
    let mut nodes = Vec::new();
    // each frame: operator and collected child indices
    let mut stack: Vec<(Option<CoKind>, Vec<usize>)> = Vec::new();
    let mut root = None;
    let err = |m: &str| Error::parse(1, format!("cotree: {m}"));
    while let Some(tok) = tokens.next() {
        if root.is_some() {
            return Err(err("trailing input after expression"));
        }
        let finished = match tok {
            "(" => {
                let kind = match tokens.next() {
                    Some("U") | Some("u") => CoKind::Union,
                    Some("J") | Some("j") => CoKind::Join,
                    _ => return Err(err("expected U or J after `(`")),
                };
                stack.push((Some(kind), Vec::new()));
                None
            }
            ")" => {
                let (kind, ch) = stack.pop().ok_or_else(|| err("unbalanced `)`"))?;
                if ch.len() < 2 {
                    return Err(Error::MalformedCotree("internal node with fewer than two children".into()));
                }
                nodes.push(CoNode::Inner(kind.unwrap(), ch));
                Some(nodes.len() - 1)
            }
            leaf => {
                let v: usize = leaf.parse().map_err(|_| err(&format!("bad leaf `{leaf}`")))?;
                nodes.push(CoNode::Leaf(v));
                Some(nodes.len() - 1)
            }
        };
        if let Some(idx) = finished {
            match stack.last_mut() {
                Some((_, ch)) => ch.push(idx),
                None => root = Some(idx),
            }
        }
    }
    if !stack.is_empty() {
        return Err(err("unbalanced `(`"));
    }
    let root = root.ok_or_else(|| err("empty input"))?;
    Ok(Cotree::from_nodes(nodes, root)?.canonical())
}

pub fn write_cotree(t: &Cotree) -> String {
    format!("{t}\n")
}

/// Parses any model, choosing the format from the first keyword.
pub fn parse_model(text: &str) -> Result<Model> {
    let first = content_lines(text).next().map(|(_, l)| l).unwrap_or("");
    if first.starts_with('(') || first.chars().next().is_some_and(|c| c.is_ascii_digit()) {
        return Ok(Model::Cotree(parse_cotree(text)?));
    }
    match first.split_whitespace().next() {
        Some("graph") => Ok(Model::Graph(parse_graph(text)?)),
        Some("intervals") => Ok(Model::Intervals(parse_intervals(text)?)),
        Some("permutation") => Ok(Model::Permutation(parse_permutation(text)?)),
        _ => Err(Error::parse(1, "unknown model header")),
    }
}

pub fn write_model(m: &Model) -> String {
    match m {
        Model::Graph(g) => write_graph(g),
        Model::Intervals(im) => write_intervals(im),
        Model::Permutation(pm) => write_permutation(pm),
        Model::Cotree(t) => write_cotree(t),
    }
}
