//! Line-oriented digraph files.
//!
//! ```text
//! # comment
//! digraph <order> <arcs>
//! labels: name0 name1 ...          (optional)
//! partition: v1 = a,b,c            (optional)
//! u v                              (one line per arc)
//! ```
//!
//! Vertices on arc and partition lines are labels when a `labels:` line is
//! present and decimal indices otherwise. `#` starts a comment anywhere on a
//! line. The canonical form written by [`serialize`] lists arcs in ascending
//! `(tail, head)` id order, so parsing and re-serializing a canonical file
//! reproduces it byte for byte.

use std::fmt::Write as _;

use thiserror::Error;

use crate::classes::{validate_partition, SplitPartition};
use crate::error::Error;
use crate::graph::{Digraph, DigraphBuilder, VertexId};
use crate::path::{Path, RawPath};

/// Failure to read a digraph or path file. Lines and columns are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}: {source}")]
    Invalid { line: usize, source: Error },
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, column, message: message.into() }
}

/// Non-empty lines with comments stripped: `(line number, text, offset of
/// the first token)`.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        (!body.trim().is_empty()).then_some((i + 1, body))
    })
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((line[..s].chars().count() + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn number(line: usize, (col, tok): (usize, &str), what: &str) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| syntax(line, col, format!("expected {what}, found `{tok}`")))
}

struct Names {
    labels: Option<Vec<String>>,
    order: usize,
}

impl Names {
    fn resolve(&self, line: usize, (col, tok): (usize, &str)) -> Result<VertexId, ParseError> {
        let found = match &self.labels {
            Some(ls) => ls.iter().position(|l| l == tok),
            None => tok.parse::<usize>().ok().filter(|&i| i < self.order),
        };
        found.map(VertexId::from).ok_or_else(|| syntax(line, col, format!("unknown vertex `{tok}`")))
    }
}

/// Parse a digraph file. A `partition:` line must describe a valid split
/// partition of the parsed digraph.
pub fn parse(text: &str) -> Result<(Digraph, Option<SplitPartition>), ParseError> {
    let mut lines = content_lines(text).peekable();
    let Some((hl, header)) = lines.next() else {
        return Err(syntax(1, 1, "missing `digraph <order> <arcs>` header"));
    };
    let toks = tokens(header);
    if toks.first().map(|t| t.1) != Some("digraph") || toks.len() != 3 {
        let col = toks.first().map_or(1, |t| t.0);
        return Err(syntax(hl, col, "expected `digraph <order> <arcs>`"));
    }
    let order = number(hl, toks[1], "vertex count")?;
    let arc_count = number(hl, toks[2], "arc count")?;
    let mut names = Names { labels: None, order };
    let mut builder = DigraphBuilder::new(order);
    let mut v1_line: Option<(usize, &str, usize)> = None;
    let mut arcs_seen = 0;

    for (ln, body) in lines {
        let trimmed = body.trim_start();
        let indent = body[..body.len() - trimmed.len()].chars().count();
        if let Some(rest) = trimmed.strip_prefix("labels:") {
            if names.labels.is_some() || arcs_seen > 0 {
                return Err(syntax(ln, indent + 1, "`labels:` must appear once, before the arcs"));
            }
            let labels: Vec<String> = tokens(rest).into_iter().map(|(_, t)| t.to_string()).collect();
            builder = builder.with_labels(labels.clone()).map_err(|source| ParseError::Invalid { line: ln, source })?;
            names.labels = Some(labels);
        } else if let Some(rest) = trimmed.strip_prefix("partition:") {
            if v1_line.is_some() || arcs_seen > 0 {
                return Err(syntax(ln, indent + 1, "`partition:` must appear once, before the arcs"));
            }
            v1_line = Some((ln, rest, indent + "partition:".len()));
        } else {
            let toks = tokens(body);
            if toks.len() != 2 {
                return Err(syntax(ln, toks[0].0, "expected an arc `u v`"));
            }
            let a = names.resolve(ln, toks[0])?;
            let b = names.resolve(ln, toks[1])?;
            builder.add_arc(a, b).map_err(|source| ParseError::Invalid { line: ln, source })?;
            arcs_seen += 1;
        }
    }
    if arcs_seen != arc_count {
        return Err(syntax(hl, toks[2].0, format!("header declares {arc_count} arcs but {arcs_seen} were listed")));
    }
    let d = builder.build();
    let partition = match v1_line {
        None => None,
        Some((ln, rest, offset)) => Some(parse_partition(&d, &names, ln, rest, offset)?),
    };
    Ok((d, partition))
}

fn parse_partition(
    d: &Digraph,
    names: &Names,
    ln: usize,
    rest: &str,
    offset: usize,
) -> Result<SplitPartition, ParseError> {
    let Some((lhs, rhs)) = rest.split_once('=') else {
        return Err(syntax(ln, offset + 1, "expected `partition: v1 = a,b,c`"));
    };
    if lhs.trim() != "v1" {
        return Err(syntax(ln, offset + 1, "expected `v1 =`"));
    }
    let rhs_col = offset + lhs.chars().count() + 2;
    let mut v1 = Vec::new();
    let mut col = rhs_col;
    for piece in rhs.split(',') {
        let name = piece.trim();
        let lead = piece.chars().take_while(|c| c.is_whitespace()).count();
        if name.is_empty() {
            return Err(syntax(ln, col + lead, "empty vertex name in partition"));
        }
        v1.push(names.resolve(ln, (col + lead, name))?);
        col += piece.chars().count() + 1;
    }
    let p = SplitPartition::from_v1(d.order(), v1);
    match validate_partition(d, &p) {
        Ok(true) => Ok(p),
        Ok(false) => {
            Err(ParseError::Invalid { line: ln, source: Error::domain("not a split partition of the digraph") })
        }
        Err(source) => Err(ParseError::Invalid { line: ln, source }),
    }
}

/// Canonical text of `d`, optionally with a partition line.
pub fn serialize(d: &Digraph, partition: Option<&SplitPartition>) -> String {
    serialize_with_comments(d, partition, &[])
}

/// [`serialize`] preceded by `# ` comment lines.
pub fn serialize_with_comments(d: &Digraph, partition: Option<&SplitPartition>, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "digraph {} {}", d.order(), d.arc_count());
    if let Some(labels) = d.labels() {
        let _ = writeln!(out, "labels: {}", labels.join(" "));
    }
    if let Some(p) = partition {
        let names: Vec<String> = p.v1().iter().map(|&x| d.name(x)).collect();
        let _ = writeln!(out, "partition: v1 = {}", names.join(","));
    }
    for (a, b) in d.arcs() {
        let _ = writeln!(out, "{} {}", d.name(a), d.name(b));
    }
    out
}

/// One path per non-empty line, vertex names separated by whitespace and
/// optionally by `->`.
pub fn parse_paths(d: &Digraph, text: &str) -> Result<Vec<Path>, ParseError> {
    content_lines(text)
        .map(|(ln, body)| {
            let names = tokens(body).into_iter().filter(|(_, t)| *t != "->").map(|(_, t)| t.to_string()).collect();
            RawPath(names).resolve(d).map_err(|source| ParseError::Invalid { line: ln, source })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::fig1_counterexample;
    use crate::graph::v;

    #[test]
    fn fig1_round_trip() {
        let (d, p, _) = fig1_counterexample();
        let text = serialize(&d, Some(&p));
        assert!(text.starts_with("digraph 13 51\n"));
        let (d2, p2) = parse(&text).unwrap();
        assert_eq!(d2, d);
        assert_eq!(p2.as_ref(), Some(&p));
        assert_eq!(serialize(&d2, p2.as_ref()), text);
    }

    #[test]
    fn comments_and_indices() {
        let text = "# a triangle\ndigraph 3 3 # header\n0 1\n\n1 2\n2 0 # back\n";
        let (d, p) = parse(text).unwrap();
        assert_eq!(d.arc_count(), 3);
        assert!(p.is_none());
        assert!(d.has_arc(v(2), v(0)));
    }

    #[test]
    fn loop_is_rejected_with_line() {
        let err = parse("digraph 2 1\nlabels: a b\na a\n").unwrap_err();
        assert_eq!(err, ParseError::Invalid { line: 3, source: Error::Loop(v(0)) });
    }

    #[test]
    fn duplicate_is_rejected_with_line() {
        let err = parse("digraph 2 2\n0 1\n0 1\n").unwrap_err();
        assert!(matches!(err, ParseError::Invalid { line: 3, source: Error::DuplicateArc(_, _) }));
    }

    #[test]
    fn syntax_errors_carry_columns() {
        assert_eq!(
            parse("digraph 2 1\n0  x\n").unwrap_err(),
            ParseError::Syntax { line: 2, column: 4, message: "unknown vertex `x`".into() }
        );
        assert!(matches!(parse("graph 2 1\n").unwrap_err(), ParseError::Syntax { line: 1, column: 1, .. }));
        assert!(matches!(parse("digraph 2 2\n0 1\n").unwrap_err(), ParseError::Syntax { line: 1, column: 11, .. }));
        assert!(matches!(parse("").unwrap_err(), ParseError::Syntax { line: 1, .. }));
        assert!(matches!(parse("digraph 3 1\n0 1 2\n").unwrap_err(), ParseError::Syntax { line: 2, column: 1, .. }));
        assert!(matches!(
            parse("digraph 3 1\npartition: v1 = 0,,1\n0 1\n").unwrap_err(),
            ParseError::Syntax { line: 2, column: 19, .. }
        ));
    }

    #[test]
    fn invalid_partition() {
        // 0 -> 1 with both in V1
        let err = parse("digraph 3 1\npartition: v1 = 0,1\n0 1\n").unwrap_err();
        assert!(matches!(err, ParseError::Invalid { line: 2, .. }));
        let (_, p) = parse("digraph 3 2\npartition: v1 = 0\n1 2\n0 1\n").unwrap();
        assert_eq!(p.unwrap().v1(), &[v(0)]);
    }

    #[test]
    fn path_files() {
        let (d, _, _) = fig1_counterexample();
        let ps = parse_paths(&d, "s1 -> x1 -> y1 -> z1 -> t1\n# second\ns2 z1 y2 x3 t2\n").unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps[1].len(), 4);
        assert!(matches!(parse_paths(&d, "s1 t1 x1\n"), Err(ParseError::Invalid { line: 1, .. })));
    }

    #[test]
    fn comment_header() {
        let d = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        let text = serialize_with_comments(&d, None, &["theorem split6".into(), "seed 7".into()]);
        assert_eq!(text, "# theorem split6\n# seed 7\ndigraph 2 1\n0 1\n");
        assert_eq!(parse(&text).unwrap().0, d);
    }
}
