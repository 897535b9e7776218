//! Plain-text instance files.
//!
//! ```text
//! # comment
//! digraph 3 2
//! 0 1
//! 1 2
//! ```
//!
//! The header is `digraph n m`, `ugraph n m` or `matrix r c`, followed by `m`
//! edge lines `tail head` or `r` rows of `c` integers.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::digraph::{DiGraph, UGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Digraph(DiGraph),
    Ugraph(UGraph),
    Matrix { cols: usize, rows: Vec<Vec<i64>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("line {line}, column {col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("line {line}, column {col}: vertex {vertex} out of range for {n} vertices")]
    Range {
        line: usize,
        col: usize,
        vertex: usize,
        n: usize,
    },
}

struct Token<'a> {
    line: usize,
    col: usize,
    text: &'a str,
}

fn tokenize(text: &str) -> Vec<Vec<Token<'_>>> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut toks = Vec::new();
        let mut offset = 0;
        for piece in content.split_whitespace() {
            let start = content[offset..].find(piece).expect("piece occurs") + offset;
            offset = start + piece.len();
            toks.push(Token {
                line: i + 1,
                col: start + 1,
                text: piece,
            });
        }
        if !toks.is_empty() {
            lines.push(toks);
        }
    }
    lines
}

fn parse_err(line: usize, col: usize, message: impl Into<String>) -> InstanceError {
    InstanceError::Parse {
        line,
        col,
        message: message.into(),
    }
}

fn number<T: std::str::FromStr>(t: &Token<'_>, what: &str) -> Result<T, InstanceError> {
    t.text
        .parse()
        .map_err(|_| parse_err(t.line, t.col, format!("expected {what}, found `{}`", t.text)))
}

fn expect_len(toks: &[Token<'_>], n: usize, what: &str) -> Result<(), InstanceError> {
    if toks.len() == n {
        return Ok(());
    }
    let t = toks.get(n).unwrap_or(&toks[toks.len() - 1]);
    let col = if toks.len() > n { t.col } else { t.col + t.text.len() };
    Err(parse_err(
        t.line,
        col,
        format!("expected {n} fields in {what}, found {}", toks.len()),
    ))
}

pub fn parse_instance(text: &str) -> Result<Instance, InstanceError> {
    let lines = tokenize(text);
    let Some((header, body)) = lines.split_first() else {
        return Err(parse_err(1, 1, "empty instance"));
    };
    expect_len(header, 3, "the header")?;
    let kind = header[0].text;
    let a: usize = number(&header[1], "a count")?;
    let b: usize = number(&header[2], "a count")?;
    let (expected_lines, what) = match kind {
        "digraph" | "ugraph" => (b, "edge lines"),
        "matrix" => (a, "matrix rows"),
        other => {
            return Err(parse_err(
                header[0].line,
                header[0].col,
                format!("unknown instance kind `{other}`"),
            ))
        }
    };
    if body.len() != expected_lines {
        let (line, col) = body
            .get(expected_lines)
            .map(|l| (l[0].line, l[0].col))
            .unwrap_or((header[0].line, header[2].col));
        return Err(parse_err(
            line,
            col,
            format!("expected {expected_lines} {what}, found {}", body.len()),
        ));
    }
    match kind {
        "matrix" => {
            let mut rows = Vec::with_capacity(a);
            for toks in body {
                expect_len(toks, b, "a matrix row")?;
                rows.push(
                    toks.iter()
                        .map(|t| number::<i64>(t, "an integer"))
                        .collect::<Result<Vec<_>, _>>()?,
                );
            }
            Ok(Instance::Matrix { cols: b, rows })
        }
        _ => {
            let n = a;
            if n == 0 || n > 64 {
                return Err(parse_err(header[1].line, header[1].col, "vertex count must be 1..=64"));
            }
            if b > 64 {
                return Err(parse_err(header[2].line, header[2].col, "edge count must be at most 64"));
            }
            let mut edges = Vec::with_capacity(b);
            for toks in body {
                expect_len(toks, 2, "an edge line")?;
                let mut pair = [0usize; 2];
                for (slot, t) in pair.iter_mut().zip(toks) {
                    let v: usize = number(t, "a vertex index")?;
                    if v >= n {
                        return Err(InstanceError::Range {
                            line: t.line,
                            col: t.col,
                            vertex: v,
                            n,
                        });
                    }
                    *slot = v;
                }
                edges.push((pair[0], pair[1]));
            }
            if kind == "digraph" {
                Ok(Instance::Digraph(DiGraph::new(n, edges).expect("validated above")))
            } else {
                Ok(Instance::Ugraph(UGraph::new(n, edges).expect("validated above")))
            }
        }
    }
}

/// Canonical text: header, one record per line, no comments, trailing newline.
pub fn render_instance(instance: &Instance) -> String {
    let mut out = String::new();
    match instance {
        Instance::Digraph(g) => {
            writeln!(out, "digraph {} {}", g.n(), g.m()).unwrap();
            for &(t, h) in g.edges() {
                writeln!(out, "{t} {h}").unwrap();
            }
        }
        Instance::Ugraph(u) => {
            writeln!(out, "ugraph {} {}", u.n(), u.m()).unwrap();
            for &(a, b) in u.edges() {
                writeln!(out, "{a} {b}").unwrap();
            }
        }
        Instance::Matrix { cols, rows } => {
            writeln!(out, "matrix {} {}", rows.len(), cols).unwrap();
            for r in rows {
                let cells: Vec<String> = r.iter().map(i64::to_string).collect();
                writeln!(out, "{}", cells.join(" ")).unwrap();
            }
        }
    }
    out
}

/// Hex SHA-256 of the canonical text.
pub fn instance_digest(instance: &Instance) -> String {
    hex::encode(Sha256::digest(render_instance(instance).as_bytes()))
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Digraph(_) => "digraph",
            Instance::Ugraph(_) => "ugraph",
            Instance::Matrix { .. } => "matrix",
        }
    }
}
