// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Line-oriented text formats for graphs, partitions and colorings.
//!
//! Graph files start with `p wgraph <n> <m>`, followed by one
//! `v <index> <weight>` line per vertex and one `e <u> <v>` line per edge.
//! Weights are `p/q` in lowest terms, or `p/q + r/sr2` for `p/q + (r/s)√2`.
//! Partition files hold `part <size> <v>...` lines; coloring files hold
//! `k <k>` followed by one `c <color> <v>...` line per color. Blank lines and
//! lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::coloring::{Coloring, VertexPartition};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::num::{QuadSurd, Rational, Scalar};

/// A parsed graph in the narrowest weight type that represents it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyGraph {
    Rational(WeightedGraph<Rational>),
    Surd(WeightedGraph<QuadSurd>),
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Data lines with 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        (!l.is_empty() && !l.starts_with('#')).then(|| (i + 1, l.split_whitespace().collect()))
    })
}

fn number(line: usize, tok: Option<&&str>, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| err(line, format!("bad {what} `{tok}`")))
}

fn weight_text<W: Scalar>(w: &W) -> String {
    w.to_exact_string().replace("√2", "r2")
}

pub fn format_graph<W: Scalar>(g: &WeightedGraph<W>) -> String {
    let mut out = String::new();
    writeln!(out, "p wgraph {} {}", g.n(), g.edge_count()).unwrap();
    for v in 0..g.n() {
        writeln!(out, "v {v} {}", weight_text(g.weight(v))).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

/// Parses a graph with `Q(√2)` weights.
pub fn parse_surd_graph(text: &str) -> Result<WeightedGraph<QuadSurd>> {
    let mut header: Option<(usize, usize)> = None;
    let mut weights: Vec<Option<QuadSurd>> = Vec::new();
    let mut edges = Vec::new();
    for (ln, toks) in lines(text) {
        match toks[0] {
            "p" => {
                if header.is_some() {
                    return Err(err(ln, "duplicate header"));
                }
                if toks.get(1) != Some(&"wgraph") {
                    return Err(err(ln, "expected `p wgraph <n> <m>`"));
                }
                let n = number(ln, toks.get(2), "vertex count")?;
                let m = number(ln, toks.get(3), "edge count")?;
                header = Some((n, m));
                weights = vec![None; n];
            }
            "v" => {
                let (n, _) = header.ok_or_else(|| err(ln, "weight before header"))?;
                let v = number(ln, toks.get(1), "vertex index")?;
                if v >= n {
                    return Err(err(ln, format!("vertex {v} out of range")));
                }
                if weights[v].is_some() {
                    return Err(err(ln, format!("vertex {v} has two weights")));
                }
                let text = toks[2..].join(" ");
                let w = QuadSurd::parse(&text).map_err(|_| err(ln, format!("bad weight `{text}`")))?;
                if w.is_negative() {
                    return Err(err(ln, format!("negative weight `{text}`")));
                }
                weights[v] = Some(w);
            }
            "e" => {
                if header.is_none() {
                    return Err(err(ln, "edge before header"));
                }
                let u = number(ln, toks.get(1), "edge endpoint")?;
                let v = number(ln, toks.get(2), "edge endpoint")?;
                edges.push((u, v));
            }
            other => return Err(err(ln, format!("unknown record `{other}`"))),
        }
    }
    let (_, m) = header.ok_or_else(|| err(0, "missing header"))?;
    if edges.len() != m {
        return Err(err(0, format!("header promises {m} edges, found {}", edges.len())));
    }
    let weights: Vec<QuadSurd> = weights
        .into_iter()
        .enumerate()
        .map(|(v, w)| w.ok_or_else(|| err(0, format!("vertex {v} has no weight"))))
        .collect::<Result<_>>()?;
    WeightedGraph::new(weights, &edges).map_err(|e| match e {
        Error::InvalidGraph(msg) => err(0, msg),
        other => other,
    })
}

/// Parses a graph, keeping rational weights rational.
pub fn parse_any_graph(text: &str) -> Result<AnyGraph> {
    let g = parse_surd_graph(text)?;
    if g.weights().iter().all(QuadSurd::is_rational) {
        Ok(AnyGraph::Rational(g.map_weights(|w| w.rational_part().clone())))
    } else {
        Ok(AnyGraph::Surd(g))
    }
}

/// Parses a graph whose weights must all be rational.
pub fn parse_graph(text: &str) -> Result<WeightedGraph<Rational>> {
    match parse_any_graph(text)? {
        AnyGraph::Rational(g) => Ok(g),
        AnyGraph::Surd(_) => Err(err(0, "irrational weight where a rational was required")),
    }
}

pub fn format_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    writeln!(out, "k {}", c.k()).unwrap();
    for (i, class) in c.classes().iter().enumerate() {
        write!(out, "c {i}").unwrap();
        for v in class {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Parses a coloring over the vertex universe `0..n`.
pub fn parse_coloring(text: &str, n: usize) -> Result<Coloring> {
    let mut k: Option<usize> = None;
    let mut classes: Vec<Option<Vec<usize>>> = Vec::new();
    for (ln, toks) in lines(text) {
        match toks[0] {
            "k" => {
                if k.is_some() {
                    return Err(err(ln, "duplicate `k` line"));
                }
                let kk = number(ln, toks.get(1), "color count")?;
                k = Some(kk);
                classes = vec![None; kk];
            }
            "c" => {
                let kk = k.ok_or_else(|| err(ln, "class before `k` line"))?;
                let i = number(ln, toks.get(1), "color")?;
                if i >= kk {
                    return Err(err(ln, format!("color {i} out of range for k = {kk}")));
                }
                if classes[i].is_some() {
                    return Err(err(ln, format!("color {i} listed twice")));
                }
                let members = toks[2..]
                    .iter()
                    .map(|t| t.parse::<usize>().map_err(|_| err(ln, format!("bad vertex `{t}`"))))
                    .collect::<Result<Vec<_>>>()?;
                if let Some(&v) = members.iter().find(|&&v| v >= n) {
                    return Err(err(ln, format!("vertex {v} out of range for n = {n}")));
                }
                classes[i] = Some(members);
            }
            other => return Err(err(ln, format!("unknown record `{other}`"))),
        }
    }
    k.ok_or_else(|| err(0, "missing `k` line"))?;
    let classes = classes.into_iter().map(Option::unwrap_or_default).collect();
    Coloring::from_classes(n, classes).map_err(|e| match e {
        Error::InvalidColoring(msg) => err(0, msg),
        other => other,
    })
}

pub fn format_partition(p: &VertexPartition) -> String {
    let mut out = String::new();
    for part in p.parts() {
        write!(out, "part {}", part.len()).unwrap();
        for v in part {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Parses a partition whose vertices lie in `0..n`.
pub fn parse_partition(text: &str, n: usize) -> Result<VertexPartition> {
    let mut parts = Vec::new();
    for (ln, toks) in lines(text) {
        if toks[0] != "part" {
            return Err(err(ln, format!("unknown record `{}`", toks[0])));
        }
        let size = number(ln, toks.get(1), "part size")?;
        let members = toks[2..]
            .iter()
            .map(|t| t.parse::<usize>().map_err(|_| err(ln, format!("bad vertex `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        if members.len() != size {
            return Err(err(ln, format!("part declares {size} vertices, lists {}", members.len())));
        }
        if let Some(&v) = members.iter().find(|&&v| v >= n) {
            return Err(err(ln, format!("vertex {v} out of range for n = {n}")));
        }
        parts.push(members);
    }
    VertexPartition::new(parts).map_err(|e| match e {
        Error::InvalidPartition(msg) => err(0, msg),
        other => other,
    })
}
