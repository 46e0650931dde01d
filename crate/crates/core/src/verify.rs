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

//! Exact checks of properness, EQ1/EQX factors and partition equitability.
//!
//! Pairs `(i, j)` range over distinct classes with `C_i` nonempty. A pair
//! whose residual `w(C_i \ {v})` is zero is always satisfied, including
//! against an empty `C_j`; a positive residual against a weightless `C_j`
//! makes the factor infinite.

use std::fmt;

use crate::coloring::{Coloring, VertexPartition};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::num::{Rational, Scalar};

/// A nonnegative approximation factor, possibly infinite.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor<W> {
    Finite(W),
    Infinite,
}

impl<W: Scalar> Factor<W> {
    pub fn is_at_most(&self, bound: &W) -> bool {
        match self {
            Factor::Finite(f) => f <= bound,
            Factor::Infinite => false,
        }
    }

    pub fn finite(&self) -> Option<&W> {
        match self {
            Factor::Finite(f) => Some(f),
            Factor::Infinite => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Factor::Finite(f) => f.to_f64(),
            Factor::Infinite => f64::INFINITY,
        }
    }
}

impl<W: Scalar> fmt::Display for Factor<W> {
    /// Exact text: `p/q`, a surd `p/q + r/s√2`, or `inf`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Finite(x) => write!(f, "{}", x.to_exact_string()),
            Factor::Infinite => write!(f, "inf"),
        }
    }
}

/// The least α for which a coloring is α-EQ1, with the pair attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eq1Report<W> {
    pub factor: Factor<W>,
    /// `(i, j)` attaining the factor; `None` when the factor is zero.
    pub worst_pair: Option<(usize, usize)>,
    /// The vertex removed from `C_i` for the worst pair.
    pub removed_vertex: Option<usize>,
}

pub fn is_proper<W: Scalar>(g: &WeightedGraph<W>, c: &Coloring) -> bool {
    first_conflict(g, c).is_none()
}

/// Lowest edge `(u, v)`, `u < v`, with both endpoints in the same class.
pub fn first_conflict<W: Scalar>(g: &WeightedGraph<W>, c: &Coloring) -> Option<(usize, usize)> {
    g.edges()
        .find(|&(u, v)| c.color_of(u).is_some() && c.color_of(u) == c.color_of(v))
}

/// Per-class residual after removing the vertex chosen by `pick`.
fn residuals<W: Scalar>(
    g: &WeightedGraph<W>,
    c: &Coloring,
    pick: impl Fn(&[usize]) -> Option<usize>,
) -> Vec<Option<(W, usize)>> {
    c.classes()
        .iter()
        .map(|class| {
            pick(class).map(|v| {
                let mut r = g.weight_of(class.iter().copied());
                r -= g.weight(v);
                (r, v)
            })
        })
        .collect()
}

/// Maximizes `res_i / w_j` over pairs, lowest `(i, j)` among ties.
fn worst_ratio<W: Scalar>(res: &[Option<(W, usize)>], weights: &[W]) -> Eq1Report<W> {
    let k = weights.len();
    // Two lightest classes, lowest index first among ties, so that every i
    // finds its lightest partner j != i in constant time.
    let mut light: Vec<usize> = (0..k).collect();
    light.sort_by(|&a, &b| weights[a].cmp(&weights[b]).then(a.cmp(&b)));
    let mut best = Eq1Report {
        factor: Factor::Finite(W::zero()),
        worst_pair: None,
        removed_vertex: None,
    };
    for (i, entry) in res.iter().enumerate() {
        let Some((r, v)) = entry else { continue };
        if r.is_zero() {
            continue;
        }
        let Some(&j) = light.iter().take(2).find(|&&j| j != i) else {
            continue;
        };
        let f = if weights[j].is_zero() {
            Factor::Infinite
        } else {
            Factor::Finite(r.clone() / weights[j].clone())
        };
        if f > best.factor {
            best = Eq1Report {
                factor: f,
                worst_pair: Some((i, j)),
                removed_vertex: Some(*v),
            };
        }
    }
    best
}

/// Least α such that the coloring is α-EQ1. The heaviest vertex of `C_i`
/// is removed, which is optimal.
pub fn eq1_factor<W: Scalar>(g: &WeightedGraph<W>, c: &Coloring) -> Eq1Report<W> {
    let res = residuals(g, c, |class| g.heaviest(class));
    worst_ratio(&res, &c.class_weights(g))
}

/// Least α such that removing *any* vertex of `C_i` leaves at most
/// `α·w(C_j)`; the lightest vertex is the binding one.
pub fn eqx_factor<W: Scalar>(g: &WeightedGraph<W>, c: &Coloring) -> Factor<W> {
    let res = residuals(g, c, |class| g.lightest(class));
    worst_ratio(&res, &c.class_weights(g)).factor
}

/// Whether `w(C_i) − max-wt(C_i) <= α·w(C_j)` for every pair, without
/// dividing.
pub fn is_alpha_eq1<W: Scalar>(g: &WeightedGraph<W>, c: &Coloring, alpha: &W) -> bool {
    let weights = c.class_weights(g);
    let Some(min_w) = weights.iter().min() else {
        return true;
    };
    let lightest = weights.iter().position(|w| w == min_w).unwrap();
    let second = weights
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != lightest)
        .map(|(_, w)| w)
        .min();
    residuals(g, c, |class| g.heaviest(class))
        .into_iter()
        .enumerate()
        .all(|(i, entry)| {
            let Some((r, _)) = entry else { return true };
            let partner = if i == lightest { second } else { Some(min_w) };
            match partner {
                None => true,
                Some(wj) => r <= alpha.clone() * wj.clone(),
            }
        })
}

/// Whether every `|C_i ∩ V_j|` is `⌊|V_j|/k⌋` or `⌈|V_j|/k⌉` and the
/// coloring covers exactly the partition's vertices.
pub fn check_partition_equitable(c: &Coloring, p: &VertexPartition, k: usize) -> bool {
    if c.k() != k || k == 0 {
        return false;
    }
    let covered = p.covered();
    if covered.iter().any(|&v| v >= c.n()) || c.covered() != covered {
        return false;
    }
    p.parts().iter().all(|part| {
        let lo = part.len() / k;
        let hi = part.len().div_ceil(k);
        let mut counts = vec![0usize; k];
        for &v in part {
            counts[c.color_of(v).unwrap()] += 1;
        }
        counts.iter().all(|&x| x == lo || x == hi)
    })
}

/// `η = max_t |V_1 ∪ ... ∪ V_t| / |V_t|` for size-sorted nonempty parts.
pub fn compute_eta(p: &VertexPartition) -> Result<Rational> {
    if p.d() == 0 {
        return Err(Error::InvalidPartition("no parts".into()));
    }
    if p.parts().iter().any(Vec::is_empty) {
        return Err(Error::InvalidPartition("empty part".into()));
    }
    if !p.is_size_sorted() {
        return Err(Error::InvalidPartition("parts are not sorted by nondecreasing size".into()));
    }
    let mut prefix = 0i64;
    let mut eta = Rational::from_integer(0.into());
    for size in p.sizes() {
        prefix += size as i64;
        eta = eta.max(crate::num::ratio(prefix, size as i64));
    }
    Ok(eta)
}
