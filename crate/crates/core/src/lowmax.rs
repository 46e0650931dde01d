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

//! `(1 + 7ε)`-EQ1 colorings when every weight is small.
//!
//! When `max-wt(V) <= ε·w(V)/k`, the classes of any proper `κ`-coloring can
//! be cut greedily into chunks of weight close to `w(V)/k`. Keeping `k`
//! chunks and filling up the rest gives the coloring.

use num_traits::Signed;
use rayon::prelude::*;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::extend::fill_up;
use crate::graph::WeightedGraph;
use crate::num::{Rational, Scalar};
use crate::verify::{eq1_factor, is_proper};

/// One greedy chunk of an input class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitChunk {
    /// Index of the input class the chunk was cut from.
    pub source: usize,
    /// Members in the order they were added, nonincreasing by weight.
    pub vertices: Vec<usize>,
    /// The last vertex added; without it the chunk is below the lower
    /// bound.
    pub witness: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub chunks: Vec<SplitChunk>,
    /// Per input class, the vertices left over after chunking.
    pub leftover: Vec<Vec<usize>>,
}

struct Bounds<W> {
    total: W,
    lower: W,
    upper: W,
}

fn bounds<W: Scalar>(g: &WeightedGraph<W>, k: usize, eps: &W) -> Bounds<W> {
    let total = g.total_weight();
    let kw = W::from_integer(k as i64);
    let two = W::from_integer(2);
    let lower = (W::one() - two * eps.clone()) * total.clone() / kw.clone();
    let upper = (W::one() - eps.clone()) * total.clone() / kw;
    Bounds { total, lower, upper }
}

fn check_eps(eps: &Rational) -> Result<()> {
    if !eps.is_positive() || *eps > Rational::new(1.into(), 10.into()) {
        return Err(Error::precondition(format!("ε = {eps} must lie in (0, 1/10]")));
    }
    Ok(())
}

fn check_low_max<W: Scalar>(g: &WeightedGraph<W>, k: usize, eps: &W) -> Result<()> {
    if k == 0 {
        return Err(Error::precondition("k must be positive"));
    }
    let cap = eps.clone() * g.total_weight() / W::from_integer(k as i64);
    if g.max_weight() > cap {
        return Err(Error::precondition(format!(
            "max weight {} exceeds ε·w(V)/k = {}",
            g.max_weight(),
            cap
        )));
    }
    Ok(())
}

/// Cuts every class of `c` into chunks, heaviest vertices first, closing a
/// chunk as soon as it reaches `(1 − 2ε)w(V)/k`.
///
/// Checks the chunk weight window, the witness property, the per-class
/// leftover bound `w(V)/k` and that at least `k` chunks exist.
pub fn split_classes<W: Scalar>(g: &WeightedGraph<W>, c: &Coloring, k: usize, eps: &Rational) -> Result<Split> {
    check_eps(eps)?;
    let eps_w = W::from_rational(eps);
    check_low_max(g, k, &eps_w)?;
    let Bounds { total, lower, upper } = bounds(g, k, &eps_w);
    if total <= W::zero() {
        return Err(Error::precondition("total weight must be positive"));
    }

    let per_class: Vec<(Vec<SplitChunk>, Vec<usize>)> = c
        .classes()
        .par_iter()
        .enumerate()
        .map(|(i, class)| {
            let mut order = class.clone();
            order.sort_by(|&a, &b| g.by_weight_desc(a, b));
            let mut chunks = Vec::new();
            let mut current = Vec::new();
            let mut weight = W::zero();
            for v in order {
                current.push(v);
                weight += g.weight(v);
                if weight >= lower {
                    chunks.push(SplitChunk {
                        source: i,
                        witness: v,
                        vertices: std::mem::take(&mut current),
                    });
                    weight = W::zero();
                }
            }
            (chunks, current)
        })
        .collect();

    let kw = W::from_integer(k as i64);
    let mut chunks = Vec::new();
    let mut leftover = Vec::with_capacity(per_class.len());
    for (i, (cs, rest)) in per_class.into_iter().enumerate() {
        if g.weight_of(rest.iter().copied()) * kw.clone() > total {
            return Err(Error::guarantee(format!("class {i} leaves more than w(V)/k uncut")));
        }
        for ch in &cs {
            let w = g.weight_of(ch.vertices.iter().copied());
            if w < lower || w > upper {
                return Err(Error::guarantee(format!("chunk of class {i} has weight {w} outside the window")));
            }
            let mut reduced = w;
            reduced -= g.weight(ch.witness);
            if reduced > lower {
                return Err(Error::guarantee(format!("chunk of class {i} is not minimal")));
            }
        }
        chunks.extend(cs);
        leftover.push(rest);
    }
    if chunks.len() < k {
        return Err(Error::guarantee(format!("only {} chunks for k = {k}", chunks.len())));
    }
    Ok(Split { chunks, leftover })
}

/// A `(1 + 7ε)`-EQ1 `k`-coloring from a proper `κ`-coloring `initial`, for
/// `k >= max{κ/ε, 2Δ}` and `max-wt(V) <= ε·w(V)/k`. `κ` counts the
/// nonempty classes of `initial`.
pub fn low_max_wt_eq1<W: Scalar>(g: &WeightedGraph<W>, k: usize, eps: &Rational, initial: &Coloring) -> Result<Coloring> {
    check_eps(eps)?;
    let eps_w = W::from_rational(eps);
    check_low_max(g, k, &eps_w)?;
    if initial.n() != g.n() || !initial.is_total() || !is_proper(g, initial) {
        return Err(Error::precondition("initial coloring must be proper and total"));
    }
    let delta = g.max_degree();
    let kappa = initial.classes().iter().filter(|c| !c.is_empty()).count();
    let k_eps = Rational::from_integer((k as i64).into()) * eps;
    if k_eps < Rational::from_integer((kappa as i64).into()) || k < 2 * delta || k < delta + 1 {
        return Err(Error::precondition(format!(
            "k = {k} is below max{{κ/ε, 2Δ}} with κ = {kappa}, Δ = {delta}, ε = {eps}"
        )));
    }
    if g.total_weight().is_zero() {
        return fill_up(g, &Coloring::empty(g.n(), k), k);
    }

    let split = split_classes(g, initial, k, eps)?;
    let Bounds { total, lower, .. } = bounds(g, k, &eps_w);

    // Keep the k heaviest chunks, earlier chunks first on ties.
    let weights: Vec<W> = split
        .chunks
        .iter()
        .map(|ch| g.weight_of(ch.vertices.iter().copied()))
        .collect();
    let mut order: Vec<usize> = (0..split.chunks.len()).collect();
    order.sort_by(|&a, &b| weights[b].cmp(&weights[a]).then(a.cmp(&b)));
    order.truncate(k);
    order.sort_unstable();
    let kept: Vec<&SplitChunk> = order.iter().map(|&i| &split.chunks[i]).collect();
    let classes: Vec<Vec<usize>> = kept.iter().map(|ch| ch.vertices.clone()).collect();
    let base = Coloring::from_classes(g.n(), classes)?;

    let rest: Vec<usize> = base.uncovered();
    let rest_weight = g.weight_of(rest.iter().copied());
    let two_eps_total = W::from_integer(2) * eps_w.clone() * total.clone();
    if rest_weight > two_eps_total {
        return Err(Error::guarantee("weight outside the kept chunks exceeds 2ε·w(V)"));
    }
    let rest_max = g.heaviest(&rest).map_or_else(W::zero, |v| g.weight(v).clone());
    let out = fill_up(g, &base, k)?;

    // w(D*_i \ v̄) <= (1−2ε)W/k + w(V \ V'')/(k−Δ) + max-wt(V \ V'')
    //            <= (1−2ε)W/k + 2εW/(k−Δ) + εW/k <= (1+7ε)·w(D_j).
    let kw = W::from_integer(k as i64);
    let slack = W::from_integer((k - delta) as i64);
    let first = lower.clone() + rest_weight / slack.clone() + rest_max;
    let second = lower.clone() + two_eps_total / slack + eps_w.clone() * total / kw;
    let factor = W::one() + W::from_integer(7) * eps_w;
    let floor = factor.clone() * lower;
    if second > floor {
        return Err(Error::guarantee("bound chain fails at its last step"));
    }
    let final_weights = out.class_weights(g);
    for (i, ch) in kept.iter().enumerate() {
        let mut reduced = final_weights[i].clone();
        reduced -= g.weight(ch.witness);
        if reduced > first || first > second {
            return Err(Error::guarantee(format!("bound chain fails for class {i}")));
        }
        if let Some(j) = (0..k).find(|&j| reduced > factor.clone() * final_weights[j].clone()) {
            return Err(Error::guarantee(format!("classes ({i}, {j}) break (1 + 7ε)-EQ1")));
        }
    }
    if !eq1_factor(g, &out).factor.is_at_most(&factor) {
        return Err(Error::guarantee("EQ1 factor exceeds 1 + 7ε"));
    }
    Ok(out)
}

/// [`low_max_wt_eq1`] started from [`greedy_coloring`]; needs
/// `k >= (Δ + 1)/ε`.
pub fn low_max_wt_eq1_greedy<W: Scalar>(g: &WeightedGraph<W>, k: usize, eps: &Rational) -> Result<Coloring> {
    low_max_wt_eq1(g, k, eps, &greedy_coloring(g))
}

/// Proper coloring with at most `Δ + 1` classes: each vertex in index
/// order takes the smallest color unused by its earlier neighbors.
pub fn greedy_coloring<W: Scalar>(g: &WeightedGraph<W>) -> Coloring {
    let n = g.n();
    let mut assignment: Vec<Option<usize>> = vec![None; n];
    let mut used = 0usize;
    let mut taken = vec![usize::MAX; g.max_degree() + 2];
    for v in 0..n {
        for &u in g.neighbors(v) {
            if let Some(c) = assignment[u] {
                taken[c] = v;
            }
        }
        let c = (0..).find(|&c| taken[c] != v).unwrap();
        assignment[v] = Some(c);
        used = used.max(c + 1);
    }
    Coloring::from_assignment(used, &assignment).expect("greedy colors are in range")
}
