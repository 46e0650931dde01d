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

//! Extending partial colorings: one new vertex per class, and filling up
//! all uncolored vertices in weight-sorted chunks.

use crate::coloring::{Coloring, PartialColoring};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::num::Scalar;

/// Finds an injective assignment of `new` vertices to `classes` such that
/// no vertex lands next to a neighbor. Classes earlier in `classes` are
/// preferred.
///
/// Returns `(vertex, class)` pairs in the order of `new`.
pub fn match_into_classes<W: Scalar>(
    g: &WeightedGraph<W>,
    c: &PartialColoring,
    new: &[usize],
    classes: &[usize],
) -> Result<Vec<(usize, usize)>> {
    let k = c.k();
    // Candidate classes per new vertex, in preference order.
    let candidates: Vec<Vec<usize>> = new
        .iter()
        .map(|&v| {
            let mut blocked: Vec<usize> = g.neighbors(v).iter().filter_map(|&u| c.color_of(u)).collect();
            blocked.sort_unstable();
            classes
                .iter()
                .copied()
                .filter(|i| blocked.binary_search(i).is_err())
                .collect()
        })
        .collect();

    let mut owner: Vec<Option<usize>> = vec![None; k];
    let mut matched: Vec<Option<usize>> = vec![None; new.len()];
    let mut unmatched = 0;
    for a in 0..new.len() {
        // Direct placement first; only search for an augmenting path if
        // every candidate class is already taken.
        if let Some(&i) = candidates[a].iter().find(|&&i| owner[i].is_none()) {
            owner[i] = Some(a);
            matched[a] = Some(i);
            continue;
        }
        let mut seen = vec![false; k];
        if !augment(a, &candidates, &mut owner, &mut matched, &mut seen) {
            unmatched += 1;
        }
    }
    if unmatched > 0 {
        return Err(Error::MatchingInfeasible {
            unmatched,
            total: new.len(),
        });
    }
    Ok(new
        .iter()
        .zip(matched)
        .map(|(&v, i)| (v, i.expect("all matched")))
        .collect())
}

fn augment(
    a: usize,
    candidates: &[Vec<usize>],
    owner: &mut [Option<usize>],
    matched: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &i in &candidates[a] {
        if seen[i] {
            continue;
        }
        seen[i] = true;
        let free = match owner[i] {
            None => true,
            Some(b) => augment(b, candidates, owner, matched, seen),
        };
        if free {
            owner[i] = Some(a);
            matched[a] = Some(i);
            return true;
        }
    }
    false
}

/// Classes ordered by current weight, lightest first, ties by index.
fn lightest_first<W: Scalar>(g: &WeightedGraph<W>, c: &PartialColoring) -> Vec<usize> {
    let weights = c.class_weights(g);
    let mut order: Vec<usize> = (0..c.k()).collect();
    order.sort_by(|&a, &b| weights[a].cmp(&weights[b]).then(a.cmp(&b)));
    order
}

fn check_degree<W: Scalar>(g: &WeightedGraph<W>, k: usize) -> Result<usize> {
    let delta = g.max_degree();
    if k < delta + 1 {
        return Err(Error::precondition(format!("k = {k} is below Δ + 1 = {}", delta + 1)));
    }
    Ok(delta)
}

/// Adds each vertex of `new` to a distinct class of `c`, keeping the
/// coloring proper. Lighter classes are preferred.
pub fn extend_one_per_class<W: Scalar>(
    g: &WeightedGraph<W>,
    c: &PartialColoring,
    new: &[usize],
    k: usize,
) -> Result<Coloring> {
    let delta = check_degree(g, k)?;
    if c.k() != k {
        return Err(Error::precondition(format!("coloring has {} classes, expected {k}", c.k())));
    }
    if new.len() > k - delta {
        return Err(Error::precondition(format!(
            "{} new vertices exceed k − Δ = {}",
            new.len(),
            k - delta
        )));
    }
    if let Some(&v) = new.iter().find(|&&v| c.is_covered(v)) {
        return Err(Error::precondition(format!("vertex {v} is already colored")));
    }
    let pairs = match_into_classes(g, c, new, &lightest_first(g, c))?;
    let mut out = c.clone();
    for (v, i) in pairs {
        out.assign(v, i);
    }
    Ok(out)
}

/// Colors every uncolored vertex, processing them by nonincreasing weight
/// in chunks of `k − Δ`, one vertex of each chunk per class.
///
/// For every class the added set `A_i` satisfies
/// `w(A_i) − max-wt(A_i) <= w(uncolored) / (k − Δ)`; this is checked.
pub fn fill_up<W: Scalar>(g: &WeightedGraph<W>, c: &PartialColoring, k: usize) -> Result<Coloring> {
    let delta = check_degree(g, k)?;
    if c.k() != k {
        return Err(Error::precondition(format!("coloring has {} classes, expected {k}", c.k())));
    }
    let mut uncolored = c.uncovered();
    if uncolored.is_empty() {
        return Ok(c.clone());
    }
    uncolored.sort_by(|&a, &b| g.by_weight_desc(a, b));
    let leftover = g.weight_of(uncolored.iter().copied());

    let mut out = c.clone();
    // A short last chunk stands for a full chunk padded with isolated
    // zero-weight dummies, which never need a class.
    for chunk in uncolored.chunks(k - delta) {
        let pairs = match_into_classes(g, &out, chunk, &lightest_first(g, &out))?;
        for (v, i) in pairs {
            out.assign(v, i);
        }
    }

    let slots = W::from_integer((k - delta) as i64);
    for i in 0..k {
        let added: Vec<usize> = out.class(i).iter().copied().filter(|&v| !c.is_covered(v)).collect();
        if let Some(top) = g.heaviest(&added) {
            let mut rest = g.weight_of(added.iter().copied());
            rest -= g.weight(top);
            if rest * slots.clone() > leftover {
                return Err(Error::guarantee(format!("fill-up load bound fails on class {i}")));
            }
        }
    }
    Ok(out)
}
