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

//! 2-EQ1 colorings by envy swaps.
//!
//! Starting from `k` empty classes, repeatedly find an independent set of
//! uncolored vertices heavier than the lightest class, shrink it to a
//! minimally envied set, and swap it in for that class. When no such set
//! remains, every uncolored vertex goes to a neighbor-free class. Each
//! envy test is an exact maximum-weight independent set search, so this is
//! meant for small graphs.

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::instances::{oracle_max_weight_independent_set, DEFAULT_BUDGET};
use crate::num::Scalar;

/// Swap-phase state: classes, uncolored vertices and cached class weights.
#[derive(Clone, Debug)]
pub struct EnvyState<W> {
    pub classes: Coloring,
    pub uncolored: Vec<usize>,
    pub class_weights: Vec<W>,
    /// Per class, the vertex `v̄` whose removal left the class no heavier
    /// than every other class at the time it was swapped in.
    pub witnesses: Vec<Option<usize>>,
    pub swaps: usize,
}

/// Output of [`two_eq1_run`].
#[derive(Clone, Debug)]
pub struct TwoEq1Run<W> {
    pub coloring: Coloring,
    /// Classes as they stood when the swap phase ended.
    pub swap_phase: Coloring,
    pub witnesses: Vec<Option<usize>>,
    pub swaps: usize,
    pub total_weight: W,
}

/// An independent `X ⊆ U` with `w(X) > threshold`, if one exists.
pub fn find_envied_independent_set<W: Scalar>(
    g: &WeightedGraph<W>,
    u: &[usize],
    threshold: &W,
    budget: u64,
) -> Result<Option<Vec<usize>>> {
    if u.is_empty() {
        return Ok(None);
    }
    let (set, weight) = oracle_max_weight_independent_set(g, u, budget)?;
    Ok((weight > *threshold).then_some(set))
}

/// Shrinks an envied set to `S ⊆ X` with `w(S) > threshold` and
/// `w(S) − min-wt(S) <= threshold` by dropping lightest vertices.
pub fn minimize_envied_set<W: Scalar>(g: &WeightedGraph<W>, x: &[usize], threshold: &W) -> Vec<usize> {
    let mut s = x.to_vec();
    let mut total = g.weight_of(s.iter().copied());
    assert!(total > *threshold, "set is not envied");
    loop {
        let light = g.lightest(&s).expect("an envied set is nonempty");
        let mut rest = total.clone();
        rest -= g.weight(light);
        if rest <= *threshold {
            s.sort_unstable();
            return s;
        }
        s.retain(|&v| v != light);
        total = rest;
    }
}

impl<W: Scalar> EnvyState<W> {
    fn new(n: usize, k: usize) -> Self {
        EnvyState {
            classes: Coloring::empty(n, k),
            uncolored: (0..n).collect(),
            class_weights: vec![W::zero(); k],
            witnesses: vec![None; k],
            swaps: 0,
        }
    }

    /// Lightest class, lowest index among ties.
    fn lightest_class(&self) -> usize {
        (0..self.class_weights.len())
            .min_by(|&a, &b| self.class_weights[a].cmp(&self.class_weights[b]).then(a.cmp(&b)))
            .expect("k >= 1")
    }

    fn total(&self) -> W {
        let mut t = W::zero();
        for w in &self.class_weights {
            t += w;
        }
        t
    }

    /// One swap; false when nothing uncolored is envied.
    fn step(&mut self, g: &WeightedGraph<W>, budget: u64) -> Result<bool> {
        let j = self.lightest_class();
        let threshold = self.class_weights[j].clone();
        let Some(x) = find_envied_independent_set(g, &self.uncolored, &threshold, budget)? else {
            return Ok(false);
        };
        let s = minimize_envied_set(g, &x, &threshold);
        let before = self.total();

        let old: Vec<usize> = self.classes.class(j).to_vec();
        for &v in &old {
            self.classes.unassign(v);
        }
        for &v in &s {
            self.classes.assign(v, j);
        }
        self.uncolored.retain(|v| s.binary_search(v).is_err());
        self.uncolored.extend(old);
        self.uncolored.sort_unstable();
        self.class_weights[j] = g.weight_of(s.iter().copied());
        self.witnesses[j] = g.lightest(&s);
        self.swaps += 1;

        if self.total() <= before {
            return Err(Error::guarantee("total colored weight did not increase after a swap"));
        }
        Ok(true)
    }
}

/// Runs both phases and checks `w(C*_i \ {v̄}) <= 2·w(C*_j)` for every pair.
pub fn two_eq1_run<W: Scalar>(g: &WeightedGraph<W>, k: usize, budget: u64) -> Result<TwoEq1Run<W>> {
    let delta = g.max_degree();
    if k < delta + 1 {
        return Err(Error::precondition(format!("k = {k} is below Δ + 1 = {}", delta + 1)));
    }
    let mut state = EnvyState::new(g.n(), k);
    while state.step(g, budget)? {}
    let swap_phase = state.classes.clone();

    let mut c = state.classes.clone();
    let mut weights = state.class_weights.clone();
    for &v in &state.uncolored {
        let target = (0..k)
            .filter(|&i| c.fits(g, v, i))
            .min_by(|&a, &b| weights[a].cmp(&weights[b]).then(a.cmp(&b)))
            .ok_or_else(|| Error::guarantee(format!("vertex {v} has no neighbor-free class")))?;
        c.assign(v, target);
        weights[target] += g.weight(v);
    }

    let two = W::from_integer(2);
    for i in 0..k {
        let mut reduced = weights[i].clone();
        if let Some(v) = state.witnesses[i] {
            reduced -= g.weight(v);
        }
        for j in (0..k).filter(|&j| j != i) {
            if reduced > two.clone() * weights[j].clone() {
                return Err(Error::guarantee(format!("2-EQ1 chain fails for classes ({i}, {j})")));
            }
        }
    }
    Ok(TwoEq1Run {
        coloring: c,
        swap_phase,
        witnesses: state.witnesses,
        swaps: state.swaps,
        total_weight: g.total_weight(),
    })
}

/// A proper 2-EQ1 `k`-coloring for any `k >= Δ + 1`.
pub fn two_eq1_coloring<W: Scalar>(g: &WeightedGraph<W>, k: usize) -> Result<Coloring> {
    two_eq1_run(g, k, DEFAULT_BUDGET).map(|r| r.coloring)
}
