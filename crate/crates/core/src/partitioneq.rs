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

//! Colorings that are equitable on every part of a vertex partition.
//!
//! Parts `V_1, ..., V_d` (sorted by size) are added one at a time. A small
//! part (`|V_t| <= k/2`) is matched into the `|V_t| + Δ` smallest classes,
//! at most one vertex per class. A large part is placed greedily and then
//! rebalanced by relaying vertices of `V_t` along shortest paths of the
//! move graph, which strictly lowers `Σ_i |C_i ∩ V_t|²`. Vertices of earlier
//! parts never move.

use std::collections::{BTreeSet, VecDeque};

use crate::coloring::{Coloring, VertexPartition};
use crate::error::{Error, Result};
use crate::extend::match_into_classes;
use crate::graph::WeightedGraph;
use crate::num::{int, Rational, Scalar};
use crate::verify::{check_partition_equitable, compute_eta};

/// How one part was added.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartRoute {
    /// One vertex into each of `|V_t|` empty classes.
    EmptyClasses,
    /// Matched into the `|V_t| + Δ` smallest classes.
    SmallPart,
    /// Greedy placement followed by path augmentation.
    Augmented,
}

/// Output of [`partition_equitable_run`].
#[derive(Clone, Debug)]
pub struct PartitionRun {
    pub coloring: Coloring,
    pub routes: Vec<PartRoute>,
    /// Augmentations performed per part.
    pub augmentations: Vec<usize>,
    /// Maximum degree of the graph induced by the covered vertices.
    pub delta: usize,
    pub eta: Rational,
}

impl PartitionRun {
    pub fn total_augmentations(&self) -> usize {
        self.augmentations.iter().sum()
    }
}

/// Classes of the colored neighbors of `v`, sorted and deduplicated.
fn blocked<W: Scalar>(g: &WeightedGraph<W>, c: &Coloring, v: usize) -> Vec<usize> {
    let mut b: Vec<usize> = g.neighbors(v).iter().filter_map(|&u| c.color_of(u)).collect();
    b.sort_unstable();
    b.dedup();
    b
}

/// The move graph `H` on classes for the current part: `i → j` iff some
/// vertex of `C_i ∩ V_t` has no neighbor in `C_j`.
///
/// Edges are not stored. Per class we keep its members in `V_t` and the
/// classes blocked for *all* of them (at most `Δ`); every other class is
/// an out-neighbor.
#[derive(Clone, Debug)]
pub struct MoveGraph {
    members: Vec<Vec<usize>>,
    stuck: Vec<Vec<usize>>,
}

impl MoveGraph {
    pub fn build<W: Scalar>(g: &WeightedGraph<W>, c: &Coloring, in_part: &[bool]) -> Self {
        let mut h = MoveGraph {
            members: vec![Vec::new(); c.k()],
            stuck: vec![Vec::new(); c.k()],
        };
        h.refresh(g, c, in_part, 0..c.k());
        h
    }

    /// Recomputes the given classes after vertices moved.
    pub fn refresh<W: Scalar>(
        &mut self,
        g: &WeightedGraph<W>,
        c: &Coloring,
        in_part: &[bool],
        classes: impl IntoIterator<Item = usize>,
    ) {
        for i in classes {
            let members: Vec<usize> = c.class(i).iter().copied().filter(|&v| in_part[v]).collect();
            let mut stuck: Option<Vec<usize>> = None;
            for &v in &members {
                let b = blocked(g, c, v);
                stuck = Some(match stuck {
                    None => b,
                    Some(s) => s.into_iter().filter(|x| b.binary_search(x).is_ok()).collect(),
                });
                if stuck.as_ref().is_some_and(Vec::is_empty) {
                    break;
                }
            }
            self.stuck[i] = stuck.unwrap_or_default();
            self.members[i] = members;
        }
    }

    pub fn count(&self, i: usize) -> usize {
        self.members[i].len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && !self.members[i].is_empty() && self.stuck[i].binary_search(&j).is_err()
    }

    /// Lowest-index vertex of `C_i ∩ V_t` that can move to `C_j`.
    pub fn witness<W: Scalar>(&self, g: &WeightedGraph<W>, c: &Coloring, i: usize, j: usize) -> Option<usize> {
        self.members[i].iter().copied().find(|&v| c.fits(g, v, j))
    }

    /// Lexicographically smallest shortest path from `src` to a class in
    /// `targets`, by breadth-first search with neighbors in index order.
    pub fn shortest_path(&self, src: usize, targets: &[bool]) -> Option<Vec<usize>> {
        let k = self.members.len();
        let mut parent = vec![usize::MAX; k];
        let mut unvisited: BTreeSet<usize> = (0..k).filter(|&j| j != src).collect();
        let mut queue = VecDeque::from([src]);
        while let Some(i) = queue.pop_front() {
            if self.members[i].is_empty() {
                continue;
            }
            let next: Vec<usize> = unvisited
                .iter()
                .copied()
                .filter(|j| self.stuck[i].binary_search(j).is_err())
                .collect();
            for j in next {
                unvisited.remove(&j);
                parent[j] = i;
                if targets[j] {
                    let mut path = vec![j];
                    let mut cur = j;
                    while cur != src {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(j);
            }
        }
        None
    }
}

/// Working state while part `t` is being balanced.
struct PartState<'a, W> {
    g: &'a WeightedGraph<W>,
    c: Coloring,
    in_part: Vec<bool>,
    h: MoveGraph,
    part: usize,
}

impl<W: Scalar> PartState<'_, W> {
    fn squares(&self) -> usize {
        (0..self.c.k()).map(|i| self.h.count(i).pow(2)).sum()
    }

    /// One relay along a shortest path from an over-full class to a least
    /// loaded one. Returns false when all counts are within one.
    fn augment_once(&mut self) -> Result<bool> {
        let k = self.c.k();
        let least = (0..k).map(|i| self.h.count(i)).min().unwrap_or(0);
        let over: Vec<usize> = (0..k).filter(|&i| self.h.count(i) >= least + 2).collect();
        if over.is_empty() {
            return Ok(false);
        }
        let targets: Vec<bool> = (0..k).map(|i| self.h.count(i) == least).collect();
        let Some(path) = over.iter().find_map(|&i| self.h.shortest_path(i, &targets)) else {
            return Err(Error::NoAugmentingPath { part: self.part });
        };
        let before = self.squares();
        let moves: Vec<(usize, usize)> = path
            .windows(2)
            .map(|e| {
                let q = self.h.witness(self.g, &self.c, e[0], e[1]).expect("edge has a witness");
                (q, e[1])
            })
            .collect();
        let mut touched: BTreeSet<usize> = path.iter().copied().collect();
        for &(q, to) in &moves {
            self.c.move_vertex(q, to);
        }
        for &(q, _) in &moves {
            for &u in self.g.neighbors(q) {
                if self.in_part[u] {
                    if let Some(i) = self.c.color_of(u) {
                        touched.insert(i);
                    }
                }
            }
        }
        self.h.refresh(self.g, &self.c, &self.in_part, touched);
        if self.squares() >= before {
            return Err(Error::guarantee("relay did not lower the sum of squared counts"));
        }
        Ok(true)
    }
}

fn check_pre<W: Scalar>(g: &WeightedGraph<W>, p: &VertexPartition, k: usize) -> Result<(usize, Rational)> {
    if k == 0 {
        return Err(Error::precondition("k must be positive"));
    }
    if p.max_vertex().is_some_and(|v| v >= g.n()) {
        return Err(Error::precondition("partition mentions a vertex outside the graph"));
    }
    let eta = compute_eta(p).map_err(|e| Error::precondition(e.to_string()))?;
    let mut mask = vec![false; g.n()];
    for v in p.covered() {
        mask[v] = true;
    }
    let delta = g.induced_max_degree(&mask);
    if k < delta + 1 {
        return Err(Error::precondition(format!("k = {k} is below Δ + 1 = {}", delta + 1)));
    }
    let need = (int(4) * &eta + int(2)) * int(delta as i64);
    if int(k as i64) < need {
        return Err(Error::precondition(format!(
            "k = {k} is below (4η + 2)Δ = {} with η = {eta} and Δ = {delta}",
            need.to_integer()
        )));
    }
    Ok((delta, eta))
}

/// Proper `k`-coloring of the covered vertices with every
/// `|C_i ∩ V_j| ∈ {⌊|V_j|/k⌋, ⌈|V_j|/k⌉}`, plus run statistics.
///
/// Requires parts sorted by nondecreasing size and `k >= (4η + 2)Δ`, where
/// `Δ` is the maximum degree of the graph induced by the covered vertices.
pub fn partition_equitable_run<W: Scalar>(
    g: &WeightedGraph<W>,
    p: &VertexPartition,
    k: usize,
) -> Result<PartitionRun> {
    let (delta, eta) = check_pre(g, p, k)?;
    let n = g.n();
    let mut c = Coloring::empty(n, k);
    let mut routes = Vec::with_capacity(p.d());
    let mut augmentations = Vec::with_capacity(p.d());
    let mut covered = 0usize;
    let cube = n.saturating_pow(3);

    for (t, part) in p.parts().iter().enumerate() {
        covered += part.len();
        let mut sizes: Vec<usize> = (0..k).collect();
        sizes.sort_by_key(|&i| c.class(i).len());

        let route = if covered <= k {
            // Every class touched so far holds one vertex; the smallest
            // |V_t| classes are empty.
            for (&v, &i) in part.iter().zip(&sizes) {
                debug_assert!(c.class(i).is_empty());
                c.assign(v, i);
            }
            PartRoute::EmptyClasses
        } else if t > 0 && 2 * part.len() <= k {
            let window = &sizes[..(part.len() + delta).min(k)];
            for (v, i) in match_into_classes(g, &c, part, window)? {
                c.assign(v, i);
            }
            PartRoute::SmallPart
        } else {
            // Greedy start: least loaded neighbor-free class for each vertex.
            let mut load: BTreeSet<(usize, usize)> = (0..k).map(|i| (0, i)).collect();
            let mut count = vec![0usize; k];
            for &v in part {
                let b = blocked(g, &c, v);
                let &(cnt, i) = load
                    .iter()
                    .find(|(_, i)| b.binary_search(i).is_err())
                    .ok_or_else(|| Error::guarantee(format!("vertex {v} has no neighbor-free class")))?;
                load.remove(&(cnt, i));
                load.insert((cnt + 1, i));
                count[i] += 1;
                c.assign(v, i);
            }
            PartRoute::Augmented
        };

        let mut done = 0usize;
        if route == PartRoute::Augmented {
            let mut in_part = vec![false; n];
            for &v in part {
                in_part[v] = true;
            }
            let h = MoveGraph::build(g, &c, &in_part);
            let mut state = PartState {
                g,
                c,
                in_part,
                h,
                part: t,
            };
            while state.augment_once()? {
                done += 1;
                if done > cube {
                    return Err(Error::guarantee("augmentation count exceeded n³"));
                }
            }
            c = state.c;
        }
        routes.push(route);
        augmentations.push(done);

        let cap = (4 * covered).div_ceil(k);
        if let Some(i) = (0..k).find(|&i| c.class(i).len() > cap) {
            return Err(Error::guarantee(format!(
                "class {i} holds {} vertices after part {t}, above the cap {cap}",
                c.class(i).len()
            )));
        }
    }

    if !check_partition_equitable(&c, p, k) {
        return Err(Error::guarantee("result is not equitable on every part"));
    }
    Ok(PartitionRun {
        coloring: c,
        routes,
        augmentations,
        delta,
        eta,
    })
}

pub fn partition_equitable_coloring<W: Scalar>(
    g: &WeightedGraph<W>,
    p: &VertexPartition,
    k: usize,
) -> Result<Coloring> {
    partition_equitable_run(g, p, k).map(|r| r.coloring)
}

/// Exactly `|V_j|/k` vertices of every part in every class, when each part
/// size is a multiple of `k` and `k >= (4d + 2)Δ`. Parts may come in any
/// order.
pub fn equitable_for_multiples<W: Scalar>(g: &WeightedGraph<W>, p: &VertexPartition, k: usize) -> Result<Coloring> {
    if k == 0 {
        return Err(Error::precondition("k must be positive"));
    }
    if let Some(size) = p.sizes().into_iter().find(|&s| s % k != 0 || s == 0) {
        return Err(Error::precondition(format!("part size {size} is not a positive multiple of k = {k}")));
    }
    let mut mask = vec![false; g.n()];
    for v in p.covered() {
        if v < g.n() {
            mask[v] = true;
        }
    }
    let delta = g.induced_max_degree(&mask);
    if k < (4 * p.d() + 2) * delta {
        return Err(Error::precondition(format!(
            "k = {k} is below (4d + 2)Δ = {}",
            (4 * p.d() + 2) * delta
        )));
    }
    partition_equitable_coloring(g, &p.sorted_by_size(), k)
}
