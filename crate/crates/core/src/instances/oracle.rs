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

//! Exhaustive searches: minimum achievable EQ1/EQX factor, chromatic
//! number, and maximum-weight independent sets.

use std::collections::VecDeque;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::io;
use crate::num::Scalar;
use crate::verify::Factor;

/// Default node budget for exhaustive searches.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Which fairness notion a factor search minimizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorMode {
    /// Remove the heaviest vertex of the larger class.
    Eq1,
    /// Remove the lightest vertex, so the bound holds for every vertex.
    Eqx,
}

/// Result of an exhaustive factor search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport<W> {
    /// SHA-256 of the instance text, the color count and the mode.
    pub digest: String,
    pub k: usize,
    /// Least factor found; `None` when no proper `k`-coloring was found.
    pub min_factor: Option<Factor<W>>,
    pub witness: Option<Coloring>,
    /// True iff every proper coloring was examined (up to renaming).
    pub exhausted: bool,
    pub nodes: u64,
}

impl<W: Scalar> OracleReport<W> {
    /// Errors with `BudgetExceeded` unless the search was exhaustive.
    pub fn certified(self, budget: u64) -> Result<Self> {
        if self.exhausted {
            Ok(self)
        } else {
            Err(Error::BudgetExceeded { budget })
        }
    }
}

fn digest<W: Scalar>(g: &WeightedGraph<W>, k: usize, mode: FactorMode) -> String {
    let mut h = Sha256::new();
    h.update(io::format_graph(g).as_bytes());
    h.update(format!("k {k} mode {mode:?}\n").as_bytes());
    hex::encode(h.finalize())
}

/// Running state of one branch of the factor search.
struct FactorSearch<'a, W> {
    g: &'a WeightedGraph<W>,
    k: usize,
    mode: FactorMode,
    order: Vec<usize>,
    /// `suffix[p]` is the weight of `order[p..]`.
    suffix: Vec<W>,
    color: Vec<Option<usize>>,
    weight: Vec<W>,
    /// Heaviest (EQ1) or lightest (EQX) member weight per class.
    extreme: Vec<Option<W>>,
    used: usize,
    best: Option<(Factor<W>, Vec<Option<usize>>)>,
    nodes: u64,
    budget: u64,
}

impl<'a, W: Scalar> FactorSearch<'a, W> {
    fn new(g: &'a WeightedGraph<W>, k: usize, mode: FactorMode, budget: u64) -> Self {
        let order = g.vertices_by_weight_desc();
        let mut suffix = vec![W::zero(); order.len() + 1];
        for p in (0..order.len()).rev() {
            suffix[p] = suffix[p + 1].clone() + g.weight(order[p]).clone();
        }
        FactorSearch {
            g,
            k,
            mode,
            order,
            suffix,
            color: vec![None; g.n()],
            weight: vec![W::zero(); k],
            extreme: vec![None; k],
            used: 0,
            best: None,
            nodes: 0,
            budget,
        }
    }

    fn residual(&self, i: usize) -> W {
        match &self.extreme[i] {
            Some(e) => self.weight[i].clone() - e.clone(),
            None => W::zero(),
        }
    }

    /// Factor lower bound valid for every completion: residuals only grow
    /// and a partner class gains at most the remaining weight.
    fn bound(&self, remaining: &W) -> Factor<W> {
        let mut light: Vec<usize> = (0..self.k).collect();
        light.sort_by(|&a, &b| self.weight[a].cmp(&self.weight[b]).then(a.cmp(&b)));
        let mut worst = Factor::Finite(W::zero());
        for i in 0..self.k {
            let r = self.residual(i);
            if r.is_zero() {
                continue;
            }
            let Some(&j) = light.iter().take(2).find(|&&j| j != i) else { continue };
            let den = self.weight[j].clone() + remaining.clone();
            let f = if den.is_zero() { Factor::Infinite } else { Factor::Finite(r / den) };
            if f > worst {
                worst = f;
            }
        }
        worst
    }

    fn place(&mut self, v: usize, i: usize) -> (Option<W>, usize) {
        let saved = (self.extreme[i].clone(), self.used);
        let w = self.g.weight(v);
        self.color[v] = Some(i);
        self.weight[i] += w;
        let replace = match (&self.extreme[i], self.mode) {
            (None, _) => true,
            (Some(e), FactorMode::Eq1) => w > e,
            (Some(e), FactorMode::Eqx) => w < e,
        };
        if replace {
            self.extreme[i] = Some(w.clone());
        }
        self.used = self.used.max(i + 1);
        saved
    }

    fn unplace(&mut self, v: usize, i: usize, saved: (Option<W>, usize)) {
        self.color[v] = None;
        self.weight[i] -= self.g.weight(v);
        self.extreme[i] = saved.0;
        self.used = saved.1;
    }

    fn fits(&self, v: usize, i: usize) -> bool {
        self.g.neighbors(v).iter().all(|&u| self.color[u] != Some(i))
    }

    fn dfs(&mut self, p: usize) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        if let Some((best, _)) = &self.best {
            if self.bound(&self.suffix[p]) >= *best {
                return true;
            }
        }
        if p == self.order.len() {
            let f = self.bound(&W::zero());
            self.best = Some((f, self.color.clone()));
            return true;
        }
        let v = self.order[p];
        // Canonical renaming: a vertex opens at most one new color.
        let limit = (self.used + 1).min(self.k);
        for i in 0..limit {
            if !self.fits(v, i) {
                continue;
            }
            let saved = self.place(v, i);
            let ok = self.dfs(p + 1);
            self.unplace(v, i, saved);
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Canonical partial colorings of the first `depth` vertices in search
/// order, used as independent parallel tasks.
fn prefixes<W: Scalar>(search: &mut FactorSearch<'_, W>, depth: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>) {
    if cur.len() == depth {
        out.push(cur.clone());
        return;
    }
    let v = search.order[cur.len()];
    let limit = (search.used + 1).min(search.k);
    for i in 0..limit {
        if !search.fits(v, i) {
            continue;
        }
        let saved = search.place(v, i);
        cur.push(i);
        prefixes(search, depth, out, cur);
        cur.pop();
        search.unplace(v, i, saved);
    }
}

/// Best factor and assignment, node count, and whether the task finished.
type TaskResult<W> = (Option<(Factor<W>, Vec<Option<usize>>)>, u64, bool);

fn min_factor_search<W: Scalar>(
    g: &WeightedGraph<W>,
    k: usize,
    mode: FactorMode,
    budget: u64,
) -> OracleReport<W> {
    let n = g.n();
    let digest = digest(g, k, mode);
    if k == 0 {
        let ok = n == 0;
        return OracleReport {
            digest,
            k,
            min_factor: ok.then(|| Factor::Finite(W::zero())),
            witness: ok.then(|| Coloring::empty(0, 0)),
            exhausted: true,
            nodes: 1,
        };
    }
    let mut root = FactorSearch::new(g, k, mode, budget);
    // Enough prefixes to keep a worker pool busy; results do not depend on
    // scheduling because every task searches independently.
    let depth = (0..=n)
        .find(|&d| {
            let mut out = Vec::new();
            prefixes(&mut root, d, &mut out, &mut Vec::new());
            out.len() >= 64 || d == n
        })
        .unwrap_or(n);
    let mut tasks = Vec::new();
    prefixes(&mut root, depth, &mut tasks, &mut Vec::new());

    let results: Vec<TaskResult<W>> = tasks
        .par_iter()
        .map(|prefix| {
            let mut s = FactorSearch::new(g, k, mode, budget);
            for (p, &i) in prefix.iter().enumerate() {
                let v = s.order[p];
                s.place(v, i);
            }
            let done = s.dfs(prefix.len());
            (s.best, s.nodes, done)
        })
        .collect();

    let mut best: Option<(Factor<W>, Vec<Option<usize>>)> = None;
    let mut nodes = 0u64;
    let mut exhausted = true;
    for (found, count, done) in results {
        nodes = nodes.saturating_add(count);
        exhausted &= done;
        if let Some((f, col)) = found {
            if best.as_ref().is_none_or(|(b, _)| f < *b) {
                best = Some((f, col));
            }
        }
    }
    if nodes > budget {
        exhausted = false;
    }
    let (min_factor, witness) = match best {
        Some((f, col)) => (
            Some(f),
            Some(Coloring::from_assignment(k, &col).expect("search assigns valid colors")),
        ),
        None => (None, None),
    };
    OracleReport {
        digest,
        k,
        min_factor,
        witness,
        exhausted,
        nodes,
    }
}

/// Exact minimum EQ1 factor over all proper `k`-colorings.
pub fn oracle_min_alpha_eq1<W: Scalar>(g: &WeightedGraph<W>, k: usize, budget: u64) -> OracleReport<W> {
    min_factor_search(g, k, FactorMode::Eq1, budget)
}

/// Exact minimum EQX factor over all proper `k`-colorings.
pub fn oracle_min_alpha_eqx<W: Scalar>(g: &WeightedGraph<W>, k: usize, budget: u64) -> OracleReport<W> {
    min_factor_search(g, k, FactorMode::Eqx, budget)
}

/// Two-coloring by breadth-first search, if the graph is bipartite.
fn two_color<W: Scalar>(g: &WeightedGraph<W>) -> Option<Vec<Option<usize>>> {
    let mut color = vec![None; g.n()];
    for s in 0..g.n() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &v in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(1 - cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color)
}

struct ColorSearch<'a, W> {
    g: &'a WeightedGraph<W>,
    k: usize,
    color: Vec<Option<usize>>,
    nodes: u64,
    budget: u64,
}

impl<W: Scalar> ColorSearch<'_, W> {
    /// DSATUR-style backtracking: branch on the uncolored vertex with the
    /// most distinct neighbor colors.
    fn dfs(&mut self, used: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        let mut pick: Option<(usize, usize, usize)> = None;
        for v in 0..self.g.n() {
            if self.color[v].is_some() {
                continue;
            }
            let mut seen: Vec<usize> = self.g.neighbors(v).iter().filter_map(|&u| self.color[u]).collect();
            seen.sort_unstable();
            seen.dedup();
            let key = (seen.len(), self.g.degree(v), v);
            if pick.is_none_or(|(s, d, _)| (key.0, key.1) > (s, d)) {
                pick = Some(key);
            }
        }
        let Some((_, _, v)) = pick else { return Ok(true) };
        for i in 0..(used + 1).min(self.k) {
            if self.g.neighbors(v).iter().any(|&u| self.color[u] == Some(i)) {
                continue;
            }
            self.color[v] = Some(i);
            if self.dfs(used.max(i + 1))? {
                return Ok(true);
            }
            self.color[v] = None;
        }
        Ok(false)
    }
}

/// Exact chromatic number with an optimal coloring.
pub fn oracle_chromatic_number<W: Scalar>(g: &WeightedGraph<W>, budget: u64) -> Result<(usize, Coloring)> {
    let n = g.n();
    if n == 0 {
        return Ok((0, Coloring::empty(0, 0)));
    }
    if g.edge_count() == 0 {
        return Ok((1, Coloring::from_classes(n, vec![(0..n).collect()])?));
    }
    if let Some(col) = two_color(g) {
        return Ok((2, Coloring::from_assignment(2, &col)?));
    }
    let mut nodes = 0;
    for k in 3..=n {
        let mut s = ColorSearch {
            g,
            k,
            color: vec![None; n],
            nodes,
            budget,
        };
        let ok = s.dfs(0)?;
        nodes = s.nodes;
        if ok {
            return Ok((k, Coloring::from_assignment(k, &s.color)?));
        }
    }
    unreachable!("n colors always suffice")
}

struct MwisSearch<'a, W> {
    adj: Vec<Vec<usize>>,
    weight: Vec<&'a W>,
    alive: Vec<bool>,
    chosen: Vec<usize>,
    current: W,
    best: Option<(W, Vec<usize>)>,
    nodes: &'a mut u64,
    budget: u64,
}

impl<W: Scalar> MwisSearch<'_, W> {
    fn dfs(&mut self) -> Result<()> {
        *self.nodes += 1;
        if *self.nodes > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        let mut rest = W::zero();
        let mut pick: Option<(usize, usize)> = None;
        for v in 0..self.adj.len() {
            if !self.alive[v] {
                continue;
            }
            rest += self.weight[v];
            let deg = self.adj[v].iter().filter(|&&u| self.alive[u]).count();
            if pick.is_none_or(|(d, _)| deg > d) {
                pick = Some((deg, v));
            }
        }
        if let Some((best, _)) = &self.best {
            if self.current.clone() + rest <= *best {
                return Ok(());
            }
        }
        let Some((deg, v)) = pick else {
            self.best = Some((self.current.clone(), self.chosen.clone()));
            return Ok(());
        };
        if deg == 0 {
            // Only isolated vertices remain: take them all.
            let isolated: Vec<usize> = (0..self.adj.len()).filter(|&u| self.alive[u]).collect();
            let mut total = self.current.clone();
            for &u in &isolated {
                total += self.weight[u];
            }
            let mut set = self.chosen.clone();
            set.extend(isolated);
            self.best = Some((total, set));
            return Ok(());
        }
        // Include v.
        let removed: Vec<usize> = std::iter::once(v)
            .chain(self.adj[v].iter().copied())
            .filter(|&u| self.alive[u])
            .collect();
        for &u in &removed {
            self.alive[u] = false;
        }
        self.chosen.push(v);
        self.current += self.weight[v];
        self.dfs()?;
        self.current -= self.weight[v];
        self.chosen.pop();
        for &u in &removed {
            self.alive[u] = true;
        }
        // Exclude v.
        self.alive[v] = false;
        self.dfs()?;
        self.alive[v] = true;
        Ok(())
    }
}

/// Exact maximum-weight independent set of `G[U]`, solved per connected
/// component by branch and bound. Returns the set sorted.
pub fn oracle_max_weight_independent_set<W: Scalar>(
    g: &WeightedGraph<W>,
    u: &[usize],
    budget: u64,
) -> Result<(Vec<usize>, W)> {
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in u.iter().enumerate() {
        local[v] = i;
    }
    let mut seen = vec![false; u.len()];
    let mut nodes = 0u64;
    let mut set = Vec::new();
    let mut total = W::zero();
    for start in 0..u.len() {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < comp.len() {
            let a = comp[head];
            head += 1;
            for &nb in g.neighbors(u[a]) {
                let b = local[nb];
                if b != usize::MAX && !seen[b] {
                    seen[b] = true;
                    comp.push(b);
                }
            }
        }
        comp.sort_unstable();
        let index: std::collections::HashMap<usize, usize> =
            comp.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let adj: Vec<Vec<usize>> = comp
            .iter()
            .map(|&a| {
                g.neighbors(u[a])
                    .iter()
                    .filter_map(|&nb| index.get(&local[nb]).copied())
                    .collect()
            })
            .collect();
        let weight: Vec<&W> = comp.iter().map(|&a| g.weight(u[a])).collect();
        let mut search = MwisSearch {
            alive: vec![true; comp.len()],
            adj,
            weight,
            chosen: Vec::new(),
            current: W::zero(),
            best: None,
            nodes: &mut nodes,
            budget,
        };
        search.dfs()?;
        let (w, chosen) = search.best.expect("the empty set is always feasible");
        total += &w;
        set.extend(chosen.into_iter().map(|i| u[comp[i]]));
    }
    set.sort_unstable();
    Ok((set, total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{int, Rational};
    use crate::verify::{eq1_factor, is_proper};

    fn brute_mwis(g: &WeightedGraph<Rational>) -> Rational {
        let n = g.n();
        (0u32..1 << n)
            .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>())
            .filter(|s| g.is_independent(s))
            .map(|s| g.weight_of(s))
            .max()
            .unwrap()
    }

    #[test]
    fn mwis_examples() {
        let g = WeightedGraph::edgeless(vec![int(1), int(2), int(3)]);
        assert_eq!(oracle_max_weight_independent_set(&g, &[0, 1, 2], 1000).unwrap(), (vec![0, 1, 2], int(6)));
        let e = WeightedGraph::new(vec![int(3), int(5)], &[(0, 1)]).unwrap();
        assert_eq!(oracle_max_weight_independent_set(&e, &[0, 1], 1000).unwrap(), (vec![1], int(5)));
        let c5 = WeightedGraph::new(
            (1..=5).map(int).collect(),
            &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)],
        )
        .unwrap();
        let (set, w) = oracle_max_weight_independent_set(&c5, &[0, 1, 2, 3, 4], 1000).unwrap();
        assert_eq!(w, brute_mwis(&c5));
        assert_eq!(w, int(8));
        assert!(c5.is_independent(&set));
    }

    #[test]
    fn mwis_respects_subset_and_budget() {
        let tri = WeightedGraph::new(vec![int(2); 3], &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(oracle_max_weight_independent_set(&tri, &[], 10).unwrap(), (vec![], int(0)));
        assert_eq!(oracle_max_weight_independent_set(&tri, &[0, 1, 2], 1000).unwrap().1, int(2));
        let big = WeightedGraph::new(
            vec![int(1); 30],
            &(0..29).map(|i| (i, i + 1)).collect::<Vec<_>>(),
        )
        .unwrap();
        let all: Vec<usize> = (0..30).collect();
        assert!(matches!(
            oracle_max_weight_independent_set(&big, &all, 5),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn triangle_oracle_is_zero() {
        let g = WeightedGraph::new(vec![int(3), int(1), int(7)], &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let r = oracle_min_alpha_eq1(&g, 3, 10_000);
        assert!(r.exhausted);
        assert_eq!(r.min_factor, Some(Factor::Finite(int(0))));
        let w = r.witness.unwrap();
        assert!(is_proper(&g, &w));
    }

    #[test]
    fn oracle_witness_attains_reported_factor() {
        let g = WeightedGraph::new(
            vec![int(5), int(1), int(2), int(4), int(3)],
            &[(0, 1), (1, 2)],
        )
        .unwrap();
        let r = oracle_min_alpha_eq1(&g, 2, 100_000);
        assert!(r.exhausted);
        let w = r.witness.unwrap();
        assert!(is_proper(&g, &w));
        assert_eq!(Some(eq1_factor(&g, &w).factor), r.min_factor);
    }

    #[test]
    fn oracle_reports_no_coloring_below_chromatic_number() {
        let g = WeightedGraph::new(vec![int(1); 3], &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let r = oracle_min_alpha_eq1(&g, 2, 10_000);
        assert!(r.exhausted);
        assert_eq!(r.min_factor, None);
    }

    #[test]
    fn chromatic_examples() {
        let k4 = WeightedGraph::new(
            vec![int(1); 4],
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        assert_eq!(oracle_chromatic_number(&k4, 10_000).unwrap().0, 4);
        let c5 = WeightedGraph::new(vec![int(1); 5], &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let (chi, col) = oracle_chromatic_number(&c5, 10_000).unwrap();
        assert_eq!(chi, 3);
        assert!(is_proper(&c5, &col));
        let c6 = WeightedGraph::new(
            vec![int(1); 6],
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)],
        )
        .unwrap();
        assert_eq!(oracle_chromatic_number(&c6, 10).unwrap().0, 2);
        assert_eq!(oracle_chromatic_number(&WeightedGraph::<Rational>::edgeless(vec![int(1); 3]), 1).unwrap().0, 1);
    }
}
