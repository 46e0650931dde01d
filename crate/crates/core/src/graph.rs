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

//! Undirected simple graphs with exact vertex weights.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::num::Scalar;

/// Undirected simple graph on vertices `0..n` with nonnegative weights.
///
/// Neighbor lists are sorted and symmetric. The value is immutable once
/// built; derived graphs are produced by the `with_*` constructors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph<W> {
    adjacency: Vec<Vec<usize>>,
    weights: Vec<W>,
}

/// Summary statistics of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile<W> {
    pub max_degree: usize,
    pub distinct_weights: usize,
    pub total_weight: W,
}

impl<W: Scalar> WeightedGraph<W> {
    /// Builds a graph from per-vertex weights and an edge list.
    ///
    /// Rejects negative weights, out-of-range endpoints, self-loops and
    /// repeated edges.
    pub fn new(weights: Vec<W>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = weights.len();
        if let Some(v) = weights.iter().position(|w| w.is_negative()) {
            return Err(Error::InvalidGraph(format!("vertex {v} has negative weight")));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!("parallel edge ({u}, {})", w[0])));
            }
        }
        Ok(WeightedGraph { adjacency, weights })
    }

    /// Edgeless graph with the given weights.
    pub fn edgeless(weights: Vec<W>) -> Self {
        let n = weights.len();
        WeightedGraph {
            adjacency: vec![Vec::new(); n],
            weights,
        }
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn weight(&self, v: usize) -> &W {
        &self.weights[v]
    }

    pub fn weights(&self) -> &[W] {
        &self.weights
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Maximum degree of the subgraph induced by `mask`.
    pub fn induced_max_degree(&self, mask: &[bool]) -> usize {
        (0..self.n())
            .filter(|&v| mask[v])
            .map(|v| self.adjacency[v].iter().filter(|&&u| mask[u]).count())
            .max()
            .unwrap_or(0)
    }

    pub fn distinct_weight_count(&self) -> usize {
        let mut ws: Vec<&W> = self.weights.iter().collect();
        ws.sort();
        ws.dedup();
        ws.len()
    }

    pub fn total_weight(&self) -> W {
        self.weight_of(0..self.n())
    }

    pub fn max_weight(&self) -> W {
        self.weights.iter().max().cloned().unwrap_or_else(W::zero)
    }

    /// `w(S)`.
    pub fn weight_of(&self, set: impl IntoIterator<Item = usize>) -> W {
        let mut total = W::zero();
        for v in set {
            total += &self.weights[v];
        }
        total
    }

    /// Heaviest vertex of `set`, lowest index among ties.
    pub fn heaviest(&self, set: &[usize]) -> Option<usize> {
        set.iter().copied().min_by(|&a, &b| self.by_weight_desc(a, b))
    }

    /// Lightest vertex of `set`, lowest index among ties.
    pub fn lightest(&self, set: &[usize]) -> Option<usize> {
        set.iter()
            .copied()
            .min_by(|&a, &b| self.weights[a].cmp(&self.weights[b]).then(a.cmp(&b)))
    }

    /// Order placing heavier vertices first, lower index first among ties.
    pub fn by_weight_desc(&self, a: usize, b: usize) -> Ordering {
        self.weights[b].cmp(&self.weights[a]).then(a.cmp(&b))
    }

    /// All vertices sorted by nonincreasing weight, ties by index.
    pub fn vertices_by_weight_desc(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by(|&a, &b| self.by_weight_desc(a, b));
        order
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        let mut mask = vec![false; self.n()];
        for &v in set {
            mask[v] = true;
        }
        set.iter().all(|&v| self.adjacency[v].iter().all(|&u| !mask[u]))
    }

    pub fn degree_profile(&self) -> DegreeProfile<W> {
        DegreeProfile {
            max_degree: self.max_degree(),
            distinct_weights: self.distinct_weight_count(),
            total_weight: self.total_weight(),
        }
    }

    /// Same topology with new weights.
    pub fn with_weights<V: Scalar>(&self, weights: Vec<V>) -> Result<WeightedGraph<V>> {
        if weights.len() != self.n() {
            return Err(Error::InvalidGraph(format!(
                "expected {} weights, got {}",
                self.n(),
                weights.len()
            )));
        }
        if let Some(v) = weights.iter().position(|w| w.is_negative()) {
            return Err(Error::InvalidGraph(format!("vertex {v} has negative weight")));
        }
        Ok(WeightedGraph {
            adjacency: self.adjacency.clone(),
            weights,
        })
    }

    /// Maps every weight through `f`, keeping the topology.
    pub fn map_weights<V: Scalar>(&self, f: impl Fn(&W) -> V) -> WeightedGraph<V> {
        WeightedGraph {
            adjacency: self.adjacency.clone(),
            weights: self.weights.iter().map(f).collect(),
        }
    }

    /// Appends `count` isolated zero-weight vertices with indices `n..n+count`.
    pub fn with_isolated_padding(&self, count: usize) -> Self {
        let mut g = self.clone();
        g.adjacency.extend(std::iter::repeat_with(Vec::new).take(count));
        g.weights.extend(std::iter::repeat_with(W::zero).take(count));
        g
    }
}
