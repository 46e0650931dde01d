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

#![allow(dead_code)]

use equicolor::num::ratio;
use equicolor::{Graph, WeightedGraph};
use proptest::prelude::*;

/// Small graphs with positive rational weights and degree at most
/// `max_degree`.
pub fn small_graph(max_n: usize, max_degree: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        let weights = prop::collection::vec((1i64..=30, 1i64..=6), n);
        let edges = prop::collection::vec((0..n, 0..n), 0..=n * max_degree);
        (weights, edges).prop_map(move |(w, e)| build(w, e, max_degree))
    })
}

fn build(w: Vec<(i64, i64)>, e: Vec<(usize, usize)>, max_degree: usize) -> Graph {
    let n = w.len();
    let mut degree = vec![0usize; n];
    let mut kept = std::collections::BTreeSet::new();
    for (u, v) in e {
        let key = (u.min(v), u.max(v));
        if u == v || kept.contains(&key) || degree[u] >= max_degree || degree[v] >= max_degree {
            continue;
        }
        degree[u] += 1;
        degree[v] += 1;
        kept.insert(key);
    }
    let edges: Vec<(usize, usize)> = kept.into_iter().collect();
    WeightedGraph::new(w.into_iter().map(|(p, q)| ratio(p, q)).collect(), &edges).unwrap()
}
