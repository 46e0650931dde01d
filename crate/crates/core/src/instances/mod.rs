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

//! Instance generators and exhaustive oracles.

mod oracle;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use oracle::{
    oracle_chromatic_number, oracle_max_weight_independent_set, oracle_min_alpha_eq1, oracle_min_alpha_eqx,
    FactorMode, OracleReport, DEFAULT_BUDGET,
};

use crate::coloring::VertexPartition;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::num::{int, pow, ratio, QuadSurd, Rational};

/// `K_{Δ,Δ}` with weights 2 on the left side and `√2` on the right, plus a
/// disjoint `K_{Δ+1}` of zero-weight vertices. No α-EQ1 coloring with
/// α < √2 exists for `Δ + 1 <= k < 3Δ/2`.
///
/// Vertices `0..Δ` are the left side, `Δ..2Δ` the right side, and the
/// clique follows.
pub fn gen_lower_bound_instance(delta: usize) -> Result<WeightedGraph<QuadSurd>> {
    if delta < 3 || delta.is_multiple_of(2) {
        return Err(Error::precondition(format!("Δ must be odd and at least 3, got {delta}")));
    }
    let mut weights = vec![QuadSurd::from(int(2)); delta];
    weights.extend(vec![QuadSurd::sqrt2(); delta]);
    weights.extend(vec![QuadSurd::from(int(0)); delta + 1]);
    let mut edges = Vec::new();
    for l in 0..delta {
        for r in delta..2 * delta {
            edges.push((l, r));
        }
    }
    let base = 2 * delta;
    for a in base..base + delta + 1 {
        for b in a + 1..base + delta + 1 {
            edges.push((a, b));
        }
    }
    WeightedGraph::new(weights, &edges)
}

/// Path `0 - 1 - ... - (n−1)` with `w_i = β^(i+1)`. For `β > α + 1` the
/// only α-EQX coloring uses `n` colors.
pub fn gen_eqx_counterexample(n: usize, beta: &Rational) -> Result<WeightedGraph<Rational>> {
    if n < 2 {
        return Err(Error::precondition("the path needs at least two vertices"));
    }
    if *beta <= int(1) {
        return Err(Error::precondition("β must exceed 1"));
    }
    let weights = (1..=n as u64).map(|i| pow(beta, i)).collect();
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    WeightedGraph::new(weights, &edges)
}

/// Distribution of vertex weights for random instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightModel {
    /// `p/q` with `p` uniform in `1..=100`, `q` uniform in `1..=10`.
    Uniform,
    /// `2^-j` with `j` geometric of parameter 1/2, capped at 30.
    Geometric,
    /// One of `d` distinct values `1..=d`.
    FewDistinct(usize),
}

impl WeightModel {
    fn sample(&self, rng: &mut ChaCha8Rng) -> Rational {
        match *self {
            WeightModel::Uniform => ratio(rng.gen_range(1..=100), rng.gen_range(1..=10)),
            WeightModel::Geometric => {
                let mut j = 0u32;
                while j < 30 && rng.gen_bool(0.5) {
                    j += 1;
                }
                ratio(1, 1i64 << j)
            }
            WeightModel::FewDistinct(d) => int(rng.gen_range(1..=d.max(1) as i64)),
        }
    }
}

/// Random graph with maximum degree at most `Δ`: about `nΔ/2` random edges
/// are attempted and kept when both endpoints still have room.
pub fn gen_random_bounded_degree(
    n: usize,
    delta: usize,
    model: WeightModel,
    seed: u64,
) -> Result<WeightedGraph<Rational>> {
    if n > 0 && delta >= n {
        return Err(Error::precondition(format!("Δ = {delta} must be below n = {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weights: Vec<Rational> = (0..n).map(|_| model.sample(&mut rng)).collect();
    let mut degree = vec![0usize; n];
    let mut edges = std::collections::BTreeSet::new();
    if n >= 2 && delta > 0 {
        let target = n * delta / 2;
        for _ in 0..4 * target {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v || degree[u] >= delta || degree[v] >= delta {
                continue;
            }
            if edges.insert((u.min(v), u.max(v))) {
                degree[u] += 1;
                degree[v] += 1;
            }
        }
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    WeightedGraph::new(weights, &edges)
}

/// Random partition of `0..n` into `d` nonempty parts, sorted by size.
pub fn gen_random_partition(n: usize, d: usize, seed: u64) -> Result<VertexPartition> {
    if d == 0 || d > n {
        return Err(Error::precondition(format!("cannot split {n} vertices into {d} nonempty parts")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut cuts: Vec<usize> = (1..n).collect();
    cuts.shuffle(&mut rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(d - 1).collect();
    cuts.sort_unstable();
    let mut parts = Vec::with_capacity(d);
    let mut start = 0;
    for end in cuts.into_iter().chain(std::iter::once(n)) {
        parts.push(order[start..end].to_vec());
        start = end;
    }
    Ok(VertexPartition::new(parts)?.sorted_by_size())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::Scalar;
    use num_traits::Zero;

    #[test]
    fn lower_bound_instance_shape() {
        let g = gen_lower_bound_instance(3).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.max_degree(), 3);
        assert!(gen_lower_bound_instance(4).is_err());
        assert!(gen_lower_bound_instance(1).is_err());
        let g5 = gen_lower_bound_instance(5).unwrap();
        assert_eq!((g5.n(), g5.max_degree()), (16, 5));
    }

    #[test]
    fn lower_bound_chromatic_number_is_clique_size() {
        let g = gen_lower_bound_instance(3).unwrap();
        assert_eq!(oracle_chromatic_number(&g, 100_000).unwrap().0, 4);
    }

    #[test]
    fn eqx_counterexample_weights() {
        let g = gen_eqx_counterexample(5, &int(4)).unwrap();
        assert_eq!(g.weights(), &[int(4), int(16), int(64), int(256), int(1024)]);
        assert_eq!(g.max_degree(), 2);
        // β^j > α(β^(j−1) + ... + β) with α = 2.
        for j in 1..=5u64 {
            let lower: Rational = (1..j).map(|i| pow(&int(4), i)).sum();
            assert!(pow(&int(4), j) > int(2) * lower);
        }
    }

    #[test]
    fn random_graphs_respect_degree_and_seed() {
        for seed in 0..50 {
            let g = gen_random_bounded_degree(30, 4, WeightModel::Uniform, seed).unwrap();
            assert!(g.max_degree() <= 4);
            assert!(g.weights().iter().all(|w| !w.is_negative() && !w.is_zero()));
        }
        let a = gen_random_bounded_degree(20, 3, WeightModel::Geometric, 7).unwrap();
        let b = gen_random_bounded_degree(20, 3, WeightModel::Geometric, 7).unwrap();
        assert_eq!(a, b);
        let e = gen_random_bounded_degree(20, 0, WeightModel::FewDistinct(2), 1).unwrap();
        assert_eq!(e.edge_count(), 0);
        assert!(e.distinct_weight_count() <= 2);
    }

    #[test]
    fn random_partition_is_sorted_and_covers() {
        let p = gen_random_partition(20, 4, 3).unwrap();
        assert_eq!(p.d(), 4);
        assert!(p.is_size_sorted());
        assert_eq!(p.covered(), (0..20).collect::<Vec<_>>());
    }
}
