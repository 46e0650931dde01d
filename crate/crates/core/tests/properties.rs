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

mod common;

use common::small_graph;
use equicolor::extend::fill_up;
use equicolor::io::{format_coloring, format_graph, parse_coloring, parse_graph};
use equicolor::lowmax::low_max_wt_eq1_greedy;
use equicolor::num::{int, pow, ratio};
use equicolor::partitioneq::partition_equitable_run;
use equicolor::swap2eq1::two_eq1_coloring;
use equicolor::verify::{check_partition_equitable, compute_eta, eq1_factor, is_alpha_eq1, is_proper};
use equicolor::weightedeq1::{bucket_index_of, eq1_coloring_distinct_weights, eq1_coloring_sqrt};
use equicolor::{Coloring, Factor, Graph, QuadSurd, Rational, VertexPartition, WeightedGraph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_coloring(n: usize, k: usize, seed: u64) -> Coloring {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a: Vec<Option<usize>> = (0..n).map(|_| Some(rng.gen_range(0..k))).collect();
    Coloring::from_assignment(k, &a).unwrap()
}

fn random_partition(n: usize, d: usize, seed: u64) -> VertexPartition {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut parts = vec![Vec::new(); d];
    for v in 0..n {
        parts[rng.gen_range(0..d)].push(v);
    }
    parts.retain(|p| !p.is_empty());
    VertexPartition::new(parts).unwrap().sorted_by_size()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn graph_text_round_trips(g in small_graph(12, 4)) {
        let text = format_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(format_graph(&back), text);
    }

    #[test]
    fn coloring_text_round_trips(n in 1usize..20, k in 1usize..6, seed: u64) {
        let c = random_coloring(n, k, seed);
        prop_assert_eq!(parse_coloring(&format_coloring(&c), n).unwrap(), c);
    }

    #[test]
    fn alpha_test_agrees_with_factor(g in small_graph(10, 3), k in 2usize..5, seed: u64, num in 0i64..40) {
        let c = random_coloring(g.n(), k, seed);
        let alpha = ratio(num, 8);
        let factor = eq1_factor(&g, &c).factor;
        prop_assert_eq!(is_alpha_eq1(&g, &c, &alpha), factor.is_at_most(&alpha));
    }

    #[test]
    fn two_eq1_bound(g in small_graph(11, 3), extra in 0usize..3) {
        let k = g.max_degree() + 1 + extra;
        let c = two_eq1_coloring(&g, k).unwrap();
        prop_assert!(is_proper(&g, &c) && c.is_total() && c.k() == k);
        prop_assert!(eq1_factor(&g, &c).factor.is_at_most(&int(2)));
    }

    #[test]
    fn fill_up_stays_proper(g in small_graph(14, 3), extra in 0usize..4, keep in 0usize..14) {
        let k = g.max_degree() + 1 + extra;
        let start = Coloring::empty(g.n(), k);
        let partial = fill_up(&g, &start, k).unwrap().restricted(
            &(0..g.n()).map(|v| v < keep).collect::<Vec<_>>(),
        );
        let out = fill_up(&g, &partial, k).unwrap();
        prop_assert!(is_proper(&g, &out) && out.is_total());
        for v in partial.covered() {
            prop_assert_eq!(out.color_of(v), partial.color_of(v));
        }
    }

    #[test]
    fn sqrt_construction_is_exact(g in small_graph(14, 2)) {
        let delta = g.max_degree().max(1);
        let k = ((16 * g.n() * delta) as f64).sqrt().ceil() as usize;
        let c = eq1_coloring_sqrt(&g, k).unwrap();
        prop_assert!(is_proper(&g, &c) && c.is_total());
        prop_assert!(eq1_factor(&g, &c).factor.is_at_most(&int(1)));
    }

    #[test]
    fn bucket_index_brackets_the_weight(p in 1i64..1000, q in 1i64..1000, e in 1i64..10) {
        let pivot = int(1);
        let w = ratio(p.min(q), q.max(p));
        let eps = ratio(1, 10 * e);
        let i = bucket_index_of(&w, &pivot, &eps);
        prop_assert!(i >= 1);
        let step = int(1) + eps.clone();
        prop_assert!(w.clone() * pow(&step, i) > pivot);
        prop_assert!(w * pow(&step, i - 1) <= pivot);
    }

    #[test]
    fn quad_surd_order_matches_floats(a in -1000i64..1000, b in -1000i64..1000, c in 1i64..50, d in 1i64..50) {
        let x = QuadSurd::new(ratio(a, c), ratio(b, d));
        let approx = a as f64 / c as f64 + (b as f64 / d as f64) * std::f64::consts::SQRT_2;
        if approx.abs() > 1e-9 {
            prop_assert_eq!(x.signum(), approx.partial_cmp(&0.0).unwrap());
        }
        prop_assert_eq!(x.signum() == std::cmp::Ordering::Equal, a == 0 && b == 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn partition_equitable_with_size_cap(g in small_graph(40, 2), d in 1usize..5, seed: u64) {
        let p = random_partition(g.n(), d, seed);
        let eta = compute_eta(&p).unwrap();
        let delta = g.max_degree().max(1);
        let eta_ceil = equicolor::num::ceil_to_int(&eta);
        let k = (4 * usize::try_from(eta_ceil).unwrap() + 2) * delta;
        let run = partition_equitable_run(&g, &p, k).unwrap();
        prop_assert!(is_proper(&g, &run.coloring));
        prop_assert!(check_partition_equitable(&run.coloring, &p, k));
        let n = g.n();
        prop_assert!((0..k).all(|i| run.coloring.class(i).len() <= (4 * n).div_ceil(k)));
    }

    #[test]
    fn distinct_weight_construction_is_exact(n in 1usize..60, seed: u64, classes in 1i64..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let weights: Vec<Rational> = (0..n).map(|_| int(rng.gen_range(1..=classes))).collect();
        let mut edges = Vec::new();
        let mut used = vec![false; n];
        for _ in 0..n / 3 {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v && !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                edges.push((u, v));
            }
        }
        let g: Graph = WeightedGraph::new(weights, &edges).unwrap();
        let d = g.distinct_weight_count();
        let k = ((8 * d + 10) * g.max_degree()).max(g.max_degree() + 1);
        let c = eq1_coloring_distinct_weights(&g, k).unwrap();
        prop_assert!(is_proper(&g, &c) && c.is_total());
        prop_assert!(eq1_factor(&g, &c).factor.is_at_most(&int(1)));
    }

    #[test]
    fn low_max_weight_bound(n in 400usize..700, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let weights: Vec<Rational> = (0..n).map(|_| ratio(rng.gen_range(2..=4), 4)).collect();
        let edges: Vec<(usize, usize)> = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
        let g = WeightedGraph::new(weights, &edges).unwrap();
        let eps = ratio(1, 10);
        let c = low_max_wt_eq1_greedy(&g, 20, &eps).unwrap();
        prop_assert!(is_proper(&g, &c) && c.is_total());
        prop_assert!(matches!(eq1_factor(&g, &c).factor, Factor::Finite(_)));
        prop_assert!(eq1_factor(&g, &c).factor.is_at_most(&ratio(17, 10)));
    }
}
