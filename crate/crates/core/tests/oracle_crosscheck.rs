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

//! Algorithms against exhaustive search on small instances.

use equicolor::instances::{
    gen_eqx_counterexample, gen_lower_bound_instance, gen_random_bounded_degree, oracle_chromatic_number,
    oracle_max_weight_independent_set, oracle_min_alpha_eq1, oracle_min_alpha_eqx, WeightModel, DEFAULT_BUDGET,
};
use equicolor::num::{int, ratio};
use equicolor::swap2eq1::two_eq1_coloring;
use equicolor::verify::{eq1_factor, eqx_factor, is_proper};
use equicolor::weightedeq1::{eq1_coloring_distinct_weights, eq1_coloring_sqrt};
use equicolor::{Coloring, Factor, QuadSurd, Rational, WeightedGraph};

#[test]
fn lower_bound_instance_needs_sqrt2() {
    let g = gen_lower_bound_instance(3).unwrap();
    let report = oracle_min_alpha_eq1(&g, 4, DEFAULT_BUDGET).certified(DEFAULT_BUDGET).unwrap();
    let min = report.min_factor.unwrap();
    assert!(!min.is_at_most(&(QuadSurd::sqrt2() - QuadSurd::from(ratio(1, 1_000_000_000)))));
    assert!(min.is_at_most(&QuadSurd::from(int(2))));
    assert_eq!(min, Factor::Finite(QuadSurd::sqrt2()));
}

#[test]
fn lower_bound_holds_for_delta_five() {
    let g = gen_lower_bound_instance(5).unwrap();
    for k in [6, 7] {
        let report = oracle_min_alpha_eq1(&g, k, DEFAULT_BUDGET).certified(DEFAULT_BUDGET).unwrap();
        assert_eq!(report.min_factor, Some(Factor::Finite(QuadSurd::sqrt2())), "k = {k}");
    }
}

#[test]
fn lower_bound_instance_with_six_colors_beats_sqrt2() {
    let g = gen_lower_bound_instance(3).unwrap();
    let report = oracle_min_alpha_eq1(&g, 6, DEFAULT_BUDGET).certified(DEFAULT_BUDGET).unwrap();
    let witness = report.witness.unwrap();
    assert!(is_proper(&g, &witness));
    let f = eq1_factor(&g, &witness).factor;
    assert_eq!(Some(f.clone()), report.min_factor);
    assert!(f < Factor::Finite(QuadSurd::sqrt2()));
}

#[test]
fn two_eq1_is_never_below_the_oracle() {
    for seed in 0..12 {
        let g = gen_random_bounded_degree(9, 3, WeightModel::Uniform, seed).unwrap();
        let k = g.max_degree() + 1;
        let c = two_eq1_coloring(&g, k).unwrap();
        let achieved = eq1_factor(&g, &c).factor;
        let oracle = oracle_min_alpha_eq1(&g, k, DEFAULT_BUDGET).certified(DEFAULT_BUDGET).unwrap();
        assert!(oracle.min_factor.unwrap() <= achieved);
        assert!(achieved.is_at_most(&int(2)));
    }
}

#[test]
fn exact_constructions_match_oracle_zero_or_one() {
    for seed in 0..6 {
        let g = gen_random_bounded_degree(10, 1, WeightModel::FewDistinct(2), seed).unwrap();
        let d = g.distinct_weight_count();
        let k = ((8 * d + 10) * g.max_degree()).max(g.max_degree() + 1);
        let c = eq1_coloring_distinct_weights(&g, k).unwrap();
        let achieved = eq1_factor(&g, &c).factor;
        assert!(achieved.is_at_most(&int(1)));
        let s = eq1_coloring_sqrt(&g, 13).unwrap();
        assert!(eq1_factor(&g, &s).factor.is_at_most(&int(1)));
    }
}

#[test]
fn eqx_counterexample_needs_n_colors() {
    let g = gen_eqx_counterexample(5, &int(4)).unwrap();
    for k in 2..5 {
        let report = oracle_min_alpha_eqx(&g, k, DEFAULT_BUDGET).certified(DEFAULT_BUDGET).unwrap();
        assert!(!report.min_factor.unwrap().is_at_most(&int(2)), "k = {k}");
    }
    let singletons = Coloring::singletons(5);
    assert!(eqx_factor(&g, &singletons).is_at_most(&int(2)));
}

#[test]
fn triangle_with_three_colors_is_zero() {
    let g = WeightedGraph::new(vec![int(3), ratio(1, 2), int(7)], &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let report = oracle_min_alpha_eq1(&g, 3, 1000);
    assert!(report.exhausted);
    assert_eq!(report.min_factor, Some(Factor::Finite(int(0))));
}

#[test]
fn chromatic_numbers() {
    let k5: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let g = WeightedGraph::new(vec![int(1); 5], &k5).unwrap();
    assert_eq!(oracle_chromatic_number(&g, 100_000).unwrap().0, 5);
    let c7: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
    let g = WeightedGraph::new(vec![int(1); 7], &c7).unwrap();
    assert_eq!(oracle_chromatic_number(&g, 100_000).unwrap().0, 3);
    let c8: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    let g = WeightedGraph::new(vec![int(1); 8], &c8).unwrap();
    assert_eq!(oracle_chromatic_number(&g, 1).unwrap().0, 2);
}

#[test]
fn mwis_against_subset_enumeration() {
    let c5: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    let g = WeightedGraph::new((1..=5).map(int).collect(), &c5).unwrap();
    let all: Vec<usize> = (0..5).collect();
    let (set, w) = oracle_max_weight_independent_set(&g, &all, 10_000).unwrap();
    let mut best = int(0);
    for mask in 0u32..32 {
        let s: Vec<usize> = (0..5).filter(|&v| mask >> v & 1 == 1).collect();
        if g.is_independent(&s) {
            best = best.max(g.weight_of(s));
        }
    }
    assert_eq!(w, best);
    assert_eq!(set, vec![2, 4]);
    let edge = WeightedGraph::new(vec![int(3), int(5)], &[(0, 1)]).unwrap();
    assert_eq!(oracle_max_weight_independent_set(&edge, &[0, 1], 100).unwrap().0, vec![1]);
}

#[test]
fn exhausted_flag_is_honest_under_a_tiny_budget() {
    let g: WeightedGraph<Rational> = gen_random_bounded_degree(12, 3, WeightModel::Uniform, 1).unwrap();
    let report = oracle_min_alpha_eq1(&g, 4, 10);
    assert!(!report.exhausted);
    assert!(report.certified(10).is_err());
}
