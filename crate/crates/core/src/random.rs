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

//! Random colorings and a tail bound for dependent sums.
//!
//! The random process orders the vertices by a uniform permutation, draws a
//! tentative color per vertex, and keeps it unless an earlier neighbor drew
//! the same color. Every randomized function takes an explicit seed; Monte
//! Carlo loops split their trials into fixed blocks, each driven by its own
//! ChaCha stream, so results do not depend on the thread count.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::coloring::{Coloring, PartialColoring};
use crate::error::{Error, Result};
use crate::extend::fill_up;
use crate::graph::WeightedGraph;
use crate::num::transcendental::{exp, ln, Interval};
use crate::num::{int, pow, Rational};
use crate::instances::DEFAULT_BUDGET;
use crate::swap2eq1::two_eq1_run;
use crate::verify::eq1_factor;

/// Trials per independently seeded block.
const BLOCK: u64 = 1024;

fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Sums `f(rng, trial)` over `trials` trials, block by block in parallel.
fn count_trials<F>(trials: u64, seed: u64, f: F) -> u64
where
    F: Fn(&mut ChaCha8Rng) -> bool + Sync,
{
    let blocks = trials.div_ceil(BLOCK);
    (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut rng = stream(seed, b);
            let size = BLOCK.min(trials - b * BLOCK);
            (0..size).filter(|_| f(&mut rng)).count() as u64
        })
        .sum()
}

fn sample_partial(g: &WeightedGraph<Rational>, k: usize, rng: &mut ChaCha8Rng) -> PartialColoring {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let tentative: Vec<usize> = (0..n).map(|_| rng.gen_range(0..k)).collect();
    let mut position = vec![0usize; n];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    let assignment: Vec<Option<usize>> = (0..n)
        .map(|v| {
            let clash = g
                .neighbors(v)
                .iter()
                .any(|&u| position[u] < position[v] && tentative[u] == tentative[v]);
            (!clash).then_some(tentative[v])
        })
        .collect();
    Coloring::from_assignment(k, &assignment).expect("tentative colors are in range")
}

fn check_k(g: &WeightedGraph<Rational>, k: usize) -> Result<()> {
    let delta = g.max_degree();
    if k < delta + 1 {
        return Err(Error::precondition(format!("k = {k} is below Δ + 1 = {}", delta + 1)));
    }
    Ok(())
}

/// One run of the random process.
pub fn random_partial_coloring(g: &WeightedGraph<Rational>, k: usize, seed: u64) -> Result<PartialColoring> {
    check_k(g, k)?;
    Ok(sample_partial(g, k, &mut ChaCha8Rng::seed_from_u64(seed)))
}

/// `Pr{v ∈ C_i} = (1 − (1 − 1/k)^(deg+1)) / (deg + 1)`.
pub fn class_probability_formula(k: usize, degree: usize) -> Rational {
    let q = Rational::one() - Rational::new(BigInt::one(), BigInt::from(k));
    let d1 = degree as u64 + 1;
    (Rational::one() - pow(&q, d1)) / int(d1 as i64)
}

/// `[1/(k + Δ + 1), 1/k]`, which contains every class probability.
pub fn class_probability_bounds(k: usize, delta: usize) -> (Rational, Rational) {
    (
        Rational::new(BigInt::one(), BigInt::from(k + delta + 1)),
        Rational::new(BigInt::one(), BigInt::from(k)),
    )
}

/// Monte Carlo frequency with a binomial confidence radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub hits: u64,
    pub trials: u64,
    pub estimate: f64,
    /// Four standard errors of the plug-in estimate, plus `1/trials`.
    pub radius: f64,
}

impl Estimate {
    fn new(hits: u64, trials: u64) -> Self {
        let t = trials as f64;
        let p = hits as f64 / t;
        Estimate {
            hits,
            trials,
            estimate: p,
            radius: 4.0 * (p * (1.0 - p) / t).sqrt() + 1.0 / t,
        }
    }

    /// Plug-in standard error `sqrt(p(1 − p)/T)`.
    pub fn sigma(&self) -> f64 {
        (self.estimate * (1.0 - self.estimate) / self.trials as f64).sqrt()
    }

    pub fn covers(&self, value: f64) -> bool {
        (self.estimate - value).abs() <= self.radius
    }
}

/// Frequency of `v ∈ C_color` over independent runs of the process.
pub fn estimate_class_probability(
    g: &WeightedGraph<Rational>,
    k: usize,
    v: usize,
    color: usize,
    trials: u64,
    seed: u64,
) -> Result<Estimate> {
    check_k(g, k)?;
    if trials == 0 {
        return Err(Error::precondition("trials must be positive"));
    }
    if v >= g.n() || color >= k {
        return Err(Error::precondition("vertex or color out of range"));
    }
    let hits = count_trials(trials, seed, |rng| sample_partial(g, k, rng).color_of(v) == Some(color));
    Ok(Estimate::new(hits, trials))
}

/// Frequency of `v ∈ C_color` for every vertex `v`, from one shared set
/// of runs.
pub fn estimate_all_class_probabilities(
    g: &WeightedGraph<Rational>,
    k: usize,
    color: usize,
    trials: u64,
    seed: u64,
) -> Result<Vec<Estimate>> {
    check_k(g, k)?;
    if trials == 0 {
        return Err(Error::precondition("trials must be positive"));
    }
    if color >= k {
        return Err(Error::precondition("color out of range"));
    }
    let n = g.n();
    let hits = (0..trials.div_ceil(BLOCK))
        .into_par_iter()
        .map(|b| {
            let mut rng = stream(seed, b);
            let mut hits = vec![0u64; n];
            for _ in 0..BLOCK.min(trials - b * BLOCK) {
                for &v in sample_partial(g, k, &mut rng).class(color) {
                    hits[v] += 1;
                }
            }
            hits
        })
        .reduce(
            || vec![0u64; n],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(hits.into_iter().map(|h| Estimate::new(h, trials)).collect())
}

/// One draw of the process, judged against the deviation threshold.
#[derive(Clone, Debug)]
pub struct DeviationAttempt {
    pub partial: PartialColoring,
    pub class_weights: Vec<Rational>,
    /// `E[w(C_i)]`, the same for every class.
    pub expected: Rational,
    /// Every `|w(C_i) − E| <= 6√(w(V) ln k)`, decided with `ln k` rounded
    /// down.
    pub accepted: bool,
}

/// `E[w(C_i)] = Σ_v w_v · Pr{v ∈ C_i}`.
pub fn expected_class_weight(g: &WeightedGraph<Rational>, k: usize) -> Rational {
    (0..g.n())
        .map(|v| g.weight(v) * class_probability_formula(k, g.degree(v)))
        .sum()
}

/// Attempt number `attempt` of the seeded sequence.
pub fn deviation_attempt(g: &WeightedGraph<Rational>, k: usize, seed: u64, attempt: u64) -> Result<DeviationAttempt> {
    check_k(g, k)?;
    let partial = sample_partial(g, k, &mut stream(seed, attempt));
    let class_weights = partial.class_weights(g);
    let expected = expected_class_weight(g, k);
    let radius_sq = int(36) * g.total_weight() * ln(&int(k as i64)).lo;
    let accepted = class_weights.iter().all(|w| {
        let d = w - &expected;
        &d * &d <= radius_sq
    });
    Ok(DeviationAttempt {
        partial,
        class_weights,
        expected,
        accepted,
    })
}

#[derive(Clone, Debug)]
pub struct RandomizedRun {
    pub coloring: Coloring,
    /// Attempts drawn, including the accepted one.
    pub attempts: u64,
}

/// A `(1 + 25ε)`-EQ1 `k`-coloring by rejection sampling, for
/// `ε ∈ (0, 1/100]`, `k >= (Δ+1)/ε` and
/// `max-wt(V) <= ε²·w(V)/(k² ln k)` with `ln k` rounded up.
pub fn randomized_eps_eq1(
    g: &WeightedGraph<Rational>,
    k: usize,
    eps: &Rational,
    max_attempts: u64,
    seed: u64,
) -> Result<RandomizedRun> {
    if !eps.is_positive() || *eps > Rational::new(1.into(), 100.into()) {
        return Err(Error::precondition(format!("ε = {eps} must lie in (0, 1/100]")));
    }
    let delta = g.max_degree();
    if int(k as i64) * eps < int(delta as i64 + 1) || k < 2 {
        return Err(Error::precondition(format!("k = {k} is below (Δ + 1)/ε")));
    }
    let kk = int(k as i64);
    let cap = eps * eps * g.total_weight() / (&kk * &kk * ln(&kk).hi);
    if g.max_weight() > cap {
        return Err(Error::precondition("max weight exceeds ε²·w(V)/(k² ln k)"));
    }
    for attempt in 0..max_attempts {
        let a = deviation_attempt(g, k, seed, attempt)?;
        if !a.accepted {
            continue;
        }
        let coloring = fill_up(g, &a.partial, k)?;
        let alpha = Rational::one() + int(25) * eps;
        if !eq1_factor(g, &coloring).factor.is_at_most(&alpha) {
            return Err(Error::guarantee("accepted attempt exceeds 1 + 25ε"));
        }
        return Ok(RandomizedRun {
            coloring,
            attempts: attempt + 1,
        });
    }
    Err(Error::AttemptsExhausted { attempts: max_attempts })
}

/// Variables `X_i = a_i + (b_i − a_i)·B_i`, where each `B_i` is the parity
/// of a nonempty set of fair latent bits. Variables sharing no latent bit
/// are independent; the dependency graph joins those that share one.
#[derive(Clone, Debug)]
pub struct DependencyInstance {
    intervals: Vec<(Rational, Rational)>,
    latents: Vec<Vec<usize>>,
    latent_count: usize,
    graph: WeightedGraph<Rational>,
}

impl DependencyInstance {
    pub fn new(intervals: Vec<(Rational, Rational)>, latents: Vec<Vec<usize>>) -> Result<Self> {
        if intervals.len() != latents.len() {
            return Err(Error::precondition("one latent set per variable is required"));
        }
        if let Some(i) = intervals.iter().position(|(a, b)| a > b) {
            return Err(Error::precondition(format!("interval {i} has a > b")));
        }
        if latents.iter().any(Vec::is_empty) {
            return Err(Error::precondition("every variable needs at least one latent bit"));
        }
        let latent_count = latents.iter().flatten().max().map_or(0, |&m| m + 1);
        let mut edges = Vec::new();
        for i in 0..latents.len() {
            for j in i + 1..latents.len() {
                if latents[i].iter().any(|l| latents[j].contains(l)) {
                    edges.push((i, j));
                }
            }
        }
        let graph = WeightedGraph::new(vec![Rational::zero(); intervals.len()], &edges)?;
        Ok(DependencyInstance {
            intervals,
            latents,
            latent_count,
            graph,
        })
    }

    /// Mutually independent variables.
    pub fn independent(intervals: Vec<(Rational, Rational)>) -> Result<Self> {
        let latents = (0..intervals.len()).map(|i| vec![i]).collect();
        Self::new(intervals, latents)
    }

    /// Variables `2j` and `2j + 1` are equal copies.
    pub fn copied_pairs(intervals: Vec<(Rational, Rational)>) -> Result<Self> {
        let latents = (0..intervals.len()).map(|i| vec![i / 2]).collect();
        Self::new(intervals, latents)
    }

    /// `X_i` depends on `X_{i−1}` and `X_{i+1}` cyclically.
    pub fn cycle(intervals: Vec<(Rational, Rational)>) -> Result<Self> {
        let n = intervals.len();
        if n < 3 {
            return Err(Error::precondition("a cycle needs at least three variables"));
        }
        let latents = (0..n).map(|i| vec![(i + n - 1) % n, i]).collect();
        Self::new(intervals, latents)
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    pub fn intervals(&self) -> &[(Rational, Rational)] {
        &self.intervals
    }

    pub fn dependency_graph(&self) -> &WeightedGraph<Rational> {
        &self.graph
    }

    /// `E[X] = Σ (a_i + b_i)/2`.
    pub fn mean(&self) -> Rational {
        self.intervals.iter().map(|(a, b)| (a + b) / int(2)).sum()
    }

    fn bits(&self, rng: &mut ChaCha8Rng) -> Vec<bool> {
        let latent: Vec<bool> = (0..self.latent_count).map(|_| rng.gen()).collect();
        self.latents
            .iter()
            .map(|set| set.iter().fold(false, |acc, &l| acc ^ latent[l]))
            .collect()
    }

    /// One joint sample.
    pub fn sample(&self, seed: u64) -> Vec<Rational> {
        let bits = self.bits(&mut ChaCha8Rng::seed_from_u64(seed));
        let xs: Vec<Rational> = self
            .intervals
            .iter()
            .zip(bits)
            .map(|((a, b), on)| if on { b.clone() } else { a.clone() })
            .collect();
        debug_assert!(xs.iter().zip(&self.intervals).all(|(x, (a, b))| a <= x && x <= b));
        xs
    }

    /// Squared widths `(b_i − a_i)²`.
    fn widths_squared(&self) -> Vec<Rational> {
        self.intervals.iter().map(|(a, b)| (b - a) * (b - a)).collect()
    }
}

/// The 2-EQ1 coloring of the dependency graph under weights `(b_i − a_i)²`
/// used by the tail bound, with `k = Δ + 1` classes.
#[derive(Clone, Debug)]
pub struct TailCertificate {
    pub coloring: Coloring,
    pub class_weights: Vec<Rational>,
}

/// Recomputes the certificate and checks
/// `(Δ+1)·w(C_j) <= 2·w([n]) + (Δ+1)·max-wt([n])` for every class.
pub fn tail_certificate(inst: &DependencyInstance) -> Result<TailCertificate> {
    let g = inst.graph.with_weights(inst.widths_squared())?;
    let d1 = g.max_degree() + 1;
    let run = two_eq1_run(&g, d1, DEFAULT_BUDGET)?;
    let class_weights = run.coloring.class_weights(&g);
    let bound = int(2) * g.total_weight() + int(d1 as i64) * g.max_weight();
    if let Some(j) = class_weights.iter().position(|w| int(d1 as i64) * w > bound) {
        return Err(Error::guarantee(format!("class {j} is too heavy for the union bound")));
    }
    Ok(TailCertificate {
        coloring: run.coloring,
        class_weights,
    })
}

/// Upper bound on `Pr{X − E[X] >= t}` for a dependency instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailBound {
    /// `−2t² / (2(Δ+1)Σ(b_i−a_i)² + (Δ+1)²·max(b_i−a_i)²)`; `None` when
    /// every interval is a point.
    pub exponent: Option<Rational>,
    /// Enclosure of `(Δ+1)·exp(exponent)`.
    pub raw: Interval,
    /// The same enclosure capped at 1.
    pub clipped: Interval,
}

/// `(Δ+1)·exp(−2t² / (2(Δ+1)Σ(b_i−a_i)² + (Δ+1)²·max(b_i−a_i)²))`.
pub fn concentration_bound(inst: &DependencyInstance, t: &Rational) -> Result<TailBound> {
    if !t.is_positive() {
        return Err(Error::precondition("t must be positive"));
    }
    tail_certificate(inst)?;
    let d1 = int(inst.graph.max_degree() as i64 + 1);
    let widths = inst.widths_squared();
    let sum: Rational = widths.iter().sum();
    let max = widths.iter().max().cloned().unwrap_or_else(Rational::zero);
    let denom = int(2) * &d1 * &sum + &d1 * &d1 * &max;
    if denom.is_zero() {
        // X is constant, so the tail is empty.
        let zero = Interval::point(Rational::zero());
        return Ok(TailBound {
            exponent: None,
            raw: zero.clone(),
            clipped: zero,
        });
    }
    let exponent = -(int(2) * t * t) / denom;
    let e = exp(&exponent);
    let raw = Interval {
        lo: &e.lo * &d1,
        hi: &e.hi * &d1,
    };
    let one = Rational::one();
    let clipped = Interval {
        lo: raw.lo.clone().min(one.clone()),
        hi: raw.hi.clone().min(one),
    };
    Ok(TailBound {
        exponent: Some(exponent),
        raw,
        clipped,
    })
}

/// Empirical `Pr{X − E[X] >= t}`.
pub fn monte_carlo_tail(inst: &DependencyInstance, t: &Rational, trials: u64, seed: u64) -> Result<Estimate> {
    if trials == 0 {
        return Err(Error::precondition("trials must be positive"));
    }
    // Scale to integers: X − E[X] = Σ (b_i − a_i)(B_i − 1/2).
    let lcm = inst
        .intervals
        .iter()
        .map(|(a, b)| (b - a).denom().clone())
        .chain(std::iter::once(t.denom().clone()))
        .fold(BigInt::one(), |acc, d| num_integer::Integer::lcm(&acc, &d));
    let scale = Rational::from_integer(lcm * 2);
    let widths: Vec<BigInt> = inst
        .intervals
        .iter()
        .map(|(a, b)| ((b - a) * &scale).to_integer())
        .collect();
    let half_total: BigInt = widths.iter().sum::<BigInt>() / 2;
    let target = (t * &scale).to_integer();
    let hits = count_trials(trials, seed, |rng| {
        let bits = inst.bits(rng);
        let on: BigInt = widths.iter().zip(bits).filter(|(_, b)| *b).map(|(w, _)| w).sum();
        on - &half_total >= target
    });
    Ok(Estimate::new(hits, trials))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_random_bounded_degree, WeightModel};
    use crate::num::{ratio, rational_to_f64};
    use crate::verify::is_proper;

    fn unit(n: usize) -> Vec<(Rational, Rational)> {
        vec![(int(0), int(1)); n]
    }

    #[test]
    fn edgeless_is_always_total() {
        let g = WeightedGraph::edgeless(vec![int(1); 30]);
        for seed in 0..20 {
            assert!(random_partial_coloring(&g, 4, seed).unwrap().is_total());
        }
    }

    #[test]
    fn partial_colorings_are_proper_and_deterministic() {
        let g = gen_random_bounded_degree(80, 4, WeightModel::Uniform, 2).unwrap();
        for seed in 0..20 {
            let c = random_partial_coloring(&g, 5, seed).unwrap();
            assert!(is_proper(&g, &c));
            assert_eq!(c, random_partial_coloring(&g, 5, seed).unwrap());
        }
        assert!(random_partial_coloring(&g, 4, 0).is_err());
    }

    #[test]
    fn formula_examples() {
        assert_eq!(class_probability_formula(4, 0), ratio(1, 4));
        // deg 1, k 2: (1 − 1/4)/2.
        assert_eq!(class_probability_formula(2, 1), ratio(3, 8));
        for k in 2..8 {
            for d in 0..k {
                let (lo, hi) = class_probability_bounds(k, k - 1);
                let p = class_probability_formula(k, d);
                assert!(lo <= p && p <= hi);
            }
        }
    }

    #[test]
    fn all_vertex_estimates_agree_with_single_vertex() {
        let g = gen_random_bounded_degree(40, 3, WeightModel::Uniform, 5).unwrap();
        let all = estimate_all_class_probabilities(&g, 4, 1, 5000, 3).unwrap();
        assert_eq!(all.len(), 40);
        for v in [0, 17, 39] {
            assert_eq!(all[v], estimate_class_probability(&g, 4, v, 1, 5000, 3).unwrap());
        }
        for (v, e) in all.iter().enumerate() {
            assert!(e.covers(rational_to_f64(&class_probability_formula(4, g.degree(v)))));
            assert!(e.sigma() <= 0.5 / (5000f64).sqrt());
        }
    }

    #[test]
    fn single_edge_matches_formula() {
        let g = WeightedGraph::new(vec![int(1); 2], &[(0, 1)]).unwrap();
        let est = estimate_class_probability(&g, 2, 1, 0, 40_000, 9).unwrap();
        assert!(est.covers(3.0 / 8.0), "{est:?}");
        let iso = WeightedGraph::edgeless(vec![int(1); 1]);
        assert!(estimate_class_probability(&iso, 3, 0, 2, 20_000, 1).unwrap().covers(1.0 / 3.0));
    }

    #[test]
    fn estimate_is_thread_count_independent() {
        let g = gen_random_bounded_degree(20, 3, WeightModel::Uniform, 5).unwrap();
        let a = estimate_class_probability(&g, 4, 0, 1, 5000, 77).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = pool.install(|| estimate_class_probability(&g, 4, 0, 1, 5000, 77).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn attempts_on_edgeless_uniform_weights() {
        let g = WeightedGraph::edgeless(vec![int(1); 2000]);
        let a = deviation_attempt(&g, 10, 3, 0).unwrap();
        assert_eq!(a.expected, int(200));
        assert!(a.accepted);
        let b = deviation_attempt(&g, 10, 3, 0).unwrap();
        assert_eq!(a.class_weights, b.class_weights);
        let done = fill_up(&g, &a.partial, 10).unwrap();
        assert!(done.is_total());
    }

    #[test]
    fn randomized_precondition_is_checked() {
        let g = WeightedGraph::edgeless(vec![int(1); 2000]);
        assert!(matches!(
            randomized_eps_eq1(&g, 100, &ratio(1, 100), 5, 0),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(randomized_eps_eq1(&g, 100, &ratio(1, 50), 5, 0).is_err());
    }

    #[test]
    fn bound_examples() {
        let one = DependencyInstance::independent(unit(1)).unwrap();
        let b = concentration_bound(&one, &int(1)).unwrap();
        assert_eq!(b.exponent, Some(ratio(-2, 3)));
        assert!((b.raw.midpoint_f64() - 0.513_417_119).abs() < 1e-9);
        let tiny = concentration_bound(&DependencyInstance::cycle(unit(5)).unwrap(), &ratio(1, 1000)).unwrap();
        assert!(tiny.raw.lo > int(2));
        assert_eq!(tiny.clipped.hi, int(1));
    }

    #[test]
    fn wider_intervals_increase_the_bound() {
        let narrow = DependencyInstance::copied_pairs(unit(6)).unwrap();
        let wide = DependencyInstance::copied_pairs(vec![(int(0), int(2)); 6]).unwrap();
        let t = int(2);
        assert!(concentration_bound(&narrow, &t).unwrap().raw.hi < concentration_bound(&wide, &t).unwrap().raw.lo);
    }

    #[test]
    fn empirical_tails_stay_below_bound() {
        let t = int(3);
        for inst in [
            DependencyInstance::independent(unit(20)).unwrap(),
            DependencyInstance::copied_pairs(unit(20)).unwrap(),
            DependencyInstance::cycle(unit(20)).unwrap(),
        ] {
            let mc = monte_carlo_tail(&inst, &t, 20_000, 4).unwrap();
            let bound = concentration_bound(&inst, &t).unwrap();
            assert!(mc.estimate <= rational_to_f64(&bound.clipped.hi) + mc.radius);
        }
    }

    #[test]
    fn tail_beyond_support_is_empty() {
        let inst = DependencyInstance::cycle(unit(6)).unwrap();
        assert_eq!(monte_carlo_tail(&inst, &int(4), 5000, 1).unwrap().hits, 0);
    }

    #[test]
    fn dependency_graph_shapes() {
        assert_eq!(DependencyInstance::independent(unit(4)).unwrap().dependency_graph().edge_count(), 0);
        assert_eq!(DependencyInstance::copied_pairs(unit(6)).unwrap().dependency_graph().max_degree(), 1);
        assert_eq!(DependencyInstance::cycle(unit(6)).unwrap().dependency_graph().edge_count(), 6);
        assert_eq!(DependencyInstance::cycle(unit(4)).unwrap().mean(), int(2));
        assert!(DependencyInstance::new(vec![(int(2), int(1))], vec![vec![0]]).is_err());
    }
}
