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

//! EQ1 colorings under weights.
//!
//! Three constructions share one idea: cut the vertices, sorted by weight,
//! into parts whose sizes are multiples of `k`, color equitably on every
//! part, and compare classes part by part.
//!
//! * [`eq1_coloring_distinct_weights`] merges weight-constant chunks, so
//!   the number of parts depends only on the number of distinct weights.
//! * [`eq1_coloring_sqrt`] uses the raw chunks; `k >= 4√(nΔ)` suffices.
//! * [`eps_eq1_coloring`] buckets the light vertices geometrically and
//!   defers a few of them, giving a `(1 + 3ε)` guarantee with a number of
//!   colors independent of `n` and of the weights.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::coloring::{Coloring, VertexPartition};
use crate::error::{Error, Result};
use crate::extend::fill_up;
use crate::graph::WeightedGraph;
use crate::num::transcendental::ln;
use crate::num::{ceil_to_int, int, pow, Rational, Scalar};
use crate::partitioneq::{equitable_for_multiples, partition_equitable_run};
use crate::verify::{compute_eta, eq1_factor, is_proper, Factor};

fn padding_for(n: usize, k: usize) -> usize {
    (k - n % k) % k
}

/// Proper, total and within `alpha`, or a guarantee error naming `what`.
fn check_result<W: Scalar>(g: &WeightedGraph<W>, c: &Coloring, alpha: &W, what: &str) -> Result<Factor<W>> {
    if !is_proper(g, c) || !c.is_total() {
        return Err(Error::guarantee(format!("{what}: output is not a proper total coloring")));
    }
    let f = eq1_factor(g, c).factor;
    if !f.is_at_most(alpha) {
        return Err(Error::guarantee(format!("{what}: EQ1 factor {f} exceeds {alpha}")));
    }
    Ok(f)
}

/// Consecutive size-`k` chunks of `order`; the last one may be short.
fn chunks(order: &[usize], k: usize) -> Vec<Vec<usize>> {
    order.chunks(k).map(<[usize]>::to_vec).collect()
}

/// Size-`k` chunks of all vertices by nonincreasing weight, with adjacent
/// chunks merged while their union has a single weight. Requires `k | n`.
pub fn merged_chunk_partition<W: Scalar>(g: &WeightedGraph<W>, k: usize) -> Result<VertexPartition> {
    if k == 0 || !g.n().is_multiple_of(k) {
        return Err(Error::precondition(format!("k = {k} must divide n = {}", g.n())));
    }
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for chunk in chunks(&g.vertices_by_weight_desc(), k) {
        match parts.last_mut() {
            // Sorted order: the union is constant iff the heaviest of the
            // earlier part equals the lightest of the chunk.
            Some(last) if g.weight(last[0]) == g.weight(*chunk.last().unwrap()) => last.extend(chunk),
            _ => parts.push(chunk),
        }
    }
    VertexPartition::new(parts)
}

/// An EQ1 `k`-coloring for `k >= (8d + 10)Δ`, `d` the number of distinct
/// weights.
pub fn eq1_coloring_distinct_weights<W: Scalar>(g: &WeightedGraph<W>, k: usize) -> Result<Coloring> {
    let n = g.n();
    let delta = g.max_degree();
    let d = g.distinct_weight_count();
    if k < delta + 1 {
        return Err(Error::precondition(format!("k = {k} is below Δ + 1 = {}", delta + 1)));
    }
    if k < (8 * d + 10) * delta {
        return Err(Error::precondition(format!(
            "k = {k} is below (8d + 10)Δ = {} with d = {d}",
            (8 * d + 10) * delta
        )));
    }
    if n == 0 {
        return Ok(Coloring::empty(0, k));
    }
    let padded = g.with_isolated_padding(padding_for(n, k));
    let p = merged_chunk_partition(&padded, k)?;
    if p.d() > 2 * (d + 1) {
        return Err(Error::guarantee(format!(
            "merging left {} parts, above 2(d + 1) = {}",
            p.d(),
            2 * (d + 1)
        )));
    }
    let c = equitable_for_multiples(&padded, &p, k)?.truncated(n);
    check_result(g, &c, &W::one(), "distinct-weight EQ1")?;
    Ok(c)
}

/// An EQ1 `k`-coloring whenever `k² >= 16nΔ`.
pub fn eq1_coloring_sqrt<W: Scalar>(g: &WeightedGraph<W>, k: usize) -> Result<Coloring> {
    let n = g.n();
    let delta = g.max_degree();
    if k == 0 {
        return Err(Error::precondition("k must be positive"));
    }
    if (k as u128).pow(2) < 16 * n as u128 * delta as u128 {
        return Err(Error::precondition(format!("k = {k} fails k² >= 16nΔ with n = {n}, Δ = {delta}")));
    }
    let c = if n <= k {
        let classes = (0..k).map(|i| if i < n { vec![i] } else { vec![] }).collect();
        Coloring::from_classes(n, classes)?
    } else {
        let padded = g.with_isolated_padding(padding_for(n, k));
        let p = VertexPartition::new(chunks(&padded.vertices_by_weight_desc(), k))?;
        equitable_for_multiples(&padded, &p, k)?.truncated(n)
    };
    check_result(g, &c, &W::one(), "sqrt EQ1")?;
    Ok(c)
}

fn check_eps(eps: &Rational) -> Result<()> {
    if !eps.is_positive() || *eps > Rational::new(1.into(), 10.into()) {
        return Err(Error::precondition(format!("ε = {eps} must lie in (0, 1/10]")));
    }
    Ok(())
}

fn to_usize(v: &BigInt, what: &str) -> Result<usize> {
    v.to_usize().ok_or_else(|| Error::precondition(format!("{what} = {v} does not fit in memory")))
}

/// `x = ⌈1/ε²⌉` and `y = ⌈((1+ε)/ε)·ln(1/ε) + 1⌉`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BucketParams {
    pub x: usize,
    pub y: usize,
}

/// `y` is taken from the upper end of a certified `ln` enclosure.
pub fn bucket_params(eps: &Rational) -> Result<BucketParams> {
    check_eps(eps)?;
    let one = Rational::one();
    let x = ceil_to_int(&(&one / (eps * eps)));
    let ln_inv = ln(&eps.recip());
    let y = ceil_to_int(&((&one + eps) / eps * &ln_inv.hi + &one));
    Ok(BucketParams {
        x: to_usize(&x, "x")?,
        y: to_usize(&y, "y")?,
    })
}

/// Smallest admissible `k`: `⌈(4(1+ε)²/ε²)(ln(1/ε) + 4)⌉·Δ`, with `ln`
/// rounded up.
pub fn eps_color_threshold(eps: &Rational, delta: usize) -> Result<usize> {
    check_eps(eps)?;
    let one = Rational::one();
    let ln_inv = ln(&eps.recip());
    let lead = int(4) * (&one + eps) * (&one + eps) / (eps * eps);
    let per_delta = to_usize(&ceil_to_int(&(lead * (ln_inv.hi + int(4)))), "threshold")?;
    per_delta
        .checked_mul(delta)
        .ok_or_else(|| Error::precondition("color threshold overflows"))
}

/// The `j >= 1` with `weight/pivot ∈ ((1+ε)^−j, (1+ε)^−(j−1)]`.
///
/// Exponential then binary search over exact powers of `1 + ε`.
///
/// # Panics
///
/// Unless `0 < weight <= pivot` and `ε > 0`.
pub fn bucket_index_of(weight: &Rational, pivot: &Rational, eps: &Rational) -> u64 {
    assert!(weight.is_positive() && weight <= pivot, "weight must lie in (0, pivot]");
    assert!(eps.is_positive(), "ε must be positive");
    let base = Rational::one() + eps;
    // j − 1 is the largest m with (1+ε)^m <= pivot/weight.
    let s = pivot / weight;
    let mut hi = 1u64;
    while pow(&base, hi) <= s {
        hi *= 2;
    }
    let mut lo = hi / 2;
    // Invariant: base^lo <= s < base^hi.
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if pow(&base, mid) <= s {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo + 1
}

/// Weight set aside on behalf of one surviving bucket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BucketDeferral {
    pub index: u64,
    pub size: usize,
    pub deferred_weight: Rational,
    /// `|B_j|·pivot/(1+ε)^(j−1) · ε/(1−ε)`.
    pub bound: Rational,
}

/// Deferred weights next to the bounds they must respect, unnormalized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeferralLedger {
    /// Weight deferred to make bucket sizes multiples of `k`.
    pub multiple_weight: Rational,
    /// `k(1+ε)/ε · pivot`.
    pub multiple_bound: Rational,
    pub per_bucket: Vec<BucketDeferral>,
    pub eta: Rational,
    /// `((1+ε)/ε)²(ln(1/ε) + 2)`, `ln` rounded down.
    pub eta_bound: Rational,
}

impl DeferralLedger {
    pub fn holds(&self) -> bool {
        self.multiple_weight <= self.multiple_bound
            && self.per_bucket.iter().all(|b| b.deferred_weight <= b.bound)
            && self.eta <= self.eta_bound
    }
}

/// Heavy chunks, geometric buckets and deferred vertices.
///
/// Without a pivot (`kx >= n`), every positive-weight vertex sits in a
/// heavy chunk and the last chunk may be short.
#[derive(Clone, Debug)]
pub struct BucketPlan {
    pub eps: Rational,
    pub k: usize,
    pub x: usize,
    pub y: usize,
    pub t_parts: Vec<Vec<usize>>,
    /// Surviving buckets by index; each size is a positive multiple of `k`.
    pub buckets: BTreeMap<u64, Vec<usize>>,
    pub deferred: Vec<usize>,
    pub zero_weight: Vec<usize>,
    /// `w_{kx+1}`, the weight of the heaviest non-chunk vertex.
    pub pivot: Option<Rational>,
    pub ledger: DeferralLedger,
}

impl BucketPlan {
    /// Nonempty chunks and buckets by nondecreasing size, chunks first on
    /// ties, buckets by index.
    pub fn partition(&self) -> Result<VertexPartition> {
        let parts = self
            .t_parts
            .iter()
            .chain(self.buckets.values())
            .filter(|p| !p.is_empty())
            .cloned()
            .collect();
        Ok(VertexPartition::new(parts)?.sorted_by_size())
    }
}

/// Residue collection `h ∈ 1..=y` and position `t` of bucket `j = ty + h`.
fn collection_of(j: u64, y: u64) -> (u64, u64) {
    ((j - 1) % y + 1, (j - 1) / y)
}

struct Powers {
    base: Rational,
    cache: Vec<Rational>,
}

impl Powers {
    fn new(base: Rational) -> Self {
        Powers {
            base,
            cache: vec![Rational::one()],
        }
    }

    fn get(&mut self, m: u64) -> Rational {
        let m = usize::try_from(m).expect("exponent fits in memory");
        while self.cache.len() <= m {
            let next = self.cache.last().unwrap() * &self.base;
            self.cache.push(next);
        }
        self.cache[m].clone()
    }
}

/// Builds chunks and buckets, defers vertices and checks the deferral
/// ledger. Does not check `k` against the color threshold.
pub fn plan_buckets(g: &WeightedGraph<Rational>, k: usize, eps: &Rational) -> Result<BucketPlan> {
    let BucketParams { x, y } = bucket_params(eps)?;
    if k == 0 {
        return Err(Error::precondition("k must be positive"));
    }
    let order = g.vertices_by_weight_desc();
    let (positive, zero_weight): (Vec<usize>, Vec<usize>) = order.iter().partition(|&&v| g.weight(v).is_positive());
    let one = Rational::one();
    let ln_inv = ln(&eps.recip());
    let ratio = (&one + eps) / eps;
    let eta_bound = &ratio * &ratio * (&ln_inv.lo + int(2));
    let heavy = k.saturating_mul(x);

    if heavy >= positive.len() {
        let t_parts = chunks(&positive, k);
        return Ok(BucketPlan {
            eps: eps.clone(),
            k,
            x,
            y,
            ledger: DeferralLedger {
                multiple_weight: Rational::zero(),
                multiple_bound: Rational::zero(),
                per_bucket: Vec::new(),
                eta: int(t_parts.len() as i64),
                eta_bound,
            },
            t_parts,
            buckets: BTreeMap::new(),
            deferred: Vec::new(),
            zero_weight,
            pivot: None,
        });
    }

    let t_parts = chunks(&positive[..heavy], k);
    let rest = &positive[heavy..];
    let pivot = g.weight(rest[0]).clone();

    // Bucket indices depend on the weight only.
    let mut distinct: Vec<&Rational> = rest.iter().map(|&v| g.weight(v)).collect();
    distinct.dedup();
    let indices: BTreeMap<&Rational, u64> = distinct
        .par_iter()
        .map(|&w| (w, bucket_index_of(w, &pivot, eps)))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    let mut buckets: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for &v in rest {
        buckets.entry(indices[g.weight(v)]).or_default().push(v);
    }

    // Sizes to multiples of k: drop the lightest members.
    let mut deferred = Vec::new();
    let mut multiple_weight = Rational::zero();
    for members in buckets.values_mut() {
        let cut = members.len() - members.len() % k;
        for v in members.drain(cut..) {
            multiple_weight += g.weight(v);
            deferred.push(v);
        }
    }
    buckets.retain(|_, m| !m.is_empty());
    let multiple_bound = int(k as i64) * &ratio * &pivot;

    // Within each residue collection, later buckets that are not
    // geometrically larger are deferred whole.
    let mut powers = Powers::new(&one + eps);
    let y64 = y as u64;
    let mut by_collection: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for &j in buckets.keys() {
        by_collection.entry(collection_of(j, y64).0).or_default().push(j);
    }
    let mut due: BTreeMap<u64, Rational> = BTreeMap::new();
    for members in by_collection.values() {
        for (a, &ja) in members.iter().enumerate() {
            let Some(size_a) = buckets.get(&ja).map(Vec::len) else {
                continue;
            };
            let ta = collection_of(ja, y64).1;
            for &jb in &members[a + 1..] {
                let Some(size_b) = buckets.get(&jb).map(Vec::len) else {
                    continue;
                };
                let tb = collection_of(jb, y64).1;
                if int(size_b as i64) <= powers.get(tb - ta) * int(size_a as i64) {
                    let gone = buckets.remove(&jb).unwrap();
                    let entry = due.entry(ja).or_insert_with(Rational::zero);
                    for v in gone {
                        *entry += g.weight(v);
                        deferred.push(v);
                    }
                }
            }
        }
    }
    deferred.sort_unstable();

    // Prefix sums within each collection stay within (1+ε)/ε of the last.
    for members in by_collection.values() {
        let mut prefix = 0usize;
        for j in members {
            if let Some(b) = buckets.get(j) {
                prefix += b.len();
                if int(prefix as i64) > &ratio * int(b.len() as i64) {
                    return Err(Error::guarantee(format!("bucket {j} is not geometrically larger than its predecessors")));
                }
            }
        }
    }

    let shrink = eps / (&one - eps);
    let per_bucket = buckets
        .iter()
        .map(|(&j, b)| BucketDeferral {
            index: j,
            size: b.len(),
            deferred_weight: due.get(&j).cloned().unwrap_or_else(Rational::zero),
            bound: int(b.len() as i64) * &pivot / powers.get(j - 1) * &shrink,
        })
        .collect();

    let mut plan = BucketPlan {
        eps: eps.clone(),
        k,
        x,
        y,
        t_parts,
        buckets,
        deferred,
        zero_weight,
        pivot: Some(pivot),
        ledger: DeferralLedger {
            multiple_weight,
            multiple_bound,
            per_bucket,
            eta: Rational::zero(),
            eta_bound,
        },
    };
    plan.ledger.eta = compute_eta(&plan.partition()?)?;
    if !plan.ledger.holds() {
        return Err(Error::guarantee(format!("deferral ledger fails: {:?}", plan.ledger)));
    }
    Ok(plan)
}

/// Colors a plan: equitable on every part, then deferred and zero-weight
/// vertices by filling up. Requires `k >= (4η + 2)Δ`.
pub fn color_from_plan(g: &WeightedGraph<Rational>, plan: &BucketPlan) -> Result<Coloring> {
    let n = g.n();
    let k = plan.k;
    let base = match &plan.pivot {
        None if plan.t_parts.is_empty() => Coloring::empty(n, k),
        None => {
            // Pad the short chunk with isolated zero-weight dummies.
            let short = plan.t_parts.last().map_or(0, |p| padding_for(p.len(), k));
            let padded = g.with_isolated_padding(short);
            let mut parts = plan.t_parts.clone();
            parts.last_mut().unwrap().extend(n..n + short);
            equitable_for_multiples(&padded, &VertexPartition::new(parts)?, k)?.truncated(n)
        }
        Some(pivot) => {
            let c = partition_equitable_run(g, &plan.partition()?, k)?.coloring;
            let floor = int(plan.x as i64) * pivot;
            if let Some(i) = (0..k).find(|&i| g.weight_of(c.class(i).iter().copied()) < floor) {
                return Err(Error::guarantee(format!("class {i} carries less than x·pivot from the chunks")));
            }
            c
        }
    };
    fill_up(g, &base, k)
}

/// Which construction produced a `(1 + 3ε)`-EQ1 coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EpsRoute {
    /// Fewer than `2/ε²` vertices: the `4√(nΔ)` construction.
    Sqrt,
    /// `kx >= n`: heavy chunks only, which is exactly EQ1.
    Chunks,
    Buckets,
}

#[derive(Clone, Debug)]
pub struct EpsEq1Run {
    pub coloring: Coloring,
    pub route: EpsRoute,
    pub plan: Option<BucketPlan>,
    pub factor: Factor<Rational>,
}

/// A `(1 + 3ε)`-EQ1 `k`-coloring with the bucket plan that produced it.
pub fn eps_eq1_run(g: &WeightedGraph<Rational>, k: usize, eps: &Rational) -> Result<EpsEq1Run> {
    check_eps(eps)?;
    let delta = g.max_degree();
    let need = eps_color_threshold(eps, delta)?;
    if k < need.max(delta + 1) {
        return Err(Error::precondition(format!("k = {k} is below the threshold {}", need.max(delta + 1))));
    }
    let alpha = Rational::one() + int(3) * eps;
    if int(g.n() as i64) * eps * eps < int(2) {
        let coloring = eq1_coloring_sqrt(g, k)?;
        let factor = check_result(g, &coloring, &alpha, "(1 + 3ε)-EQ1")?;
        return Ok(EpsEq1Run {
            coloring,
            route: EpsRoute::Sqrt,
            plan: None,
            factor,
        });
    }
    let plan = plan_buckets(g, k, eps)?;
    let coloring = color_from_plan(g, &plan)?;
    let factor = check_result(g, &coloring, &alpha, "(1 + 3ε)-EQ1")?;
    Ok(EpsEq1Run {
        coloring,
        route: if plan.pivot.is_some() { EpsRoute::Buckets } else { EpsRoute::Chunks },
        plan: Some(plan),
        factor,
    })
}

pub fn eps_eq1_coloring(g: &WeightedGraph<Rational>, k: usize, eps: &Rational) -> Result<Coloring> {
    eps_eq1_run(g, k, eps).map(|r| r.coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_random_bounded_degree, WeightModel};
    use crate::num::ratio;
    use crate::verify::check_partition_equitable;

    fn tenth() -> Rational {
        ratio(1, 10)
    }

    #[test]
    fn params_for_one_tenth() {
        assert_eq!(bucket_params(&tenth()).unwrap(), BucketParams { x: 100, y: 27 });
        assert_eq!(eps_color_threshold(&tenth(), 1).unwrap(), 3051);
        assert_eq!(eps_color_threshold(&tenth(), 2).unwrap(), 6102);
        assert!(bucket_params(&ratio(1, 5)).is_err());
        assert!(bucket_params(&int(0)).is_err());
    }

    #[test]
    fn bucket_index_examples() {
        let e = tenth();
        assert_eq!(bucket_index_of(&int(3), &int(3), &e), 1);
        assert_eq!(bucket_index_of(&ratio(10, 11), &int(1), &e), 2);
        assert_eq!(bucket_index_of(&ratio(1, 2), &int(1), &e), 8);
        assert_eq!(bucket_index_of(&ratio(1, 1000), &int(1), &e), 73);
    }

    #[test]
    fn bucket_index_matches_interval_definition() {
        let e = ratio(1, 7);
        let base = Rational::one() + &e;
        for (p, q) in [(1, 1), (1, 3), (5, 9), (2, 1000), (999, 1000), (1, 1 << 40)] {
            let r = ratio(p, q);
            let j = bucket_index_of(&r, &int(1), &e);
            assert!(r > Rational::one() / pow(&base, j));
            assert!(r <= Rational::one() / pow(&base, j - 1));
        }
    }

    #[test]
    fn merging_joins_equal_chunks() {
        let g = WeightedGraph::edgeless(vec![int(5), int(5), int(5), int(5), int(3), int(1)]);
        let p = merged_chunk_partition(&g, 2).unwrap();
        assert_eq!(p.parts(), &[vec![0, 1, 2, 3], vec![4, 5]]);
        let mixed = WeightedGraph::edgeless(vec![int(5), int(4), int(4), int(4)]);
        assert_eq!(merged_chunk_partition(&mixed, 2).unwrap().d(), 2);
    }

    #[test]
    fn distinct_weights_edgeless_two_values() {
        let mut w = vec![int(7); 19];
        w.extend(vec![ratio(1, 3); 40]);
        let g = WeightedGraph::edgeless(w);
        for k in [1, 3, 26, 59, 80] {
            let c = eq1_coloring_distinct_weights(&g, k).unwrap();
            assert!(eq1_factor(&g, &c).factor.is_at_most(&int(1)));
        }
    }

    #[test]
    fn distinct_weights_on_a_matching() {
        let g = gen_random_bounded_degree(70, 1, WeightModel::FewDistinct(2), 5).unwrap();
        let c = eq1_coloring_distinct_weights(&g, 26).unwrap();
        assert!(is_proper(&g, &c));
        assert!(eq1_coloring_distinct_weights(&g, 25).is_err());
    }

    #[test]
    fn equal_weights_are_balanced() {
        let g = gen_random_bounded_degree(60, 1, WeightModel::FewDistinct(1), 2).unwrap();
        let c = eq1_coloring_distinct_weights(&g, 18).unwrap();
        let sizes: Vec<usize> = c.classes().iter().map(Vec::len).collect();
        assert!(sizes.iter().max().unwrap() - sizes.iter().min().unwrap() <= 1);
    }

    #[test]
    fn chunk_parts_are_equitable() {
        let g = gen_random_bounded_degree(48, 1, WeightModel::Uniform, 11).unwrap();
        let p = merged_chunk_partition(&g, 24).unwrap();
        let c = equitable_for_multiples(&g, &p, 24).unwrap();
        assert!(check_partition_equitable(&c, &p, 24));
        assert!(eq1_factor(&g, &c).factor.is_at_most(&int(1)));
    }

    #[test]
    fn sqrt_examples() {
        let matching: Vec<(usize, usize)> = (0..8).map(|i| (2 * i, 2 * i + 1)).collect();
        let g = WeightedGraph::new(vec![int(1); 16], &matching).unwrap();
        let c = eq1_coloring_sqrt(&g, 16).unwrap();
        assert!(c.classes().iter().all(|cl| cl.len() == 1));
        assert_eq!(eq1_factor(&g, &c).factor, Factor::Finite(int(0)));

        let weights: Vec<Rational> = (1..=16).map(|i| ratio(i * i, 3)).collect();
        let h = WeightedGraph::new(weights, &matching).unwrap();
        assert!(eq1_factor(&h, &eq1_coloring_sqrt(&h, 16).unwrap()).factor.is_at_most(&int(1)));
        assert!(matches!(eq1_coloring_sqrt(&h, 15), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn sqrt_with_more_vertices_than_colors() {
        let g = gen_random_bounded_degree(200, 1, WeightModel::Uniform, 4).unwrap();
        let c = eq1_coloring_sqrt(&g, 57).unwrap();
        assert!(eq1_factor(&g, &c).factor.is_at_most(&int(1)));
    }

    #[test]
    fn eps_small_instance_falls_back() {
        let g = gen_random_bounded_degree(150, 1, WeightModel::Uniform, 1).unwrap();
        let run = eps_eq1_run(&g, 3051, &tenth()).unwrap();
        assert_eq!(run.route, EpsRoute::Sqrt);
        assert!(eps_eq1_run(&g, 3050, &tenth()).is_err());
    }

    #[test]
    fn eps_chunks_only_when_heavy_part_covers_everything() {
        let g = gen_random_bounded_degree(500, 1, WeightModel::Geometric, 8).unwrap();
        let run = eps_eq1_run(&g, 3051, &tenth()).unwrap();
        assert_eq!(run.route, EpsRoute::Chunks);
        assert!(run.factor.is_at_most(&int(1)));
    }

    #[test]
    fn eps_zero_weights_are_stripped_and_refilled() {
        let mut w = vec![int(0); 10];
        w.extend((1..=300).map(|i| ratio(i, 7)));
        let g = WeightedGraph::edgeless(w);
        let plan = plan_buckets(&g, 2, &tenth()).unwrap();
        assert_eq!(plan.zero_weight.len(), 10);
        let c = color_from_plan(&g, &plan).unwrap();
        assert!(c.is_total());
    }

    #[test]
    fn plan_buckets_ledger_and_sizes() {
        // Edgeless, so any k passes the partition precondition.
        let g = gen_random_bounded_degree(3000, 0, WeightModel::Geometric, 3).unwrap();
        let plan = plan_buckets(&g, 3, &tenth()).unwrap();
        let pivot = plan.pivot.clone().unwrap();
        assert_eq!(plan.t_parts.len(), 100);
        assert!(plan.buckets.values().all(|b| b.len() % 3 == 0 && !b.is_empty()));
        assert!(plan.ledger.holds());
        for (&j, b) in &plan.buckets {
            for &v in b {
                assert_eq!(bucket_index_of(g.weight(v), &pivot, &tenth()), j);
            }
        }
        let covered = plan.partition().unwrap().covered_count() + plan.deferred.len() + plan.zero_weight.len();
        assert_eq!(covered, 3000);
        let c = color_from_plan(&g, &plan).unwrap();
        assert!(c.is_total());
        assert!(eq1_factor(&g, &c).factor.is_at_most(&ratio(13, 10)));
    }

    #[test]
    fn deferral_of_flat_buckets() {
        // Two buckets in the same collection with equal sizes: the later one
        // is deferred whole.
        let e = tenth();
        let mut w = vec![int(100); 100];
        w.extend(vec![int(1); 4]);
        let far = int(1) / pow(&(int(1) + &e), 27);
        w.extend(vec![far; 4]);
        let g = WeightedGraph::edgeless(w);
        let plan = plan_buckets(&g, 1, &e).unwrap();
        assert_eq!(plan.buckets.keys().copied().collect::<Vec<_>>(), vec![1]);
        assert_eq!(plan.deferred, (104..108).collect::<Vec<_>>());
        assert_eq!(plan.ledger.per_bucket[0].deferred_weight, int(4) * int(1) / pow(&(int(1) + &e), 27));
    }
}
