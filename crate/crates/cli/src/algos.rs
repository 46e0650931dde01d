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

//! Dispatch over algorithms, default color counts and self-verification.

use clap::ValueEnum;
use equicolor::io::AnyGraph;
use equicolor::lowmax::{greedy_coloring, low_max_wt_eq1};
use equicolor::num::{ceil_to_int, int};
use equicolor::partitioneq::partition_equitable_run;
use equicolor::random::randomized_eps_eq1;
use equicolor::swap2eq1::two_eq1_coloring;
use equicolor::verify::{check_partition_equitable, compute_eta, eq1_factor, first_conflict};
use equicolor::weightedeq1::{eps_color_threshold, eps_eq1_run, eq1_coloring_distinct_weights, eq1_coloring_sqrt};
use equicolor::{Coloring, Error, Factor, Graph, Rational, Scalar, VertexPartition, WeightedGraph};

use crate::failure::{CmdResult, Failure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Algo {
    #[value(name = "2eq1")]
    TwoEq1,
    Partition,
    #[value(name = "eq1-d")]
    Eq1D,
    #[value(name = "eq1-sqrt")]
    Eq1Sqrt,
    #[value(name = "eps-eq1")]
    EpsEq1,
    Lowmax,
    Random,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::TwoEq1 => "2eq1",
            Algo::Partition => "partition",
            Algo::Eq1D => "eq1-d",
            Algo::Eq1Sqrt => "eq1-sqrt",
            Algo::EpsEq1 => "eps-eq1",
            Algo::Lowmax => "lowmax",
            Algo::Random => "random",
        }
    }

    pub fn needs_eps(self) -> bool {
        matches!(self, Algo::EpsEq1 | Algo::Lowmax | Algo::Random)
    }
}

/// Initial coloring for `lowmax`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Start {
    #[default]
    Greedy,
    /// An optimal coloring from the exact chromatic number search.
    Chromatic,
}

#[derive(Clone, Debug)]
pub struct Params {
    pub eps: Option<Rational>,
    pub seed: u64,
    pub partition: Option<VertexPartition>,
    pub max_attempts: u64,
    pub start: Start,
    pub budget: u64,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub coloring: Coloring,
    pub k: usize,
    pub augmentations: Option<usize>,
    pub attempts: Option<u64>,
    pub route: Option<String>,
}

impl Outcome {
    fn plain(coloring: Coloring, k: usize) -> Self {
        Outcome {
            coloring,
            k,
            augmentations: None,
            attempts: None,
            route: None,
        }
    }
}

fn eps(p: &Params) -> CmdResult<&Rational> {
    p.eps.as_ref().ok_or_else(|| Failure::usage("this algorithm needs --eps"))
}

fn partition(p: &Params) -> CmdResult<&VertexPartition> {
    p.partition.as_ref().ok_or_else(|| Failure::usage("--algo partition needs --partition"))
}

fn start_coloring<W: Scalar>(g: &WeightedGraph<W>, p: &Params) -> CmdResult<Coloring> {
    Ok(match p.start {
        Start::Greedy => greedy_coloring(g),
        Start::Chromatic => equicolor::instances::oracle_chromatic_number(g, p.budget)?.1,
    })
}

/// Least `k` with `k² >= m`.
fn ceil_sqrt(m: u128) -> usize {
    let mut k = (m as f64).sqrt() as u128;
    while k * k < m {
        k += 1;
    }
    while k > 0 && (k - 1) * (k - 1) >= m {
        k -= 1;
    }
    k as usize
}

/// The smallest `k` the algorithm's guarantee admits on `g`.
pub fn default_k<W: Scalar>(g: &WeightedGraph<W>, algo: Algo, p: &Params) -> CmdResult<usize> {
    let delta = g.max_degree();
    let k = match algo {
        Algo::TwoEq1 => delta + 1,
        Algo::Partition => {
            let eta = compute_eta(&partition(p)?.sorted_by_size())?;
            let need = ceil_to_int(&((int(4) * eta + int(2)) * int(delta as i64)));
            usize::try_from(need).map_err(|_| Failure::from(Error::PreconditionViolated("k overflows".into())))?
        }
        Algo::Eq1D => (8 * g.distinct_weight_count() + 10) * delta,
        Algo::Eq1Sqrt => ceil_sqrt(16 * g.n() as u128 * delta as u128),
        Algo::EpsEq1 => eps_color_threshold(eps(p)?, delta)?,
        Algo::Lowmax => {
            let kappa = start_coloring(g, p)?.classes().iter().filter(|c| !c.is_empty()).count();
            let need = ceil_to_int(&(int(kappa as i64) / eps(p)?));
            usize::try_from(need).unwrap_or(usize::MAX).max(2 * delta)
        }
        Algo::Random => {
            let need = ceil_to_int(&(int(delta as i64 + 1) / eps(p)?));
            usize::try_from(need).unwrap_or(usize::MAX).max(2)
        }
    };
    Ok(k.max(delta + 1).max(1))
}

fn run_generic<W: Scalar>(g: &WeightedGraph<W>, algo: Algo, k: usize, p: &Params) -> CmdResult<Outcome> {
    Ok(match algo {
        Algo::TwoEq1 => Outcome::plain(two_eq1_coloring(g, k)?, k),
        Algo::Partition => {
            let run = partition_equitable_run(g, &partition(p)?.sorted_by_size(), k)?;
            let augmentations = Some(run.total_augmentations());
            Outcome {
                augmentations,
                ..Outcome::plain(run.coloring, k)
            }
        }
        Algo::Eq1D => Outcome::plain(eq1_coloring_distinct_weights(g, k)?, k),
        Algo::Eq1Sqrt => Outcome::plain(eq1_coloring_sqrt(g, k)?, k),
        Algo::Lowmax => {
            let start = start_coloring(g, p)?;
            Outcome::plain(low_max_wt_eq1(g, k, eps(p)?, &start)?, k)
        }
        Algo::EpsEq1 | Algo::Random => {
            return Err(Error::PreconditionViolated(format!("{} needs rational weights", algo.name())).into())
        }
    })
}

fn run_rational(g: &Graph, algo: Algo, k: usize, p: &Params) -> CmdResult<Outcome> {
    match algo {
        Algo::EpsEq1 => {
            let run = eps_eq1_run(g, k, eps(p)?)?;
            Ok(Outcome {
                route: Some(format!("{:?}", run.route).to_lowercase()),
                ..Outcome::plain(run.coloring, k)
            })
        }
        Algo::Random => {
            let run = randomized_eps_eq1(g, k, eps(p)?, p.max_attempts, p.seed)?;
            Ok(Outcome {
                attempts: Some(run.attempts),
                ..Outcome::plain(run.coloring, k)
            })
        }
        _ => run_generic(g, algo, k, p),
    }
}

/// Runs `algo` with `k` colors, or its default when `k` is `None`.
pub fn run(g: &AnyGraph, algo: Algo, k: Option<usize>, p: &Params) -> CmdResult<Outcome> {
    match g {
        AnyGraph::Rational(g) => {
            let k = match k {
                Some(k) => k,
                None => default_k(g, algo, p)?,
            };
            run_rational(g, algo, k, p)
        }
        AnyGraph::Surd(g) => {
            let k = match k {
                Some(k) => k,
                None => default_k(g, algo, p)?,
            };
            run_generic(g, algo, k, p)
        }
    }
}

/// The factor each algorithm guarantees; `None` for `partition`, which
/// guarantees equitability instead.
pub fn guaranteed_bound(algo: Algo, p: &Params) -> CmdResult<Option<Rational>> {
    let one = int(1);
    Ok(match algo {
        Algo::TwoEq1 => Some(int(2)),
        Algo::Partition => None,
        Algo::Eq1D | Algo::Eq1Sqrt => Some(one),
        Algo::EpsEq1 => Some(one + int(3) * eps(p)?),
        Algo::Lowmax => Some(one + int(7) * eps(p)?),
        Algo::Random => Some(one + int(25) * eps(p)?),
    })
}

fn verify_generic<W: Scalar>(g: &WeightedGraph<W>, algo: Algo, out: &Outcome, p: &Params) -> CmdResult<String> {
    let c = &out.coloring;
    if c.k() != out.k {
        return Err(Failure::verification(format!("{} classes, expected {}", c.k(), out.k)));
    }
    if let Some((u, v)) = first_conflict(g, c) {
        return Err(Failure::verification(format!("edge ({u}, {v}) is monochromatic")));
    }
    let factor = eq1_factor(g, c).factor;
    match guaranteed_bound(algo, p)? {
        None => {
            if !check_partition_equitable(c, partition(p)?, out.k) {
                return Err(Failure::verification("coloring is not partition-equitable"));
            }
        }
        Some(bound) => {
            if !c.is_total() {
                return Err(Failure::verification("coloring is not total"));
            }
            if !factor.is_at_most(&W::from_rational(&bound)) {
                return Err(Failure::verification(format!(
                    "factor {factor} exceeds the guaranteed {}",
                    bound.to_exact_string()
                )));
            }
        }
    }
    Ok(factor.to_string())
}

/// Checks the output against the algorithm's guarantee; returns the exact
/// EQ1 factor as text.
pub fn verify_outcome(g: &AnyGraph, algo: Algo, out: &Outcome, p: &Params) -> CmdResult<String> {
    match g {
        AnyGraph::Rational(g) => verify_generic(g, algo, out, p),
        AnyGraph::Surd(g) => verify_generic(g, algo, out, p),
    }
}

/// Exact EQ1 factor and its float value.
pub fn factor_of(g: &AnyGraph, c: &Coloring) -> (String, f64) {
    fn inner<W: Scalar>(g: &WeightedGraph<W>, c: &Coloring) -> (String, f64) {
        let f: Factor<W> = eq1_factor(g, c).factor;
        (f.to_string(), f.to_f64())
    }
    match g {
        AnyGraph::Rational(g) => inner(g, c),
        AnyGraph::Surd(g) => inner(g, c),
    }
}
