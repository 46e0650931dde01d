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

//! Grid sweeps. Jobs run in parallel; rows are written in grid order.

use std::fmt::Write as _;
use std::time::Instant;

use equicolor::instances::{gen_random_bounded_degree, gen_random_partition, WeightModel, DEFAULT_BUDGET};
use equicolor::io::AnyGraph;
use equicolor::{Error, Rational, Scalar};
use rayon::prelude::*;

use crate::algos::{self, Algo, Params, Start};
use crate::failure::CmdResult;
use crate::files::emit;
use crate::{BenchArgs, ModelArg};

/// Exact envy search is exponential; larger graphs are skipped for `2eq1`.
const TWO_EQ1_MAX_N: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Job {
    algo: Algo,
    n: usize,
    delta: usize,
    eps: Rational,
    k: Option<usize>,
    seed: u64,
}

struct Row {
    job: Job,
    k: String,
    status: &'static str,
    factor: String,
    approx: String,
    augmentations: String,
    millis: u128,
}

fn status_of(e: &crate::failure::Failure) -> &'static str {
    match e.exit {
        crate::failure::EXIT_PRECONDITION => "precondition",
        crate::failure::EXIT_BUDGET => "budget",
        _ => "failed",
    }
}

fn run_job(job: &Job, model: WeightModel, parts: usize) -> Row {
    let started = Instant::now();
    let mut row = Row {
        job: job.clone(),
        k: job.k.map_or_else(|| "-".into(), |k| k.to_string()),
        status: "ok",
        factor: "-".into(),
        approx: "-".into(),
        augmentations: "-".into(),
        millis: 0,
    };
    if job.algo == Algo::TwoEq1 && job.n > TWO_EQ1_MAX_N {
        row.status = "skipped";
        return row;
    }
    let result = (|| -> CmdResult<_> {
        let g = gen_random_bounded_degree(job.n, job.delta, model, job.seed)?;
        let partition = if job.algo == Algo::Partition {
            Some(gen_random_partition(job.n, parts.min(job.n).max(1), job.seed)?)
        } else {
            None
        };
        let params = Params {
            eps: Some(job.eps.clone()),
            seed: job.seed,
            partition,
            max_attempts: 1000,
            start: Start::Greedy,
            budget: DEFAULT_BUDGET,
        };
        let g = AnyGraph::Rational(g);
        let out = algos::run(&g, job.algo, job.k, &params)?;
        algos::verify_outcome(&g, job.algo, &out, &params)?;
        Ok((algos::factor_of(&g, &out.coloring), out))
    })();
    row.millis = started.elapsed().as_millis();
    match result {
        Ok(((exact, approx), out)) => {
            row.k = out.k.to_string();
            row.factor = exact;
            row.approx = format!("{approx:.6}");
            if let Some(a) = out.augmentations {
                row.augmentations = a.to_string();
            }
        }
        Err(e) => row.status = status_of(&e),
    }
    row
}

pub fn run(a: BenchArgs) -> CmdResult {
    if a.n.is_empty() || a.delta.is_empty() || a.eps.is_empty() || a.algos.is_empty() {
        return Err(Error::PreconditionViolated("every grid axis needs at least one value".into()).into());
    }
    let model = match a.model {
        ModelArg::Uniform => WeightModel::Uniform,
        ModelArg::Geometric => WeightModel::Geometric,
        ModelArg::FewDistinct => WeightModel::FewDistinct(a.distinct),
    };
    let ks: Vec<Option<usize>> = if a.k.is_empty() { vec![None] } else { a.k.iter().map(|&k| Some(k)).collect() };
    let mut jobs = Vec::new();
    for &algo in &a.algos {
        for &n in &a.n {
            for &delta in &a.delta {
                for eps in &a.eps {
                    for &k in &ks {
                        for seed in 0..a.seeds {
                            jobs.push(Job {
                                algo,
                                n,
                                delta,
                                eps: eps.clone(),
                                k,
                                seed,
                            });
                        }
                    }
                }
            }
        }
    }
    jobs.sort();
    jobs.dedup();
    let rows: Vec<Row> = jobs.par_iter().map(|j| run_job(j, model, a.parts)).collect();

    let mut text = String::from("algo\tn\tdelta\teps\tk\tseed\tstatus\tfactor\tfactor_approx\taugmentations");
    if a.timing {
        text.push_str("\tmillis");
    }
    text.push('\n');
    for r in &rows {
        write!(
            text,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.job.algo.name(),
            r.job.n,
            r.job.delta,
            r.job.eps.to_exact_string(),
            r.k,
            r.job.seed,
            r.status,
            r.factor,
            r.approx,
            r.augmentations
        )
        .unwrap();
        if a.timing {
            write!(text, "\t{}", r.millis).unwrap();
        }
        text.push('\n');
    }
    emit(a.output.as_ref(), &text)
}
