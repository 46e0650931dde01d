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

//! `color`, `verify`, `gen` and `oracle`.

use std::fmt::Write as _;

use equicolor::instances::{
    gen_eqx_counterexample, gen_lower_bound_instance, gen_random_bounded_degree, gen_random_partition,
    oracle_chromatic_number, oracle_min_alpha_eq1, oracle_min_alpha_eqx, OracleReport, WeightModel,
};
use equicolor::io::{format_coloring, format_graph, format_partition, AnyGraph};
use equicolor::num::int;
use equicolor::verify::{check_partition_equitable, eq1_factor, eqx_factor, first_conflict};
use equicolor::{Coloring, Factor, QuadSurd, Rational, Scalar, WeightedGraph};

use crate::algos::{self, Params};
use crate::failure::{CmdResult, Failure};
use crate::files::{emit, n_of, read_coloring, read_graph, read_partition};
use crate::{budget, ColorArgs, GenCommand, ModelArg, OracleCommand, VerifyArgs, VerifyMode};

pub fn color(a: ColorArgs) -> CmdResult {
    let g = read_graph(&a.input)?;
    let partition = match &a.partition {
        Some(p) => Some(read_partition(p, n_of(&g))?),
        None => None,
    };
    let params = Params {
        eps: a.eps.clone(),
        seed: a.seed,
        partition,
        max_attempts: a.max_attempts,
        start: a.start,
        budget: budget()?,
    };
    let out = algos::run(&g, a.algo, a.k, &params)?;
    let factor = if a.no_verify {
        algos::factor_of(&g, &out.coloring).0
    } else {
        algos::verify_outcome(&g, a.algo, &out, &params)?
    };

    let mut summary = String::new();
    writeln!(summary, "algo {}", a.algo.name()).unwrap();
    writeln!(summary, "k {}", out.k).unwrap();
    writeln!(summary, "factor {factor}").unwrap();
    if let Some(r) = &out.route {
        writeln!(summary, "route {r}").unwrap();
    }
    if let Some(x) = out.augmentations {
        writeln!(summary, "augmentations {x}").unwrap();
    }
    if let Some(x) = out.attempts {
        writeln!(summary, "attempts {x}").unwrap();
    }
    writeln!(summary, "verified {}", !a.no_verify).unwrap();

    let text = format_coloring(&out.coloring);
    match &a.output {
        Some(_) => {
            emit(a.output.as_ref(), &text)?;
            emit(None, &summary)
        }
        None => {
            eprint!("{summary}");
            emit(None, &text)
        }
    }
}

fn verify_generic<W: Scalar>(g: &WeightedGraph<W>, c: &Coloring, a: &VerifyArgs) -> CmdResult {
    if let Some((u, v)) = first_conflict(g, c) {
        return Err(Failure::verification(format!("edge ({u}, {v}) is monochromatic")));
    }
    if a.mode == VerifyMode::Partition {
        let path = a.partition.as_ref().ok_or_else(|| Failure::usage("--mode partition needs --partition"))?;
        let p = read_partition(path, g.n())?;
        if !check_partition_equitable(c, &p, c.k()) {
            return Err(Failure::verification("coloring is not partition-equitable"));
        }
        return emit(None, "equitable\n");
    }
    if !c.is_total() {
        let v = c.uncovered()[0];
        return Err(Failure::verification(format!("vertex {v} is uncolored")));
    }
    let factor: Factor<W> = match a.mode {
        VerifyMode::Eqx => eqx_factor(g, c),
        _ => eq1_factor(g, c).factor,
    };
    emit(None, &format!("{factor}\n"))?;
    if let Some(t) = &a.threshold {
        if !factor.is_at_most(&W::from_rational(t)) {
            return Err(Failure::verification(format!(
                "factor {factor} exceeds the threshold {}",
                t.to_exact_string()
            )));
        }
    }
    Ok(())
}

pub fn verify(a: VerifyArgs) -> CmdResult {
    let g = read_graph(&a.input)?;
    let c = read_coloring(&a.coloring, n_of(&g))?;
    match &g {
        AnyGraph::Rational(g) => verify_generic(g, &c, &a),
        AnyGraph::Surd(g) => verify_generic(g, &c, &a),
    }
}

pub fn gen(cmd: GenCommand) -> CmdResult {
    match cmd {
        GenCommand::LowerBound { delta, output } => emit(output.as_ref(), &format_graph(&gen_lower_bound_instance(delta)?)),
        GenCommand::Eqx { n, beta, output } => emit(output.as_ref(), &format_graph(&gen_eqx_counterexample(n, &beta)?)),
        GenCommand::Random {
            n,
            delta,
            model,
            distinct,
            seed,
            output,
        } => {
            let model = match model {
                ModelArg::Uniform => WeightModel::Uniform,
                ModelArg::Geometric => WeightModel::Geometric,
                ModelArg::FewDistinct => WeightModel::FewDistinct(distinct),
            };
            emit(output.as_ref(), &format_graph(&gen_random_bounded_degree(n, delta, model, seed)?))
        }
        GenCommand::Partition { n, d, seed, output } => {
            emit(output.as_ref(), &format_partition(&gen_random_partition(n, d, seed)?))
        }
    }
}

/// Splits a factor into its rational and `√2` components.
trait Components {
    fn components(&self) -> (Rational, Rational);
}

impl Components for Rational {
    fn components(&self) -> (Rational, Rational) {
        (self.clone(), int(0))
    }
}

impl Components for QuadSurd {
    fn components(&self) -> (Rational, Rational) {
        (self.rational_part().clone(), self.surd_part().clone())
    }
}

fn report_text<W: Scalar + Components>(r: &OracleReport<W>) -> String {
    let mut s = String::new();
    writeln!(s, "digest {}", r.digest).unwrap();
    writeln!(s, "k {}", r.k).unwrap();
    match &r.min_factor {
        None => writeln!(s, "min_alpha none").unwrap(),
        Some(f) => {
            writeln!(s, "min_alpha {f}").unwrap();
            if let Factor::Finite(x) = f {
                let (a, b) = x.components();
                writeln!(s, "min_alpha_rational {}", a.to_exact_string()).unwrap();
                writeln!(s, "min_alpha_sqrt2 {}", b.to_exact_string()).unwrap();
                writeln!(s, "min_alpha_approx {:.12}", x.to_f64()).unwrap();
            }
        }
    }
    writeln!(s, "exhausted {}", r.exhausted).unwrap();
    writeln!(s, "nodes {}", r.nodes).unwrap();
    s
}

fn min_alpha<W: Scalar + Components>(
    g: &WeightedGraph<W>,
    k: usize,
    mode: VerifyMode,
    witness: Option<&std::path::PathBuf>,
) -> CmdResult {
    let b = budget()?;
    let r = match mode {
        VerifyMode::Eq1 => oracle_min_alpha_eq1(g, k, b),
        VerifyMode::Eqx => oracle_min_alpha_eqx(g, k, b),
        VerifyMode::Partition => return Err(Failure::usage("the oracle minimizes eq1 or eqx factors")),
    };
    emit(None, &report_text(&r))?;
    if let (Some(path), Some(c)) = (witness, &r.witness) {
        emit(Some(path), &format_coloring(c))?;
    }
    r.certified(b)?;
    Ok(())
}

pub fn oracle(cmd: OracleCommand) -> CmdResult {
    match cmd {
        OracleCommand::MinAlpha {
            input,
            k,
            mode,
            witness,
        } => match read_graph(&input)? {
            AnyGraph::Rational(g) => min_alpha(&g, k, mode, witness.as_ref()),
            AnyGraph::Surd(g) => min_alpha(&g, k, mode, witness.as_ref()),
        },
        OracleCommand::Chromatic { input, witness } => {
            let (chi, c) = match read_graph(&input)? {
                AnyGraph::Rational(g) => oracle_chromatic_number(&g, budget()?)?,
                AnyGraph::Surd(g) => oracle_chromatic_number(&g, budget()?)?,
            };
            emit(None, &format!("chi {chi}\n"))?;
            if let Some(path) = &witness {
                emit(Some(path), &format_coloring(&c))?;
            }
            Ok(())
        }
    }
}
