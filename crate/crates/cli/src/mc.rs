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

//! Monte Carlo suites. Output is reproducible for a fixed seed.

use std::fmt::Write as _;

use equicolor::instances::{gen_random_bounded_degree, WeightModel};
use equicolor::io::AnyGraph;
use equicolor::num::{int, rational_to_f64};
use equicolor::random::{
    class_probability_bounds, class_probability_formula, concentration_bound, estimate_all_class_probabilities,
    monte_carlo_tail, DependencyInstance,
};
use equicolor::{Error, Rational, Scalar};

use crate::failure::{CmdResult, Failure};
use crate::files::{emit, read_graph};
use crate::{Family, McCommand};

/// Interval `[0, 1 + i mod 3]` for variable `i`.
pub fn family_instance(family: Family, n: usize) -> equicolor::Result<DependencyInstance> {
    let intervals: Vec<(Rational, Rational)> = (0..n).map(|i| (int(0), int(1 + (i % 3) as i64))).collect();
    match family {
        Family::Independent => DependencyInstance::independent(intervals),
        Family::Pairs => DependencyInstance::copied_pairs(intervals),
        Family::Cycle => DependencyInstance::cycle(intervals),
    }
}

pub fn run(cmd: McCommand) -> CmdResult {
    match cmd {
        McCommand::ClassProbabilities {
            k,
            trials,
            seed,
            color,
            input,
            n,
            delta,
            output,
        } => {
            let g = match input {
                Some(path) => match read_graph(&path)? {
                    AnyGraph::Rational(g) => g,
                    AnyGraph::Surd(_) => {
                        return Err(Error::PreconditionViolated("the random process needs rational weights".into()).into())
                    }
                },
                None => gen_random_bounded_degree(n, delta, WeightModel::Uniform, seed)?,
            };
            let estimates = estimate_all_class_probabilities(&g, k, color, trials, seed)?;
            let (lo, hi) = class_probability_bounds(k, g.max_degree());
            let (lo, hi) = (rational_to_f64(&lo), rational_to_f64(&hi));
            let mut text = String::from("vertex\tdegree\thits\testimate\tradius\tformula\tinside\n");
            let mut all = true;
            for (v, e) in estimates.iter().enumerate() {
                let formula = class_probability_formula(k, g.degree(v));
                let f = rational_to_f64(&formula);
                let inside = e.covers(f) && e.estimate + e.radius >= lo && e.estimate - e.radius <= hi;
                all &= inside;
                writeln!(
                    text,
                    "{v}\t{}\t{}\t{:.6}\t{:.6}\t{}\t{inside}",
                    g.degree(v),
                    e.hits,
                    e.estimate,
                    e.radius,
                    formula.to_exact_string()
                )
                .unwrap();
            }
            writeln!(text, "# band\t{lo:.6}\t{hi:.6}\tall_inside\t{all}").unwrap();
            emit(output.as_ref(), &text)?;
            if !all {
                return Err(Failure::verification("an estimate lies outside its confidence band"));
            }
            Ok(())
        }
        McCommand::Tail {
            family,
            n,
            t,
            trials,
            seed,
            output,
        } => {
            let inst = family_instance(family, n)?;
            let bound = concentration_bound(&inst, &t)?;
            let e = monte_carlo_tail(&inst, &t, trials, seed)?;
            let cap = rational_to_f64(&bound.clipped.hi);
            let ok = e.estimate <= cap + 3.0 * e.sigma();
            let mut text = String::new();
            writeln!(text, "n\t{n}").unwrap();
            writeln!(text, "t\t{}", t.to_exact_string()).unwrap();
            writeln!(text, "delta\t{}", inst.dependency_graph().max_degree()).unwrap();
            writeln!(text, "bound\t[{:.9}, {:.9}]", rational_to_f64(&bound.clipped.lo), cap).unwrap();
            writeln!(text, "hits\t{}", e.hits).unwrap();
            writeln!(text, "trials\t{}", e.trials).unwrap();
            writeln!(text, "estimate\t{:.9}", e.estimate).unwrap();
            writeln!(text, "sigma\t{:.9}", e.sigma()).unwrap();
            writeln!(text, "within\t{ok}").unwrap();
            emit(output.as_ref(), &text)?;
            if !ok {
                return Err(Failure::verification("empirical tail exceeds the bound by more than 3σ"));
            }
            Ok(())
        }
    }
}
