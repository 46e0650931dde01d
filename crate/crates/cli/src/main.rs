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

//! `equicolor`: equitable vertex-weighted colorings from the command line.
//!
//! Exit codes: 0 ok, 1 verification failed, 2 precondition violated,
//! 3 budget or attempts exhausted, 64 usage, 65 parse, 66 I/O.

mod algos;
mod bench;
mod commands;
mod failure;
mod files;
mod mc;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use equicolor::instances::DEFAULT_BUDGET;
use equicolor::Rational;

use crate::algos::{Algo, Start};
use crate::failure::{CmdResult, Failure};
use crate::files::rational_arg;

#[derive(Parser, Debug)]
#[command(name = "equicolor", version, about = "Equitable colorings of vertex-weighted graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Color an instance and verify the result against the algorithm's guarantee.
    Color(ColorArgs),
    /// Print the exact factor of a coloring, or check partition equitability.
    Verify(VerifyArgs),
    /// Generate instance and partition files.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Exhaustive searches on small instances.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Monte Carlo checks of the random coloring process and the tail bound.
    #[command(subcommand)]
    Mc(McCommand),
    /// Sweep parameter grids and write a tab-separated table.
    Bench(BenchArgs),
}

#[derive(clap::Args, Debug)]
pub struct ColorArgs {
    #[arg(long, value_enum)]
    pub algo: Algo,
    /// Number of colors; defaults to the smallest the guarantee admits.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_parser = rational_arg,
          required_if_eq_any = [("algo", "eps-eq1"), ("algo", "lowmax"), ("algo", "random")])]
    pub eps: Option<Rational>,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, required_if_eq("algo", "partition"))]
    pub partition: Option<PathBuf>,
    #[arg(long)]
    pub no_verify: bool,
    #[arg(long, default_value_t = 1000)]
    pub max_attempts: u64,
    /// Initial coloring for lowmax.
    #[arg(long, value_enum, default_value_t = Start::Greedy)]
    pub start: Start,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyMode {
    Eq1,
    Eqx,
    Partition,
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub coloring: PathBuf,
    #[arg(long, value_enum, default_value_t = VerifyMode::Eq1)]
    pub mode: VerifyMode,
    #[arg(long, required_if_eq("mode", "partition"))]
    pub partition: Option<PathBuf>,
    /// Exit 1 unless the factor is at most this value.
    #[arg(long, value_parser = rational_arg)]
    pub threshold: Option<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Uniform,
    Geometric,
    FewDistinct,
}

#[derive(Subcommand, Debug)]
pub enum GenCommand {
    /// The surd-weighted instance on which no α-EQ1 coloring with α < √2 and k < 3Δ/2 exists.
    LowerBound {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// A path with weights β^i where only n colors give an α-EQX coloring.
    Eqx {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = rational_arg)]
        beta: Rational,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// A random graph of bounded degree.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, value_enum, default_value_t = ModelArg::Uniform)]
        model: ModelArg,
        /// Distinct weights for the few-distinct model.
        #[arg(long, default_value_t = 3)]
        distinct: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// A random partition of 0..n into d parts.
    Partition {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    /// Least achievable factor over all proper k-colorings.
    MinAlpha {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = VerifyMode::Eq1)]
        mode: VerifyMode,
        /// Write an optimal coloring here.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Exact chromatic number.
    Chromatic {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Independent,
    Pairs,
    Cycle,
}

#[derive(Subcommand, Debug)]
pub enum McCommand {
    /// Per-vertex class probabilities of the random process against the closed form.
    #[command(name = "lemma7")]
    ClassProbabilities {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Class whose membership is estimated.
        #[arg(long, default_value_t = 0)]
        color: usize,
        /// Instance file; a random graph is generated when absent.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 30)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        delta: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Empirical upper tail of a sum of dependent bounded variables against the bound.
    Tail {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = rational_arg)]
        t: Rational,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(clap::Args, Debug)]
pub struct BenchArgs {
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Algo::Eq1Sqrt, Algo::EpsEq1, Algo::Lowmax, Algo::Partition])]
    pub algos: Vec<Algo>,
    #[arg(long, value_delimiter = ',', default_values_t = [1000usize])]
    pub n: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_values_t = [1usize, 2])]
    pub delta: Vec<usize>,
    #[arg(long, value_delimiter = ',', value_parser = rational_arg, default_value = "1/10")]
    pub eps: Vec<Rational>,
    /// Color counts; the smallest admissible count is used when absent.
    #[arg(long, value_delimiter = ',')]
    pub k: Vec<usize>,
    /// Seeds 0..seeds per grid point.
    #[arg(long, default_value_t = 1)]
    pub seeds: u64,
    /// Parts of the random partition used by `partition`.
    #[arg(long, default_value_t = 3)]
    pub parts: usize,
    #[arg(long, value_enum, default_value_t = ModelArg::FewDistinct)]
    pub model: ModelArg,
    #[arg(long, default_value_t = 3)]
    pub distinct: usize,
    /// Add a wall-clock column; the table is then no longer reproducible.
    #[arg(long)]
    pub timing: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Oracle node budget from `EQUICOLOR_BUDGET`.
pub fn budget() -> CmdResult<u64> {
    match std::env::var("EQUICOLOR_BUDGET") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("EQUICOLOR_BUDGET = `{s}` is not a node count"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Color(a) => commands::color(a),
        Command::Verify(a) => commands::verify(a),
        Command::Gen(g) => commands::gen(g),
        Command::Oracle(o) => commands::oracle(o),
        Command::Mc(m) => mc::run(m),
        Command::Bench(b) => bench::run(b),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            let f = Failure::usage(e.kind().to_string());
            eprintln!("{}", f.record());
            return ExitCode::from(f.exit);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", f.record());
            ExitCode::from(f.exit)
        }
    }
}
