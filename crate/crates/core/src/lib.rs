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

//! Equitable colorings of vertex-weighted graphs.
//!
//! A `k`-coloring is *α-EQ1* if for every ordered pair of classes
//! `(C_i, C_j)` some vertex `v ∈ C_i` satisfies `w(C_i \ {v}) <= α·w(C_j)`.
//! This crate builds such colorings with provable factors, verifies them
//! exactly, and ships brute-force oracles for small instances:
//!
//! * [`swap2eq1`]: 2-EQ1 colorings for every `k >= Δ + 1` via envy swaps.
//! * [`partitioneq`]: colorings equitable on every part of a vertex partition.
//! * [`weightedeq1`]: exact EQ1 with few distinct weights or `k >= 4√(nΔ)`,
//!   and (1+3ε)-EQ1 by weight bucketing.
//! * [`lowmax`]: (1+7ε)-EQ1 when no vertex is heavy.
//! * [`random`]: the randomized construction and its concentration bound.
//! * [`instances`]: generators, lower-bound instances and exhaustive oracles.
//!
//! All arithmetic is exact. Weights are any [`Scalar`]; the crate root
//! exports aliases for the rational instantiation used by most callers.

pub mod coloring;
pub mod error;
pub mod extend;
pub mod graph;
pub mod instances;
pub mod io;
pub mod lowmax;
pub mod num;
pub mod partitioneq;
pub mod random;
pub mod swap2eq1;
pub mod verify;
pub mod weightedeq1;

pub use coloring::{Coloring, PartialColoring, VertexPartition};
pub use error::{Error, Result};
pub use graph::{DegreeProfile, WeightedGraph};
pub use num::{QuadSurd, Rational, Scalar};
pub use verify::{Eq1Report, Factor};

/// Graph with rational weights.
pub type Graph = WeightedGraph<Rational>;

/// Graph with weights in `Q(√2)`.
pub type SurdGraph = WeightedGraph<QuadSurd>;

/// Approximation factor over rationals.
pub type RationalFactor = Factor<Rational>;
