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

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("search exceeded its budget of {budget} nodes")]
    BudgetExceeded { budget: u64 },

    #[error("no conflict-free assignment exists for {unmatched} of {total} new vertices")]
    MatchingInfeasible { unmatched: usize, total: usize },

    #[error("part {part}: an over-full class has no augmenting path to a least-loaded class")]
    NoAugmentingPath { part: usize },

    #[error("no attempt out of {attempts} met the deviation bound")]
    AttemptsExhausted { attempts: u64 },

    /// A runtime check of a proven inequality failed.
    #[error("guarantee check failed: {0}")]
    GuaranteeViolated(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::MatchingInfeasible { .. } => "MatchingInfeasible",
            Error::NoAugmentingPath { .. } => "NoAugmentingPath",
            Error::AttemptsExhausted { .. } => "AttemptsExhausted",
            Error::GuaranteeViolated(_) => "GuaranteeViolated",
            Error::InvalidGraph(_) => "InvalidGraph",
            Error::InvalidColoring(_) => "InvalidColoring",
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::Parse { .. } => "Parse",
        }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::PreconditionViolated(msg.into())
    }

    pub(crate) fn guarantee(msg: impl Into<String>) -> Self {
        Error::GuaranteeViolated(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
