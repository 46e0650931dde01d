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

//! Command failures and their exit codes.

use std::fmt;
use std::path::Path;

use equicolor::Error;

pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_PRECONDITION: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_PARSE: u8 = 65;
pub const EXIT_IO: u8 = 66;

/// A failure reported as one JSON record on standard error.
#[derive(Debug)]
pub struct Failure {
    pub kind: String,
    pub message: String,
    pub exit: u8,
}

impl Failure {
    pub fn new(kind: &str, message: impl Into<String>, exit: u8) -> Self {
        Failure {
            kind: kind.to_string(),
            message: message.into(),
            exit,
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Failure::new("Usage", message, EXIT_USAGE)
    }

    pub fn verification(message: impl Into<String>) -> Self {
        Failure::new("VerificationFailed", message, EXIT_VERIFY)
    }

    pub fn io(path: &Path, e: std::io::Error) -> Self {
        Failure::new("Io", format!("{}: {e}", path.display()), EXIT_IO)
    }

    pub fn record(&self) -> String {
        serde_json::json!({ "error": self.kind, "message": self.message, "exit": self.exit }).to_string()
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let exit = match e {
            Error::PreconditionViolated(_) => EXIT_PRECONDITION,
            Error::BudgetExceeded { .. } | Error::AttemptsExhausted { .. } => EXIT_BUDGET,
            Error::MatchingInfeasible { .. } | Error::NoAugmentingPath { .. } | Error::GuaranteeViolated(_) => {
                EXIT_VERIFY
            }
            Error::InvalidGraph(_) | Error::InvalidColoring(_) | Error::InvalidPartition(_) | Error::Parse { .. } => {
                EXIT_PARSE
            }
        };
        Failure::new(e.kind(), e.to_string(), exit)
    }
}

pub type CmdResult<T = ()> = Result<T, Failure>;
