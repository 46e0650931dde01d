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

//! Reading and writing instance, coloring and partition files.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use equicolor::io::{parse_any_graph, parse_coloring, parse_partition, AnyGraph};
use equicolor::num::parse_rational;
use equicolor::{Coloring, Rational, VertexPartition};

use crate::failure::{CmdResult, Failure};

pub fn read_text(path: &Path) -> CmdResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::io(path, e))
}

pub fn read_graph(path: &Path) -> CmdResult<AnyGraph> {
    Ok(parse_any_graph(&read_text(path)?)?)
}

pub fn read_coloring(path: &Path, n: usize) -> CmdResult<Coloring> {
    Ok(parse_coloring(&read_text(path)?, n)?)
}

pub fn read_partition(path: &Path, n: usize) -> CmdResult<VertexPartition> {
    Ok(parse_partition(&read_text(path)?, n)?)
}

/// Writes to `path`, or to standard output when no path is given.
pub fn emit(path: Option<&PathBuf>, text: &str) -> CmdResult {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::io(p, e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .map_err(|e| Failure::io(Path::new("<stdout>"), e))
        }
    }
}

/// Clap value parser for `p/q` rationals.
pub fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

pub fn n_of(g: &AnyGraph) -> usize {
    match g {
        AnyGraph::Rational(g) => g.n(),
        AnyGraph::Surd(g) => g.n(),
    }
}
