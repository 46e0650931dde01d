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

//! Colorings and vertex partitions.

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::num::Scalar;

/// A family of `k` disjoint color classes over the vertex universe `0..n`.
///
/// The covered vertex set is explicit: a coloring covering every vertex is
/// total, otherwise it is partial. Classes are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    classes: Vec<Vec<usize>>,
    assignment: Vec<Option<usize>>,
    covered: usize,
}

/// A coloring that need not cover every vertex.
pub type PartialColoring = Coloring;

impl Coloring {
    /// `k` empty classes over `n` vertices.
    pub fn empty(n: usize, k: usize) -> Self {
        Coloring {
            classes: vec![Vec::new(); k],
            assignment: vec![None; n],
            covered: 0,
        }
    }

    /// Builds a coloring from explicit classes, rejecting overlaps and
    /// out-of-range vertices.
    pub fn from_classes(n: usize, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut c = Coloring::empty(n, classes.len());
        for (i, class) in classes.into_iter().enumerate() {
            for v in class {
                if v >= n {
                    return Err(Error::InvalidColoring(format!("vertex {v} out of range for n = {n}")));
                }
                if let Some(j) = c.assignment[v] {
                    return Err(Error::InvalidColoring(format!("vertex {v} is in classes {j} and {i}")));
                }
                c.assign(v, i);
            }
        }
        Ok(c)
    }

    /// Builds a coloring from a per-vertex color vector.
    pub fn from_assignment(k: usize, assignment: &[Option<usize>]) -> Result<Self> {
        let mut c = Coloring::empty(assignment.len(), k);
        for (v, color) in assignment.iter().enumerate() {
            if let Some(i) = *color {
                if i >= k {
                    return Err(Error::InvalidColoring(format!("color {i} out of range for k = {k}")));
                }
                c.assign(v, i);
            }
        }
        Ok(c)
    }

    /// Every vertex in its own class (`k = n`).
    pub fn singletons(n: usize) -> Self {
        let mut c = Coloring::empty(n, n);
        for v in 0..n {
            c.assign(v, v);
        }
        c
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    /// Size of the vertex universe.
    pub fn n(&self) -> usize {
        self.assignment.len()
    }

    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn color_of(&self, v: usize) -> Option<usize> {
        self.assignment[v]
    }

    pub fn is_covered(&self, v: usize) -> bool {
        self.assignment[v].is_some()
    }

    pub fn covered_count(&self) -> usize {
        self.covered
    }

    pub fn is_total(&self) -> bool {
        self.covered == self.n()
    }

    /// Covered vertices in increasing order.
    pub fn covered(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.is_covered(v)).collect()
    }

    pub fn uncovered(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| !self.is_covered(v)).collect()
    }

    /// Puts an uncovered vertex into class `i`.
    pub fn assign(&mut self, v: usize, i: usize) {
        assert!(self.assignment[v].is_none(), "vertex {v} already colored");
        let class = &mut self.classes[i];
        let pos = class.binary_search(&v).unwrap_err();
        class.insert(pos, v);
        self.assignment[v] = Some(i);
        self.covered += 1;
    }

    /// Removes `v` from its class, returning the class it was in.
    pub fn unassign(&mut self, v: usize) -> Option<usize> {
        let i = self.assignment[v].take()?;
        let class = &mut self.classes[i];
        let pos = class.binary_search(&v).expect("assignment and classes disagree");
        class.remove(pos);
        self.covered -= 1;
        Some(i)
    }

    pub fn move_vertex(&mut self, v: usize, to: usize) {
        self.unassign(v);
        self.assign(v, to);
    }

    /// Whether `v` has no neighbor in class `i`.
    pub fn fits<W: Scalar>(&self, g: &WeightedGraph<W>, v: usize, i: usize) -> bool {
        g.neighbors(v).iter().all(|&u| self.assignment[u] != Some(i))
    }

    /// Same classes over a smaller universe `0..n`, dropping every vertex
    /// `>= n`.
    pub fn truncated(&self, n: usize) -> Coloring {
        let classes = self
            .classes
            .iter()
            .map(|c| c.iter().copied().filter(|&v| v < n).collect())
            .collect();
        Coloring::from_classes(n, classes).expect("restriction of a valid coloring")
    }

    /// Same classes over a larger universe; new vertices are uncovered.
    pub fn widened(&self, n: usize) -> Coloring {
        assert!(n >= self.n());
        let mut c = self.clone();
        c.assignment.resize(n, None);
        c
    }

    /// Restriction to the vertices selected by `keep`.
    pub fn restricted(&self, keep: &[bool]) -> Coloring {
        let classes = self
            .classes
            .iter()
            .map(|c| c.iter().copied().filter(|&v| keep[v]).collect())
            .collect();
        Coloring::from_classes(self.n(), classes).expect("restriction of a valid coloring")
    }

    /// Drops empty classes, keeping the order of the rest.
    pub fn without_empty_classes(&self) -> Coloring {
        let classes = self.classes.iter().filter(|c| !c.is_empty()).cloned().collect();
        Coloring::from_classes(self.n(), classes).expect("subset of a valid coloring")
    }

    /// Class weights `w(C_i)`.
    pub fn class_weights<W: Scalar>(&self, g: &WeightedGraph<W>) -> Vec<W> {
        self.classes.iter().map(|c| g.weight_of(c.iter().copied())).collect()
    }
}

/// Ordered list of disjoint vertex parts `V_1, ..., V_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    parts: Vec<Vec<usize>>,
}

impl VertexPartition {
    /// Rejects overlapping parts. Part order is kept; vertices inside a
    /// part are sorted.
    pub fn new(parts: Vec<Vec<usize>>) -> Result<Self> {
        let mut parts = parts;
        for p in &mut parts {
            p.sort_unstable();
        }
        let mut all: Vec<usize> = parts.iter().flatten().copied().collect();
        all.sort_unstable();
        if let Some(w) = all.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidPartition(format!("vertex {} appears twice", w[0])));
        }
        Ok(VertexPartition { parts })
    }

    /// The trivial partition with one part holding `0..n`.
    pub fn whole(n: usize) -> Self {
        VertexPartition {
            parts: vec![(0..n).collect()],
        }
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn d(&self) -> usize {
        self.parts.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    /// Union of all parts, sorted.
    pub fn covered(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.parts.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    pub fn covered_count(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    pub fn max_vertex(&self) -> Option<usize> {
        self.parts.iter().flatten().copied().max()
    }

    /// Whether part sizes are nondecreasing.
    pub fn is_size_sorted(&self) -> bool {
        self.parts.windows(2).all(|w| w[0].len() <= w[1].len())
    }

    /// Stable sort of parts by nondecreasing size.
    pub fn sorted_by_size(&self) -> VertexPartition {
        let mut parts = self.parts.clone();
        parts.sort_by_key(Vec::len);
        VertexPartition { parts }
    }
}
