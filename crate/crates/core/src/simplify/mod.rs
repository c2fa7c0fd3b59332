// zxopt - quantum circuit optimisation with the ZX-calculus
// Copyright (C) 2026 The zxopt developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Rewrite strategies. A rule pairs a matcher with a rewriter; basic
//! simplifiers run one rule until it stops matching, and the compound
//! simplifiers chain them.
//!
//! Schedule of [`clifford_simp`]: spider fusion, colour change, then
//! repeat {identity removal, fusion, pivot, local complementation} to a
//! fixpoint, followed by one boundary pivot pass; the whole loop repeats
//! until the boundary pivot finds nothing.

mod rules;
mod teleport;

pub use rules::*;
pub use teleport::teleport_reduce;

use crate::graph::{Diagram, EdgeTableEntry, V};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimplifyError {
    #[error("rule {rule} still matching after {iterations} passes; its metric is not decreasing")]
    NoProgress { rule: &'static str, iterations: usize },
    #[error(transparent)]
    Circuit(#[from] crate::circuit::CircuitError),
}

/// Structural changes collected from one pass. Vertices are removed first,
/// then the edge table is added.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RewriteBatch {
    pub edge_table: Vec<EdgeTableEntry>,
    pub vertices_to_remove: BTreeSet<V>,
}

impl RewriteBatch {
    pub fn apply(self, d: &mut Diagram) {
        d.remove_vertices(self.vertices_to_remove);
        d.add_edge_table(&self.edge_table)
            .expect("rewrite produced an invalid edge table");
    }
}

pub struct Rule<M> {
    pub name: &'static str,
    pub matcher: fn(&mut Diagram) -> Vec<M>,
    pub rewriter: fn(&mut Diagram, &[M]) -> RewriteBatch,
    /// Strictly decreases on every pass that finds a match.
    pub metric: fn(&Diagram) -> usize,
    pub metric_note: &'static str,
}

fn vertex_count(d: &Diagram) -> usize {
    d.num_vertices()
}

const VERTICES: &str = "vertex count";

pub fn spider_rule() -> Rule<SpiderMatch> {
    Rule {
        name: "spider fusion",
        matcher: |d| match_spider_fusion(d),
        rewriter: rewrite_spider_fusion,
        metric: vertex_count,
        metric_note: VERTICES,
    }
}

pub fn id_rule() -> Rule<IdMatch> {
    Rule {
        name: "identity removal",
        matcher: |d| match_id(d),
        rewriter: rewrite_id,
        metric: vertex_count,
        metric_note: VERTICES,
    }
}

pub fn lcomp_rule() -> Rule<LcompMatch> {
    Rule {
        name: "local complementation",
        matcher: |d| match_lcomp(d),
        rewriter: rewrite_lcomp,
        metric: vertex_count,
        metric_note: VERTICES,
    }
}

pub fn pivot_rule() -> Rule<PivotMatch> {
    Rule {
        name: "pivot",
        matcher: |d| match_pivot(d),
        rewriter: rewrite_pivot,
        metric: vertex_count,
        metric_note: VERTICES,
    }
}

pub fn boundary_pivot_rule() -> Rule<BoundaryPivotMatch> {
    Rule {
        name: "boundary pivot",
        matcher: |d| match_boundary_pivot(d),
        rewriter: rewrite_boundary_pivot,
        metric: vertex_count,
        metric_note: "vertex count (two removed, one inserted)",
    }
}

pub fn pivot_gadget_rule() -> Rule<GadgetPivotMatch> {
    Rule {
        name: "gadget pivot",
        matcher: |d| match_pivot_gadget(d),
        rewriter: rewrite_pivot_gadget,
        metric: non_gadget_spiders,
        metric_note: "spiders that are not part of a phase gadget",
    }
}

pub fn gadget_rule() -> Rule<GadgetFusionMatch> {
    Rule {
        name: "gadget fusion",
        matcher: match_gadget_fusion,
        rewriter: rewrite_gadget_fusion,
        metric: vertex_count,
        metric_note: VERTICES,
    }
}

pub fn isolated_rule() -> Rule<V> {
    Rule {
        name: "isolated spider removal",
        matcher: |d| match_isolated(d),
        rewriter: rewrite_isolated,
        metric: vertex_count,
        metric_note: VERTICES,
    }
}

/// Applies `rule` until it finds no matches; returns the number of passes.
pub fn run_basic_simplifier<M>(d: &mut Diagram, rule: &Rule<M>) -> Result<usize, SimplifyError> {
    let ceiling = 10 * d.num_vertices().max(1);
    let mut passes = 0;
    loop {
        let matches = (rule.matcher)(d);
        if matches.is_empty() {
            return Ok(passes);
        }
        if passes >= ceiling {
            return Err(SimplifyError::NoProgress {
                rule: rule.name,
                iterations: passes,
            });
        }
        let before = if cfg!(debug_assertions) { (rule.metric)(d) } else { 0 };
        let batch = (rule.rewriter)(d, &matches);
        batch.apply(d);
        debug_assert!(
            (rule.metric)(d) < before,
            "{}: metric ({}) did not decrease",
            rule.name,
            rule.metric_note
        );
        passes += 1;
    }
}

pub fn spider_simp(d: &mut Diagram) -> Result<usize, SimplifyError> {
    run_basic_simplifier(d, &spider_rule())
}

pub fn id_simp(d: &mut Diagram) -> Result<usize, SimplifyError> {
    run_basic_simplifier(d, &id_rule())
}

pub fn lcomp_simp(d: &mut Diagram) -> Result<usize, SimplifyError> {
    run_basic_simplifier(d, &lcomp_rule())
}

pub fn pivot_simp(d: &mut Diagram) -> Result<usize, SimplifyError> {
    run_basic_simplifier(d, &pivot_rule())
}

pub fn boundary_pivot_simp(d: &mut Diagram) -> Result<usize, SimplifyError> {
    run_basic_simplifier(d, &boundary_pivot_rule())
}

pub fn pivot_gadget_simp(d: &mut Diagram) -> Result<usize, SimplifyError> {
    run_basic_simplifier(d, &pivot_gadget_rule())
}

pub fn gadget_simp(d: &mut Diagram) -> Result<usize, SimplifyError> {
    run_basic_simplifier(d, &gadget_rule())
}

pub fn isolated_simp(d: &mut Diagram) -> Result<usize, SimplifyError> {
    run_basic_simplifier(d, &isolated_rule())
}

/// Removes identities and fuses spiders until neither applies.
pub fn fuse_simp(d: &mut Diagram) -> Result<usize, SimplifyError> {
    let mut loops = 0;
    loop {
        let i = id_simp(d)?;
        let j = spider_simp(d)?;
        if i + j == 0 {
            return Ok(loops);
        }
        loops += 1;
    }
}

/// Fusion, colour change, then identity removal, fusion, pivoting and local
/// complementation on interior spiders until none applies.
pub fn interior_clifford_simp(d: &mut Diagram) -> Result<usize, SimplifyError> {
    spider_simp(d)?;
    to_gh(d);
    let mut loops = 0;
    loop {
        let n = id_simp(d)? + spider_simp(d)? + pivot_simp(d)? + lcomp_simp(d)? + isolated_simp(d)?;
        if n == 0 {
            return Ok(loops);
        }
        loops += 1;
    }
}

/// Reduces Clifford diagrams to graph states with local Cliffords.
pub fn clifford_simp(d: &mut Diagram) -> Result<usize, SimplifyError> {
    let mut loops = 0;
    loop {
        let i = interior_clifford_simp(d)?;
        let j = boundary_pivot_simp(d)?;
        if j == 0 {
            return Ok(loops + usize::from(i > 0));
        }
        loops += 1;
    }
}

/// [`clifford_simp`] plus gadget pivoting and gadget fusion, repeated until
/// no rule applies.
pub fn full_reduce(d: &mut Diagram) -> Result<usize, SimplifyError> {
    let mut loops = usize::from(interior_clifford_simp(d)? > 0);
    loops += pivot_gadget_simp(d)?;
    loop {
        let a = clifford_simp(d)?;
        let i = gadget_simp(d)?;
        let b = interior_clifford_simp(d)?;
        let j = pivot_gadget_simp(d)?;
        // Stop only once nothing at all applied: the Clifford passes can
        // line up two gadgets on the same targets after gadget fusion ran.
        if a + i + b + j == 0 {
            return Ok(loops + usize::from(a + b > 0));
        }
        loops += 1;
    }
}
