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

//! Individual rewrite rules. Each has a matcher returning non-overlapping
//! matches in ascending vertex order and a rewriter that applies phase
//! changes directly and returns the structural changes as a batch.

use super::RewriteBatch;
use crate::graph::{Diagram, EdgeKind, EdgeTableEntry, VertexData, VertexKind, V};
use crate::phase::Phase;
use std::collections::{BTreeMap, BTreeSet};

fn is_z(d: &Diagram, v: V) -> bool {
    d.kind(v) == VertexKind::ZSpider
}

fn is_spider(d: &Diagram, v: V) -> bool {
    d.kind(v) != VertexKind::Boundary
}

/// Z spider with no boundary neighbours, only Hadamard edges, and only Z
/// spider neighbours.
fn graph_like_interior(d: &Diagram, v: V) -> bool {
    is_z(d, v) && d.incident_edges(v).all(|(n, k)| k == EdgeKind::Hadamard && is_z(d, n))
}

fn any_taken(taken: &BTreeSet<V>, vs: impl IntoIterator<Item = V>) -> bool {
    vs.into_iter().any(|v| taken.contains(&v))
}

/// The unique degree-1 Z spider hanging off `v` through a Hadamard edge.
fn leaf_of(d: &Diagram, v: V) -> Option<V> {
    let mut leaves = d
        .incident_edges(v)
        .filter(|&(n, k)| k == EdgeKind::Hadamard && is_z(d, n) && d.degree(n) == 1);
    let l = leaves.next()?.0;
    if leaves.next().is_some() {
        return None;
    }
    Some(l)
}

fn is_leaf_or_hub(d: &Diagram, v: V) -> bool {
    d.degree(v) == 1 || d.neighbors(v).any(|n| is_spider(d, n) && d.degree(n) == 1)
}

/// Spiders not belonging to a phase gadget. Decreases under gadget pivots.
pub(crate) fn non_gadget_spiders(d: &Diagram) -> usize {
    d.vertices()
        .filter(|&v| is_spider(d, v) && !is_leaf_or_hub(d, v))
        .count()
}

// ---- spider fusion ----

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpiderMatch {
    pub keep: V,
    pub gone: V,
}

pub fn match_spider_fusion(d: &Diagram) -> Vec<SpiderMatch> {
    let mut taken = BTreeSet::new();
    let mut out = Vec::new();
    for (u, v, k) in d.edges() {
        if k != EdgeKind::Simple || !is_spider(d, u) || d.kind(u) != d.kind(v) {
            continue;
        }
        if taken.contains(&u) || taken.contains(&v) || any_taken(&taken, d.neighbors(v)) {
            continue;
        }
        taken.insert(u);
        taken.insert(v);
        taken.extend(d.neighbors(v));
        out.push(SpiderMatch { keep: u, gone: v });
    }
    out
}

pub fn rewrite_spider_fusion(d: &mut Diagram, matches: &[SpiderMatch]) -> RewriteBatch {
    let mut batch = RewriteBatch::default();
    for m in matches {
        let p = d.phase(m.gone);
        d.add_to_phase(m.keep, p);
        d.fuse_tracked(m.keep, m.gone);
        for (n, k) in d.incident_edges(m.gone) {
            if n != m.keep {
                batch.edge_table.push(EdgeTableEntry::new(m.keep, n, k));
            }
        }
        batch.vertices_to_remove.insert(m.gone);
    }
    batch
}

// ---- identity removal ----

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdMatch {
    pub v: V,
    pub n1: V,
    pub n2: V,
    pub kind: EdgeKind,
}

pub fn match_id(d: &Diagram) -> Vec<IdMatch> {
    let mut taken = BTreeSet::new();
    let mut out = Vec::new();
    for v in d.vertices() {
        if !is_spider(d, v) || !d.phase(v).is_zero() || d.degree(v) != 2 || taken.contains(&v) {
            continue;
        }
        let e: Vec<(V, EdgeKind)> = d.incident_edges(v).collect();
        let (n1, n2) = (e[0].0, e[1].0);
        if taken.contains(&n1) || taken.contains(&n2) {
            continue;
        }
        taken.extend([v, n1, n2]);
        out.push(IdMatch {
            v,
            n1,
            n2,
            kind: e[0].1.compose(e[1].1),
        });
    }
    out
}

pub fn rewrite_id(_d: &mut Diagram, matches: &[IdMatch]) -> RewriteBatch {
    let mut batch = RewriteBatch::default();
    for m in matches {
        batch.edge_table.push(EdgeTableEntry::new(m.n1, m.n2, m.kind));
        batch.vertices_to_remove.insert(m.v);
    }
    batch
}

// ---- colour change ----

/// Turns every X spider into a Z spider, toggling the edges that had an
/// odd number of X endpoints.
pub fn to_gh(d: &mut Diagram) {
    let xs: BTreeSet<V> = d.vertices().filter(|&v| d.kind(v) == VertexKind::XSpider).collect();
    let edges: Vec<(V, V, EdgeKind)> = d.edges().collect();
    for (u, v, k) in edges {
        if xs.contains(&u) != xs.contains(&v) {
            d.set_edge(u, v, k.toggle());
        }
    }
    for v in xs {
        d.set_kind(v, VertexKind::ZSpider);
    }
}

// ---- local complementation ----

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcompMatch {
    pub v: V,
    pub neighbors: Vec<V>,
}

pub fn match_lcomp(d: &Diagram) -> Vec<LcompMatch> {
    let mut taken = BTreeSet::new();
    let mut out = Vec::new();
    for v in d.vertices() {
        if !is_z(d, v) || !d.phase(v).is_proper_clifford() || taken.contains(&v) {
            continue;
        }
        if !graph_like_interior(d, v) || any_taken(&taken, d.neighbors(v)) {
            continue;
        }
        let neighbors: Vec<V> = d.neighbors(v).collect();
        taken.insert(v);
        taken.extend(neighbors.iter().copied());
        out.push(LcompMatch { v, neighbors });
    }
    out
}

pub fn rewrite_lcomp(d: &mut Diagram, matches: &[LcompMatch]) -> RewriteBatch {
    let mut batch = RewriteBatch::default();
    for m in matches {
        let p = d.phase(m.v);
        for (i, &a) in m.neighbors.iter().enumerate() {
            d.add_to_phase(a, -p);
            for &b in &m.neighbors[i + 1..] {
                batch.edge_table.push(EdgeTableEntry::new(a, b, EdgeKind::Hadamard));
            }
        }
        batch.vertices_to_remove.insert(m.v);
    }
    batch
}

// ---- pivoting ----

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PivotMatch {
    pub u: V,
    pub v: V,
}

fn pivot_candidate(d: &Diagram, v: V) -> bool {
    graph_like_interior(d, v) && d.phase(v).is_pauli()
}

pub fn match_pivot(d: &Diagram) -> Vec<PivotMatch> {
    let mut taken = BTreeSet::new();
    let mut out = Vec::new();
    for (u, v, k) in d.edges() {
        if k != EdgeKind::Hadamard || taken.contains(&u) || taken.contains(&v) {
            continue;
        }
        if !pivot_candidate(d, u) || !pivot_candidate(d, v) {
            continue;
        }
        if any_taken(&taken, d.neighbors(u).chain(d.neighbors(v))) {
            continue;
        }
        taken.extend(d.neighbors(u).chain(d.neighbors(v)));
        out.push(PivotMatch { u, v });
    }
    out
}

/// Pivots along the edge `u`–`v`. `extra_v` are vertices not yet wired in
/// that will be exclusive neighbours of `v`; `skip` are neighbours of `v`
/// to leave out of the complementation.
pub(crate) fn pivot_into(d: &mut Diagram, u: V, v: V, extra_v: &[V], skip: &[V], batch: &mut RewriteBatch) {
    let nu: BTreeSet<V> = d.neighbors(u).filter(|&n| n != v).collect();
    let mut nv: BTreeSet<V> = d.neighbors(v).filter(|&n| n != u && !skip.contains(&n)).collect();
    nv.extend(extra_v.iter().copied());
    let a: Vec<V> = nu.difference(&nv).copied().collect();
    let b: Vec<V> = nv.difference(&nu).copied().collect();
    let c: Vec<V> = nu.intersection(&nv).copied().collect();
    let (pu, pv) = (d.phase(u), d.phase(v));
    for &x in &a {
        d.add_to_phase(x, pv);
    }
    for &x in &b {
        d.add_to_phase(x, pu);
    }
    for &x in &c {
        d.add_to_phase(x, pu + pv + Phase::pi());
    }
    for (s, t) in [(&a, &b), (&a, &c), (&b, &c)] {
        for &x in s.iter() {
            for &y in t.iter() {
                batch.edge_table.push(EdgeTableEntry::new(x, y, EdgeKind::Hadamard));
            }
        }
    }
    batch.vertices_to_remove.insert(u);
    batch.vertices_to_remove.insert(v);
}

pub fn rewrite_pivot(d: &mut Diagram, matches: &[PivotMatch]) -> RewriteBatch {
    let mut batch = RewriteBatch::default();
    for m in matches {
        pivot_into(d, m.u, m.v, &[], &[], &mut batch);
    }
    batch
}

// ---- boundary pivot ----

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryPivotMatch {
    /// Interior Pauli spider.
    pub u: V,
    /// Pauli spider whose only obstruction is one boundary neighbour.
    pub v: V,
    pub boundary: V,
}

pub fn match_boundary_pivot(d: &Diagram) -> Vec<BoundaryPivotMatch> {
    let mut taken = BTreeSet::new();
    let mut out = Vec::new();
    for (a, b, k) in d.edges() {
        if k != EdgeKind::Hadamard || taken.contains(&a) || taken.contains(&b) {
            continue;
        }
        for (u, v) in [(a, b), (b, a)] {
            if !pivot_candidate(d, u) || !is_z(d, v) || !d.phase(v).is_pauli() {
                continue;
            }
            let Some(boundary) = single_boundary(d, v) else {
                continue;
            };
            if any_taken(&taken, d.neighbors(u).chain(d.neighbors(v))) {
                continue;
            }
            taken.extend(d.neighbors(u).chain(d.neighbors(v)));
            out.push(BoundaryPivotMatch { u, v, boundary });
            break;
        }
    }
    out
}

/// The one boundary neighbour of `v`, when every other edge of `v` is a
/// Hadamard edge to a Z spider.
fn single_boundary(d: &Diagram, v: V) -> Option<V> {
    let mut bs = d.neighbors(v).filter(|&n| d.is_boundary(n));
    let b = bs.next()?;
    if bs.next().is_some() {
        return None;
    }
    d.incident_edges(v)
        .all(|(n, k)| n == b || (k == EdgeKind::Hadamard && is_z(d, n)))
        .then_some(b)
}

/// Rewires `b -e- v` as `b -toggle(e)- n(0) -H- v` and returns `n`, which
/// the caller must hand to [`pivot_into`] as an extra neighbour of `v`.
fn unfuse_boundary(d: &mut Diagram, v: V, b: V, batch: &mut RewriteBatch) -> V {
    let e = d.edge_kind(b, v).expect("boundary edge");
    let data = d.vertex(v).clone();
    let n = d.add_vertex_unchecked(VertexData {
        kind: VertexKind::ZSpider,
        phase: Phase::zero(),
        ..data
    });
    batch.edge_table.push(EdgeTableEntry::new(b, n, e.toggle()));
    n
}

pub fn rewrite_boundary_pivot(d: &mut Diagram, matches: &[BoundaryPivotMatch]) -> RewriteBatch {
    let mut batch = RewriteBatch::default();
    for m in matches {
        let n = unfuse_boundary(d, m.v, m.boundary, &mut batch);
        pivot_into(d, m.u, m.v, &[n], &[m.boundary], &mut batch);
    }
    batch
}

// ---- gadget pivot ----

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetPivotMatch {
    /// Interior Pauli spider.
    pub u: V,
    /// Spider with a non-Pauli phase, moved onto a new gadget.
    pub v: V,
    /// A boundary neighbour of `v`, split off before pivoting.
    pub boundary: Option<V>,
}

pub fn match_pivot_gadget(d: &Diagram) -> Vec<GadgetPivotMatch> {
    let mut taken = BTreeSet::new();
    let mut out = Vec::new();
    for (a, b, k) in d.edges() {
        if k != EdgeKind::Hadamard || taken.contains(&a) || taken.contains(&b) {
            continue;
        }
        for (u, v) in [(a, b), (b, a)] {
            if !pivot_candidate(d, u) || !is_z(d, v) || d.phase(v).is_pauli() {
                continue;
            }
            let boundary = if graph_like_interior(d, v) {
                None
            } else {
                match single_boundary(d, v) {
                    Some(b) => Some(b),
                    None => continue,
                }
            };
            if is_leaf_or_hub(d, u) || is_leaf_or_hub(d, v) {
                continue;
            }
            if any_taken(&taken, d.neighbors(u).chain(d.neighbors(v))) {
                continue;
            }
            taken.extend(d.neighbors(u).chain(d.neighbors(v)));
            out.push(GadgetPivotMatch { u, v, boundary });
            break;
        }
    }
    out
}

pub fn rewrite_pivot_gadget(d: &mut Diagram, matches: &[GadgetPivotMatch]) -> RewriteBatch {
    let mut batch = RewriteBatch::default();
    for m in matches {
        let data = d.vertex(m.v).clone();
        let hub = d.add_vertex_unchecked(VertexData {
            phase: Phase::zero(),
            ..data.clone()
        });
        let leaf = d.add_vertex_unchecked(VertexData {
            row: data.row + 1,
            ..data
        });
        d.set_phase(m.v, Phase::zero());
        d.transfer_tracked(m.v, leaf);
        batch
            .edge_table
            .push(EdgeTableEntry::new(hub, leaf, EdgeKind::Hadamard));
        match m.boundary {
            Some(b) => {
                let n = unfuse_boundary(d, m.v, b, &mut batch);
                pivot_into(d, m.u, m.v, &[hub, n], &[b], &mut batch);
            }
            None => pivot_into(d, m.u, m.v, &[hub], &[], &mut batch),
        }
        if d.phase(hub) == Phase::pi() {
            d.set_phase(hub, Phase::zero());
            let p = d.phase(leaf);
            d.set_phase(leaf, -p);
            d.negate_tracked(leaf);
        }
    }
    batch
}

// ---- phase gadget fusion ----

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetFusionMatch {
    /// `(leaf, hub)` pairs; the first one survives.
    pub gadgets: Vec<(V, V)>,
    pub targets: Vec<V>,
}

/// Sets every phase-π hub to 0 by negating its leaf.
fn normalise_gadget_hubs(d: &mut Diagram) {
    let hubs: Vec<(V, V)> = d
        .vertices()
        .filter(|&h| is_z(d, h) && d.phase(h) == Phase::pi() && d.degree(h) > 1)
        .filter_map(|h| leaf_of(d, h).map(|l| (h, l)))
        .collect();
    for (h, l) in hubs {
        d.set_phase(h, Phase::zero());
        let p = d.phase(l);
        d.set_phase(l, -p);
        d.negate_tracked(l);
    }
}

pub fn match_gadget_fusion(d: &mut Diagram) -> Vec<GadgetFusionMatch> {
    normalise_gadget_hubs(d);
    let mut groups: BTreeMap<Vec<V>, Vec<(V, V)>> = BTreeMap::new();
    for h in d.vertices() {
        if !graph_like_interior(d, h) || !d.phase(h).is_zero() || d.degree(h) < 2 {
            continue;
        }
        let Some(l) = leaf_of(d, h) else { continue };
        let targets: Vec<V> = d.neighbors(h).filter(|&n| n != l).collect();
        if targets.iter().any(|&t| d.degree(t) == 1) {
            continue;
        }
        groups.entry(targets).or_default().push((l, h));
    }
    let mut used = BTreeSet::new();
    let mut out = Vec::new();
    for (targets, gadgets) in groups {
        if gadgets.len() < 2 {
            continue;
        }
        let all: Vec<V> = gadgets
            .iter()
            .flat_map(|&(l, h)| [l, h])
            .chain(targets.iter().copied())
            .collect();
        if any_taken(&used, all.iter().copied()) {
            continue;
        }
        used.extend(all);
        out.push(GadgetFusionMatch { gadgets, targets });
    }
    out
}

pub fn rewrite_gadget_fusion(d: &mut Diagram, matches: &[GadgetFusionMatch]) -> RewriteBatch {
    let mut batch = RewriteBatch::default();
    for m in matches {
        let (l0, h0) = m.gadgets[0];
        for &(l, h) in &m.gadgets[1..] {
            let p = d.phase(l);
            d.add_to_phase(l0, p);
            d.fuse_tracked(l0, l);
            batch.vertices_to_remove.extend([l, h]);
        }
        let p = d.phase(l0);
        if p.is_pauli() {
            if p == Phase::pi() {
                for &t in &m.targets {
                    d.add_to_phase(t, Phase::pi());
                }
            }
            batch.vertices_to_remove.extend([l0, h0]);
        }
    }
    batch
}

// ---- scalar clean-up ----

/// Isolated spiders that contribute only a non-zero scalar.
pub fn match_isolated(d: &Diagram) -> Vec<V> {
    d.vertices()
        .filter(|&v| is_spider(d, v) && d.degree(v) == 0 && d.phase(v) != Phase::pi())
        .collect()
}

pub fn rewrite_isolated(_d: &mut Diagram, matches: &[V]) -> RewriteBatch {
    RewriteBatch {
        edge_table: Vec::new(),
        vertices_to_remove: matches.iter().copied().collect(),
    }
}
