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

//! ZX-diagrams as simple graphs with typed vertices and edges.
//!
//! Parallel edges and self-loops never persist: [`Diagram::add_edge`]
//! overwrites, while [`Diagram::add_edge_table`] resolves multi-edges with
//! the rules of the calculus so that the linear map is preserved up to a
//! non-zero scalar.

use crate::phase::Phase;
use num_rational::Rational64;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Vertex identifier. Ids come from a monotone counter and are never reused.
pub type V = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    Boundary,
    ZSpider,
    XSpider,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum EdgeKind {
    #[default]
    Simple,
    Hadamard,
}

impl EdgeKind {
    pub fn toggle(self) -> EdgeKind {
        match self {
            EdgeKind::Simple => EdgeKind::Hadamard,
            EdgeKind::Hadamard => EdgeKind::Simple,
        }
    }

    /// Kind of the wire obtained by joining two wires end to end.
    pub fn compose(self, other: EdgeKind) -> EdgeKind {
        if self == other {
            EdgeKind::Simple
        } else {
            EdgeKind::Hadamard
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexData {
    pub kind: VertexKind,
    pub phase: Phase,
    pub row: Rational64,
    pub qubit: Rational64,
}

/// Requested edges between `u` and `v` (possibly equal), by kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeTableEntry {
    pub u: V,
    pub v: V,
    pub simple_count: usize,
    pub hadamard_count: usize,
}

impl EdgeTableEntry {
    pub fn new(u: V, v: V, kind: EdgeKind) -> Self {
        let (s, h) = match kind {
            EdgeKind::Simple => (1, 0),
            EdgeKind::Hadamard => (0, 1),
        };
        EdgeTableEntry {
            u,
            v,
            simple_count: s,
            hadamard_count: h,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("vertex {0} does not exist")]
    UnknownVertex(V),
    #[error("boundary vertices must have phase 0")]
    BoundaryPhase,
    #[error("self-loop on vertex {0}; use add_edge_table")]
    SelfLoop(V),
    #[error("boundary vertex {0} would have degree greater than one")]
    BoundaryDegree(V),
    #[error("cannot compose: {outputs} outputs against {inputs} inputs")]
    ArityMismatch { outputs: usize, inputs: usize },
    #[error("boundary vertex {0} is not connected to anything")]
    DanglingBoundary(V),
}

/// Tracks which circuit phases have been merged by rewrites. Each tracked
/// vertex carries one variable; variables that end up in the same spider
/// form a group whose members carry a sign relative to the group's root.
#[derive(Debug, Clone, Default)]
pub(crate) struct PhaseTracker {
    var_of: BTreeMap<V, usize>,
    parent: Vec<usize>,
    // parity of a variable relative to its parent
    parity: Vec<bool>,
    // for roots: whether the whole group is currently negated
    flip: Vec<bool>,
}

impl PhaseTracker {
    pub(crate) fn new_var(&mut self, v: V) -> usize {
        let id = self.parent.len();
        self.parent.push(id);
        self.parity.push(false);
        self.flip.push(false);
        self.var_of.insert(v, id);
        id
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, par) = self.find(p);
        let total = par ^ self.parity[x];
        self.parent[x] = root;
        self.parity[x] = total;
        (root, total)
    }

    fn fuse(&mut self, keep: V, gone: V) {
        let Some(g) = self.var_of.remove(&gone) else {
            return;
        };
        match self.var_of.get(&keep).copied() {
            None => {
                self.var_of.insert(keep, g);
            }
            Some(k) => {
                let (rk, _) = self.find(k);
                let (rg, _) = self.find(g);
                if rk != rg {
                    self.parent[rg] = rk;
                    self.parity[rg] = self.flip[rg] ^ self.flip[rk];
                }
            }
        }
    }

    fn negate(&mut self, v: V) {
        if let Some(&x) = self.var_of.get(&v) {
            let (r, _) = self.find(x);
            self.flip[r] = !self.flip[r];
        }
    }

    fn transfer(&mut self, from: V, to: V) {
        if let Some(x) = self.var_of.remove(&from) {
            self.var_of.insert(to, x);
        }
    }

    fn forget(&mut self, v: V) {
        self.var_of.remove(&v);
    }

    /// `(group root, coefficient sign)` for every variable: the variable
    /// currently contributes `sign · α` to its group's spider.
    pub(crate) fn groups(&mut self) -> Vec<(usize, bool)> {
        (0..self.parent.len())
            .map(|x| {
                let (r, par) = self.find(x);
                (r, par ^ self.flip[r])
            })
            .collect()
    }
}

/// A ZX-diagram.
#[derive(Debug, Clone, Default)]
pub struct Diagram {
    vdata: Vec<Option<VertexData>>,
    adj: Vec<BTreeMap<V, EdgeKind>>,
    inputs: Vec<V>,
    outputs: Vec<V>,
    num_vertices: usize,
    num_edges: usize,
    pub(crate) tracker: Option<PhaseTracker>,
}

impl PartialEq for Diagram {
    fn eq(&self, other: &Self) -> bool {
        self.vdata == other.vdata
            && self.adj == other.adj
            && self.inputs == other.inputs
            && self.outputs == other.outputs
    }
}

impl Diagram {
    pub fn new() -> Diagram {
        Diagram::default()
    }

    pub fn add_vertex(
        &mut self,
        kind: VertexKind,
        phase: Phase,
        row: Rational64,
        qubit: Rational64,
    ) -> Result<V, DiagramError> {
        if kind == VertexKind::Boundary && !phase.is_zero() {
            return Err(DiagramError::BoundaryPhase);
        }
        Ok(self.add_vertex_unchecked(VertexData {
            kind,
            phase,
            row,
            qubit,
        }))
    }

    /// Spider or boundary with phase zero at the given integer position.
    pub fn add_node(&mut self, kind: VertexKind, row: i64, qubit: i64) -> V {
        self.add_vertex_unchecked(VertexData {
            kind,
            phase: Phase::zero(),
            row: Rational64::from_integer(row),
            qubit: Rational64::from_integer(qubit),
        })
    }

    pub(crate) fn add_vertex_unchecked(&mut self, data: VertexData) -> V {
        let v = self.vdata.len();
        self.vdata.push(Some(data));
        self.adj.push(BTreeMap::new());
        self.num_vertices += 1;
        v
    }

    pub fn contains(&self, v: V) -> bool {
        self.vdata.get(v).is_some_and(|d| d.is_some())
    }

    fn check(&self, v: V) -> Result<(), DiagramError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(DiagramError::UnknownVertex(v))
        }
    }

    /// Adds or overwrites the edge between `u` and `v`.
    pub fn add_edge(&mut self, u: V, v: V, kind: EdgeKind) -> Result<(), DiagramError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(DiagramError::SelfLoop(u));
        }
        for (b, other) in [(u, v), (v, u)] {
            if self.kind(b) == VertexKind::Boundary && self.degree(b) > 0 && !self.adj[b].contains_key(&other) {
                return Err(DiagramError::BoundaryDegree(b));
            }
        }
        self.set_edge(u, v, kind);
        Ok(())
    }

    pub(crate) fn set_edge(&mut self, u: V, v: V, kind: EdgeKind) {
        if self.adj[u].insert(v, kind).is_none() {
            self.num_edges += 1;
        }
        self.adj[v].insert(u, kind);
    }

    pub fn remove_edge(&mut self, u: V, v: V) {
        if self.adj.get(u).and_then(|a| a.get(&v)).is_some() {
            self.adj[u].remove(&v);
            self.adj[v].remove(&u);
            self.num_edges -= 1;
        }
    }

    /// Adds a batch of edges, resolving parallel edges and self-loops.
    ///
    /// Between spiders of the same colour any simple edge fuses them, so the
    /// remaining Hadamard edges become self-loops, each contributing π.
    /// Between different colours the roles of the two edge kinds swap.
    /// Hadamard self-loops contribute π; simple self-loops vanish.
    pub fn add_edge_table(&mut self, entries: &[EdgeTableEntry]) -> Result<(), DiagramError> {
        let mut table: BTreeMap<(V, V), (usize, usize)> = BTreeMap::new();
        for e in entries {
            self.check(e.u)?;
            self.check(e.v)?;
            let key = (e.u.min(e.v), e.u.max(e.v));
            let c = table.entry(key).or_default();
            c.0 += e.simple_count;
            c.1 += e.hadamard_count;
        }
        for (&(u, v), &(s, h)) in &table {
            if u == v {
                if self.kind(u) == VertexKind::Boundary {
                    return Err(DiagramError::BoundaryDegree(u));
                }
                if h % 2 == 1 {
                    self.add_to_phase(u, Phase::pi());
                }
                continue;
            }
            let (mut s, mut h) = (s, h);
            match self.edge_kind(u, v) {
                Some(EdgeKind::Simple) => s += 1,
                Some(EdgeKind::Hadamard) => h += 1,
                None => {}
            }
            let (ku, kv) = (self.kind(u), self.kind(v));
            if ku == VertexKind::Boundary || kv == VertexKind::Boundary {
                if s + h > 1 {
                    let b = if ku == VertexKind::Boundary { u } else { v };
                    return Err(DiagramError::BoundaryDegree(b));
                }
                let kind = if s == 1 { EdgeKind::Simple } else { EdgeKind::Hadamard };
                for b in [u, v] {
                    if self.kind(b) == VertexKind::Boundary && self.degree(b) > 0 && !self.connected(u, v) {
                        return Err(DiagramError::BoundaryDegree(b));
                    }
                }
                self.set_edge(u, v, kind);
                continue;
            }
            // (fusing kind, cancelling kind) for this colour pair
            let (fusing, cancelling) = if ku == kv { (s, h) } else { (h, s) };
            let (fusing_kind, cancelling_kind) = if ku == kv {
                (EdgeKind::Simple, EdgeKind::Hadamard)
            } else {
                (EdgeKind::Hadamard, EdgeKind::Simple)
            };
            self.remove_edge(u, v);
            if fusing > 0 {
                self.set_edge(u, v, fusing_kind);
                if cancelling % 2 == 1 {
                    self.add_to_phase(u, Phase::pi());
                }
            } else if cancelling % 2 == 1 {
                self.set_edge(u, v, cancelling_kind);
            }
        }
        Ok(())
    }

    /// Removes vertices and their edges. Ids that are already gone are
    /// ignored.
    pub fn remove_vertices<I: IntoIterator<Item = V>>(&mut self, ids: I) {
        let mut gone = BTreeSet::new();
        for v in ids {
            if !self.contains(v) {
                continue;
            }
            let nbrs: Vec<V> = self.adj[v].keys().copied().collect();
            for n in nbrs {
                self.remove_edge(v, n);
            }
            self.vdata[v] = None;
            self.num_vertices -= 1;
            if let Some(t) = self.tracker.as_mut() {
                t.forget(v);
            }
            gone.insert(v);
        }
        if !gone.is_empty() {
            self.inputs.retain(|v| !gone.contains(v));
            self.outputs.retain(|v| !gone.contains(v));
        }
    }

    pub fn remove_vertex(&mut self, v: V) {
        self.remove_vertices([v]);
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    /// Live vertex ids in ascending order.
    pub fn vertices(&self) -> impl Iterator<Item = V> + '_ {
        self.vdata.iter().enumerate().filter_map(|(v, d)| d.as_ref().map(|_| v))
    }

    /// Edges `(u, v, kind)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (V, V, EdgeKind)> + '_ {
        self.vertices()
            .flat_map(move |u| self.adj[u].range(u + 1..).map(move |(&v, &k)| (u, v, k)))
    }

    pub fn neighbors(&self, v: V) -> impl Iterator<Item = V> + '_ {
        self.adj[v].keys().copied()
    }

    pub fn incident_edges(&self, v: V) -> impl Iterator<Item = (V, EdgeKind)> + '_ {
        self.adj[v].iter().map(|(&n, &k)| (n, k))
    }

    pub fn degree(&self, v: V) -> usize {
        self.adj[v].len()
    }

    pub fn connected(&self, u: V, v: V) -> bool {
        self.adj[u].contains_key(&v)
    }

    pub fn edge_kind(&self, u: V, v: V) -> Option<EdgeKind> {
        self.adj.get(u).and_then(|a| a.get(&v)).copied()
    }

    pub fn vertex(&self, v: V) -> &VertexData {
        self.vdata[v].as_ref().expect("vertex was removed")
    }

    fn vertex_mut(&mut self, v: V) -> &mut VertexData {
        self.vdata[v].as_mut().expect("vertex was removed")
    }

    pub fn kind(&self, v: V) -> VertexKind {
        self.vertex(v).kind
    }

    pub fn set_kind(&mut self, v: V, kind: VertexKind) {
        self.vertex_mut(v).kind = kind;
    }

    pub fn phase(&self, v: V) -> Phase {
        self.vertex(v).phase
    }

    pub fn set_phase(&mut self, v: V, phase: Phase) {
        self.vertex_mut(v).phase = phase;
    }

    pub fn add_to_phase(&mut self, v: V, phase: Phase) {
        self.vertex_mut(v).phase += phase;
    }

    pub fn row(&self, v: V) -> Rational64 {
        self.vertex(v).row
    }

    pub fn qubit(&self, v: V) -> Rational64 {
        self.vertex(v).qubit
    }

    pub fn set_position(&mut self, v: V, row: Rational64, qubit: Rational64) {
        let d = self.vertex_mut(v);
        d.row = row;
        d.qubit = qubit;
    }

    pub fn inputs(&self) -> &[V] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[V] {
        &self.outputs
    }

    pub fn set_inputs(&mut self, inputs: Vec<V>) {
        self.inputs = inputs;
    }

    pub fn set_outputs(&mut self, outputs: Vec<V>) {
        self.outputs = outputs;
    }

    pub fn is_boundary(&self, v: V) -> bool {
        self.kind(v) == VertexKind::Boundary
    }

    /// Spider adjacent to no boundary vertex.
    pub fn is_interior(&self, v: V) -> bool {
        !self.is_boundary(v) && self.neighbors(v).all(|n| !self.is_boundary(n))
    }

    /// Merges the tracked phase variable of `gone` into `keep`.
    pub(crate) fn fuse_tracked(&mut self, keep: V, gone: V) {
        if let Some(t) = self.tracker.as_mut() {
            t.fuse(keep, gone);
        }
    }

    pub(crate) fn negate_tracked(&mut self, v: V) {
        if let Some(t) = self.tracker.as_mut() {
            t.negate(v);
        }
    }

    pub(crate) fn transfer_tracked(&mut self, from: V, to: V) {
        if let Some(t) = self.tracker.as_mut() {
            t.transfer(from, to);
        }
    }

    /// Copies `other` into `self`, returning the id map for `other`'s
    /// vertices. Boundary lists are not touched.
    fn append(&mut self, other: &Diagram) -> BTreeMap<V, V> {
        let mut map = BTreeMap::new();
        for v in other.vertices() {
            map.insert(v, self.add_vertex_unchecked(other.vertex(v).clone()));
        }
        for (u, v, k) in other.edges() {
            self.set_edge(map[&u], map[&v], k);
        }
        map
    }

    /// Disjoint union; inputs and outputs are concatenated.
    pub fn tensor_product(&self, other: &Diagram) -> Diagram {
        let mut d = self.clone();
        d.tracker = None;
        let shift = self
            .vertices()
            .map(|v| self.qubit(v))
            .max()
            .map_or(Rational64::from_integer(0), |q| q + 1);
        let map = d.append(other);
        for &v in map.values() {
            let (r, q) = (d.row(v), d.qubit(v));
            d.set_position(v, r, q + shift);
        }
        d.inputs.extend(other.inputs.iter().map(|v| map[v]));
        d.outputs.extend(other.outputs.iter().map(|v| map[v]));
        d
    }

    /// Sequential composition: the outputs of `self` are plugged into the
    /// inputs of `other`.
    pub fn compose(&self, other: &Diagram) -> Result<Diagram, DiagramError> {
        if self.outputs.len() != other.inputs.len() {
            return Err(DiagramError::ArityMismatch {
                outputs: self.outputs.len(),
                inputs: other.inputs.len(),
            });
        }
        let mut d = self.clone();
        d.tracker = None;
        let shift = self.vertices().map(|v| self.row(v)).max().unwrap_or_default()
            - other.vertices().map(|v| other.row(v)).min().unwrap_or_default();
        let map = d.append(other);
        for &v in map.values() {
            let (r, q) = (d.row(v), d.qubit(v));
            d.set_position(v, r + shift, q);
        }
        for (&o, &i) in self.outputs.iter().zip(&other.inputs) {
            if d.degree(o) == 0 {
                return Err(DiagramError::DanglingBoundary(o));
            }
            if d.degree(map[&i]) == 0 {
                return Err(DiagramError::DanglingBoundary(i));
            }
        }
        // Chains of identity wires may route one join through another, so
        // resolve them one at a time against the current neighbours.
        for (&o, &i) in self.outputs.iter().zip(&other.inputs) {
            let (o, i) = (&o, &map[&i]);
            let (a, ka) = d.incident_edges(*o).next().expect("checked above");
            let (b, kb) = d.incident_edges(*i).next().expect("checked above");
            d.remove_vertices([*o, *i]);
            if a == *i {
                // o is wired straight to i: nothing left to connect
                continue;
            }
            d.add_edge_table(&[EdgeTableEntry::new(a, b, ka.compose(kb))])?;
        }
        d.inputs = self.inputs.clone();
        d.outputs = other.outputs.iter().map(|v| map[v]).collect();
        Ok(d)
    }

    /// Swaps inputs and outputs and negates every phase.
    pub fn adjoint(&self) -> Diagram {
        let mut d = self.clone();
        d.tracker = None;
        let vs: Vec<V> = d.vertices().collect();
        let max_row = vs.iter().map(|&v| d.row(v)).max().unwrap_or_default();
        for v in vs {
            let p = d.phase(v);
            d.set_phase(v, -p);
            let (r, q) = (d.row(v), d.qubit(v));
            d.set_position(v, max_row - r, q);
        }
        std::mem::swap(&mut d.inputs, &mut d.outputs);
        d
    }

    /// Relayout: inputs in the first column, outputs in the last, interior
    /// vertices in between keeping their relative row order.
    pub fn normalise(&mut self) {
        let boundary: BTreeSet<V> = self.inputs.iter().chain(&self.outputs).copied().collect();
        let interior: Vec<V> = self.vertices().filter(|v| !boundary.contains(v)).collect();
        let one = Rational64::from_integer(1);
        let min_row = interior.iter().map(|&v| self.row(v)).min().unwrap_or_default();
        let mut max_row = Rational64::from_integer(0);
        for &v in &interior {
            let r = self.row(v) - min_row + one;
            let q = self.qubit(v);
            self.set_position(v, r, q);
            max_row = max_row.max(r);
        }
        let inputs = self.inputs.clone();
        for (i, v) in inputs.into_iter().enumerate() {
            self.set_position(v, Rational64::from_integer(0), Rational64::from_integer(i as i64));
        }
        let outputs = self.outputs.clone();
        for (i, v) in outputs.into_iter().enumerate() {
            self.set_position(v, max_row + one, Rational64::from_integer(i as i64));
        }
    }

    /// True iff the diagram is a bare identity: `inputs[i]` wired straight
    /// to `outputs[i]` by a simple edge and nothing else present.
    pub fn is_identity(&self) -> bool {
        self.inputs.len() == self.outputs.len()
            && self.num_vertices == 2 * self.inputs.len()
            && self
                .inputs
                .iter()
                .zip(&self.outputs)
                .all(|(&i, &o)| self.edge_kind(i, o) == Some(EdgeKind::Simple))
    }

    /// Scans for violations of the structural invariants. Used in tests.
    pub fn check_invariants(&self) -> Result<(), String> {
        let mut edges = 0;
        for u in self.vertices() {
            for (&v, &k) in &self.adj[u] {
                if u == v {
                    return Err(format!("self-loop on {u}"));
                }
                if !self.contains(v) {
                    return Err(format!("edge to removed vertex {v}"));
                }
                if self.adj[v].get(&u) != Some(&k) {
                    return Err(format!("asymmetric edge {u}-{v}"));
                }
                edges += 1;
            }
            if self.is_boundary(u) {
                if !self.phase(u).is_zero() {
                    return Err(format!("boundary {u} has a phase"));
                }
                if self.degree(u) > 1 {
                    return Err(format!("boundary {u} has degree {}", self.degree(u)));
                }
                let count = self.inputs.iter().chain(&self.outputs).filter(|&&b| b == u).count();
                if count != 1 {
                    return Err(format!("boundary {u} listed {count} times"));
                }
            }
        }
        if edges != 2 * self.num_edges {
            return Err("edge count out of sync".into());
        }
        for &b in self.inputs.iter().chain(&self.outputs) {
            if !self.contains(b) || !self.is_boundary(b) {
                return Err(format!("{b} listed as boundary but is not one"));
            }
        }
        Ok(())
    }
}
