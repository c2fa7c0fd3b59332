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

//! Circuit extraction from graph-like diagrams.
//!
//! Works from the outputs towards the inputs. The frontier holds, for each
//! output, the spider attached to it. Each round peels Hadamards and phases
//! off the frontier, turns frontier-frontier edges into CZs, absorbs phase
//! gadgets next to the frontier by pivoting, and otherwise row-reduces the
//! frontier's biadjacency matrix (emitting one CNOT per row operation) until
//! some frontier spider has a single neighbour it can advance to.

use crate::circuit::{Circuit, Gate};
use crate::graph::{Diagram, EdgeKind, VertexData, VertexKind, V};
use crate::linalg::Mat2;
use crate::phase::Phase;
use crate::simplify::{pivot_into, spider_simp, to_gh, RewriteBatch};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, Clone)]
pub enum ExtractError {
    #[error("diagram has {inputs} inputs and {outputs} outputs")]
    Shape { inputs: usize, outputs: usize },
    #[error("extraction stuck: {reason}")]
    Stuck { reason: String, residual: Box<Diagram> },
}

struct Extractor {
    g: Diagram,
    /// Frontier spider per qubit; `None` once the qubit's output is wired
    /// straight to an input.
    frontier: Vec<Option<V>>,
    inputs: BTreeSet<V>,
    /// Gates from the outputs inwards.
    gates: Vec<Gate>,
}

fn new_spider(g: &mut Diagram, near: V) -> V {
    let data = g.vertex(near).clone();
    g.add_vertex_unchecked(VertexData {
        kind: VertexKind::ZSpider,
        phase: Phase::zero(),
        ..data
    })
}

impl Extractor {
    fn output_of(&self, q: usize) -> V {
        self.g.outputs()[q]
    }

    fn stuck(&self, reason: impl Into<String>) -> ExtractError {
        ExtractError::Stuck {
            reason: reason.into(),
            residual: Box::new(self.g.clone()),
        }
    }

    fn init_frontier(&mut self) -> Result<(), ExtractError> {
        let mut seen = BTreeSet::new();
        for q in 0..self.g.outputs().len() {
            let o = self.output_of(q);
            let Some((v, e)) = self.g.incident_edges(o).next() else {
                return Err(self.stuck(format!("output {q} is not connected")));
            };
            if self.g.is_boundary(v) {
                self.frontier.push(None);
                continue;
            }
            if seen.insert(v) {
                self.frontier.push(Some(v));
                continue;
            }
            // second output on the same spider: o -e- w1 -H- w2 -H- v
            let w1 = new_spider(&mut self.g, v);
            let w2 = new_spider(&mut self.g, v);
            self.g.remove_edge(o, v);
            self.g.set_edge(o, w1, e);
            self.g.set_edge(w1, w2, EdgeKind::Hadamard);
            self.g.set_edge(w2, v, EdgeKind::Hadamard);
            seen.insert(w1);
            self.frontier.push(Some(w1));
        }
        Ok(())
    }

    fn input_neighbour(&self, v: V) -> Option<V> {
        self.g.neighbors(v).find(|n| self.inputs.contains(n))
    }

    /// Hadamards on output wires, then phases, then CZs.
    fn peel(&mut self) {
        for q in 0..self.frontier.len() {
            let Some(v) = self.frontier[q] else { continue };
            let o = self.output_of(q);
            if self.g.edge_kind(v, o) == Some(EdgeKind::Hadamard) {
                self.gates.push(Gate::h(q));
                self.g.set_edge(v, o, EdgeKind::Simple);
            }
            let p = self.g.phase(v);
            if !p.is_zero() {
                self.gates.push(Gate::zphase(q, p));
                self.g.set_phase(v, Phase::zero());
            }
        }
        let index: BTreeMap<V, usize> = self
            .frontier
            .iter()
            .enumerate()
            .filter_map(|(q, v)| v.map(|v| (v, q)))
            .collect();
        for (&v, &q) in &index {
            let fs: Vec<(V, EdgeKind)> = self
                .g
                .incident_edges(v)
                .filter(|(w, _)| index.get(w).is_some_and(|&r| r > q))
                .collect();
            for (w, k) in fs {
                debug_assert_eq!(k, EdgeKind::Hadamard);
                self.gates.push(Gate::cz(q, index[&w]));
                self.g.remove_edge(v, w);
            }
        }
    }

    /// A frontier spider touching an input is finished once that and its
    /// output are its only edges; otherwise a fresh spider is put between it
    /// and the input so that it can move on.
    fn detach_inputs(&mut self) {
        for q in 0..self.frontier.len() {
            let Some(v) = self.frontier[q] else { continue };
            let Some(b) = self.input_neighbour(v) else { continue };
            if self.g.degree(v) == 2 {
                continue;
            }
            let e = self.g.edge_kind(v, b).expect("edge");
            let n = new_spider(&mut self.g, v);
            self.g.remove_edge(v, b);
            self.g.set_edge(b, n, e.toggle());
            self.g.set_edge(n, v, EdgeKind::Hadamard);
        }
    }

    /// Frontier entries still to be advanced, in qubit order.
    fn active(&self) -> Vec<(usize, V)> {
        self.frontier
            .iter()
            .enumerate()
            .filter_map(|(q, v)| v.map(|v| (q, v)))
            .filter(|&(_, v)| self.input_neighbour(v).is_none())
            .collect()
    }

    fn unextracted_neighbours(&self, active: &[(usize, V)]) -> Vec<V> {
        let fset: BTreeSet<V> = self.frontier.iter().flatten().copied().collect();
        let mut n = BTreeSet::new();
        for &(_, v) in active {
            n.extend(
                self.g
                    .neighbors(v)
                    .filter(|w| !self.g.is_boundary(*w) && !fset.contains(w)),
            );
        }
        n.into_iter().collect()
    }

    /// Pivots a phase-gadget hub in `nbrs` with an adjacent frontier spider.
    /// Returns whether one was found.
    fn absorb_gadget(&mut self, active: &[(usize, V)], nbrs: &[V]) -> bool {
        for &w in nbrs {
            if !self.g.phase(w).is_pauli() || self.g.neighbors(w).any(|x| self.g.is_boundary(x)) {
                continue;
            }
            let has_leaf = self
                .g
                .neighbors(w)
                .any(|l| self.g.degree(l) == 1 && !self.g.is_boundary(l));
            if !has_leaf {
                continue;
            }
            let Some(&(q, v)) = active.iter().find(|&&(_, v)| self.g.connected(v, w)) else {
                continue;
            };
            let o = self.output_of(q);
            let n = new_spider(&mut self.g, v);
            let mut batch = RewriteBatch::default();
            batch
                .edge_table
                .push(crate::graph::EdgeTableEntry::new(o, n, EdgeKind::Hadamard));
            pivot_into(&mut self.g, w, v, &[n], &[o], &mut batch);
            batch.apply(&mut self.g);
            self.frontier[q] = Some(n);
            return true;
        }
        false
    }

    /// Row-reduces the biadjacency matrix, replaying each row operation on
    /// the graph as a CNOT, then advances rows with a single neighbour.
    fn eliminate(&mut self, active: &[(usize, V)], nbrs: &[V]) -> Result<(), ExtractError> {
        let col: BTreeMap<V, usize> = nbrs.iter().enumerate().map(|(j, &w)| (w, j)).collect();
        let rows = |g: &Diagram| -> Mat2 {
            let mut m = Mat2::zeros(active.len(), nbrs.len());
            for (i, &(_, v)) in active.iter().enumerate() {
                for w in g.neighbors(v) {
                    if let Some(&j) = col.get(&w) {
                        m.set(i, j, 1);
                    }
                }
            }
            m
        };
        let mut m = rows(&self.g);
        let ready = (0..active.len()).any(|i| m.row_weight(i) == 1);
        if !ready {
            let ops = m.gauss().ops;
            for (src, tgt) in ops {
                let (qs, vs) = active[src];
                let (qt, vt) = active[tgt];
                let targets: Vec<V> = self.g.neighbors(vs).filter(|w| col.contains_key(w)).collect();
                for w in targets {
                    if self.g.connected(vt, w) {
                        self.g.remove_edge(vt, w);
                    } else {
                        self.g.set_edge(vt, w, EdgeKind::Hadamard);
                    }
                }
                self.gates.push(Gate::cnot(qt, qs));
            }
            m = rows(&self.g);
        }
        let mut advanced = false;
        for (i, &(q, v)) in active.iter().enumerate() {
            if m.row_weight(i) != 1 {
                continue;
            }
            let j = (0..nbrs.len()).find(|&j| m.get(i, j) == 1).expect("weight one");
            let w = nbrs[j];
            let o = self.output_of(q);
            self.gates.push(Gate::h(q));
            self.g.remove_vertex(v);
            self.g.set_edge(w, o, EdgeKind::Simple);
            self.frontier[q] = Some(w);
            advanced = true;
        }
        if advanced {
            Ok(())
        } else {
            Err(self.stuck("no frontier spider has a single unextracted neighbour"))
        }
    }

    /// Input-side Hadamards and the wire permutation, as gates that come
    /// first in the circuit.
    fn finish(&self) -> Result<Vec<Gate>, ExtractError> {
        let n = self.frontier.len();
        let input_index: BTreeMap<V, usize> = self.g.inputs().iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let mut source = vec![0; n];
        let mut hads = Vec::new();
        for (q, src) in source.iter_mut().enumerate() {
            let end = self.frontier[q].unwrap_or_else(|| self.output_of(q));
            let b = self
                .g
                .neighbors(end)
                .find(|x| input_index.contains_key(x))
                .ok_or_else(|| self.stuck(format!("qubit {q} does not reach an input")))?;
            *src = input_index[&b];
            if self.g.edge_kind(end, b) == Some(EdgeKind::Hadamard) {
                hads.push(Gate::h(q));
            }
        }
        let mut cur: Vec<usize> = (0..n).collect();
        let mut gates = Vec::new();
        for q in 0..n {
            if cur[q] != source[q] {
                let k = (q + 1..n)
                    .find(|&k| cur[k] == source[q])
                    .ok_or_else(|| self.stuck("outputs do not map to distinct inputs"))?;
                gates.extend([Gate::cnot(q, k), Gate::cnot(k, q), Gate::cnot(q, k)]);
                cur.swap(q, k);
            }
        }
        gates.extend(hads);
        Ok(gates)
    }
}

/// Extracts a circuit from a diagram with as many inputs as outputs. The
/// diagram is copied, brought into graph-like form, and consumed.
pub fn streaming_extract(d: &Diagram) -> Result<Circuit, ExtractError> {
    let (ni, no) = (d.inputs().len(), d.outputs().len());
    if ni != no {
        return Err(ExtractError::Shape {
            inputs: ni,
            outputs: no,
        });
    }
    let mut g = d.clone();
    g.tracker = None;
    to_gh(&mut g);
    spider_simp(&mut g).expect("fusion terminates");
    let mut ex = Extractor {
        inputs: g.inputs().iter().copied().collect(),
        g,
        frontier: Vec::with_capacity(no),
        gates: Vec::new(),
    };
    ex.init_frontier()?;
    let limit = 4 * ex.g.num_vertices() + 16;
    let mut rounds = 0;
    loop {
        ex.peel();
        ex.detach_inputs();
        let active = ex.active();
        let nbrs = ex.unextracted_neighbours(&active);
        if nbrs.is_empty() {
            break;
        }
        rounds += 1;
        if rounds > limit {
            return Err(ex.stuck("no progress"));
        }
        if ex.absorb_gadget(&active, &nbrs) {
            continue;
        }
        ex.eliminate(&active, &nbrs)?;
    }
    let mut gates = ex.finish()?;
    gates.extend(ex.gates.iter().rev());
    Ok(Circuit::from_gates(no, gates).expect("qubits in range"))
}
