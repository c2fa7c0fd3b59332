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

//! Gate-list circuits and their translation into ZX-diagrams.

use crate::graph::{Diagram, EdgeKind, VertexData, VertexKind, V};
use crate::phase::Phase;
use num_rational::Rational64;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CircuitError {
    #[error("gate {gate} uses qubit {qubit} but the circuit has {qubits} qubits")]
    QubitOutOfRange { gate: String, qubit: usize, qubits: usize },
    #[error("gate {0} uses the same qubit twice")]
    RepeatedQubit(String),
    #[error("qubit count mismatch: {0} vs {1}")]
    QubitMismatch(usize, usize),
    #[error("gate {0} is not in the basic gate set; run to_basic_gates first")]
    NotBasic(String),
}

/// A gate. Named single-qubit gates (T, S, Z, X, ...) are phase gates with
/// a fixed angle; see the constructors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate {
    Cnot { control: usize, target: usize },
    Cz { a: usize, b: usize },
    H(usize),
    ZPhase { qubit: usize, phase: Phase },
    XPhase { qubit: usize, phase: Phase },
    Toffoli { c1: usize, c2: usize, target: usize },
    Ccz { a: usize, b: usize, c: usize },
    Swap { a: usize, b: usize },
}

impl Gate {
    pub fn cnot(control: usize, target: usize) -> Gate {
        Gate::Cnot { control, target }
    }
    pub fn cz(a: usize, b: usize) -> Gate {
        Gate::Cz { a, b }
    }
    pub fn h(q: usize) -> Gate {
        Gate::H(q)
    }
    pub fn zphase(qubit: usize, phase: Phase) -> Gate {
        Gate::ZPhase { qubit, phase }
    }
    pub fn xphase(qubit: usize, phase: Phase) -> Gate {
        Gate::XPhase { qubit, phase }
    }
    pub fn t(q: usize) -> Gate {
        Gate::zphase(q, Phase::new(1, 4))
    }
    pub fn tdg(q: usize) -> Gate {
        Gate::zphase(q, Phase::new(-1, 4))
    }
    pub fn s(q: usize) -> Gate {
        Gate::zphase(q, Phase::new(1, 2))
    }
    pub fn sdg(q: usize) -> Gate {
        Gate::zphase(q, Phase::new(-1, 2))
    }
    pub fn z(q: usize) -> Gate {
        Gate::zphase(q, Phase::pi())
    }
    /// Pauli X, also known as NOT.
    pub fn x(q: usize) -> Gate {
        Gate::xphase(q, Phase::pi())
    }
    pub fn toffoli(c1: usize, c2: usize, target: usize) -> Gate {
        Gate::Toffoli { c1, c2, target }
    }
    pub fn ccz(a: usize, b: usize, c: usize) -> Gate {
        Gate::Ccz { a, b, c }
    }
    pub fn swap(a: usize, b: usize) -> Gate {
        Gate::Swap { a, b }
    }

    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::Cnot { control, target } => vec![control, target],
            Gate::Cz { a, b } | Gate::Swap { a, b } => vec![a, b],
            Gate::H(q) | Gate::ZPhase { qubit: q, .. } | Gate::XPhase { qubit: q, .. } => vec![q],
            Gate::Toffoli { c1, c2, target } => vec![c1, c2, target],
            Gate::Ccz { a, b, c } => vec![a, b, c],
        }
    }

    pub fn adjoint(&self) -> Gate {
        match *self {
            Gate::ZPhase { qubit, phase } => Gate::ZPhase { qubit, phase: -phase },
            Gate::XPhase { qubit, phase } => Gate::XPhase { qubit, phase: -phase },
            g => g,
        }
    }

    /// The phase of a phase gate.
    pub fn phase(&self) -> Option<Phase> {
        match *self {
            Gate::ZPhase { phase, .. } | Gate::XPhase { phase, .. } => Some(phase),
            _ => None,
        }
    }

    pub fn is_basic(&self) -> bool {
        matches!(
            self,
            Gate::Cnot { .. } | Gate::Cz { .. } | Gate::H(_) | Gate::ZPhase { .. } | Gate::XPhase { .. }
        )
    }

    /// Same gate acting on relabelled qubits.
    pub fn map_qubits(&self, f: impl Fn(usize) -> usize) -> Gate {
        match *self {
            Gate::Cnot { control, target } => Gate::cnot(f(control), f(target)),
            Gate::Cz { a, b } => Gate::cz(f(a), f(b)),
            Gate::H(q) => Gate::H(f(q)),
            Gate::ZPhase { qubit, phase } => Gate::zphase(f(qubit), phase),
            Gate::XPhase { qubit, phase } => Gate::xphase(f(qubit), phase),
            Gate::Toffoli { c1, c2, target } => Gate::toffoli(f(c1), f(c2), f(target)),
            Gate::Ccz { a, b, c } => Gate::ccz(f(a), f(b), f(c)),
            Gate::Swap { a, b } => Gate::swap(f(a), f(b)),
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gate::Cnot { control, target } => write!(f, "CNOT({control}, {target})"),
            Gate::Cz { a, b } => write!(f, "CZ({a}, {b})"),
            Gate::H(q) => write!(f, "H({q})"),
            Gate::ZPhase { qubit, phase } => {
                let name = match (phase.numer(), phase.denom()) {
                    (1, 4) => "T".to_string(),
                    (7, 4) => "Tdg".to_string(),
                    (1, 2) => "S".to_string(),
                    (3, 2) => "Sdg".to_string(),
                    (1, 1) => "Z".to_string(),
                    _ => format!("ZPhase[{phase}]"),
                };
                write!(f, "{name}({qubit})")
            }
            Gate::XPhase { qubit, phase } if phase == Phase::pi() => write!(f, "X({qubit})"),
            Gate::XPhase { qubit, phase } => write!(f, "XPhase[{phase}]({qubit})"),
            Gate::Toffoli { c1, c2, target } => write!(f, "Toffoli({c1}, {c2}, {target})"),
            Gate::Ccz { a, b, c } => write!(f, "CCZ({a}, {b}, {c})"),
            Gate::Swap { a, b } => write!(f, "SWAP({a}, {b})"),
        }
    }
}

/// Gate counts reported by [`Circuit::stats`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CircuitStats {
    pub qubits: usize,
    pub gates: usize,
    /// Phase gates with an odd multiple of π/4, counted after Toffoli, CCZ
    /// and SWAP are decomposed.
    pub t_count: usize,
    pub two_qubit: usize,
    pub hadamard: usize,
}

impl fmt::Display for CircuitStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} qubits, {} gates, T-count {}, 2-qubit {}, H {}",
            self.qubits, self.gates, self.t_count, self.two_qubit, self.hadamard
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Circuit {
    pub qubits: usize,
    pub gates: Vec<Gate>,
    pub name: String,
    /// Source names of the qubits, when loaded from a file.
    pub qubit_labels: Vec<String>,
}

impl Circuit {
    pub fn new(qubits: usize) -> Circuit {
        Circuit {
            qubits,
            ..Circuit::default()
        }
    }

    pub fn from_gates(qubits: usize, gates: Vec<Gate>) -> Result<Circuit, CircuitError> {
        let mut c = Circuit::new(qubits);
        for g in gates {
            c.add_gate(g)?;
        }
        Ok(c)
    }

    pub fn add_gate(&mut self, gate: Gate) -> Result<(), CircuitError> {
        let qs = gate.qubits();
        for (i, &q) in qs.iter().enumerate() {
            if q >= self.qubits {
                return Err(CircuitError::QubitOutOfRange {
                    gate: gate.to_string(),
                    qubit: q,
                    qubits: self.qubits,
                });
            }
            if qs[..i].contains(&q) {
                return Err(CircuitError::RepeatedQubit(gate.to_string()));
            }
        }
        self.gates.push(gate);
        Ok(())
    }

    /// Appends the gates of `other`.
    pub fn add_circuit(&mut self, other: &Circuit) -> Result<(), CircuitError> {
        if other.qubits != self.qubits {
            return Err(CircuitError::QubitMismatch(self.qubits, other.qubits));
        }
        self.gates.extend_from_slice(&other.gates);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn adjoint(&self) -> Circuit {
        Circuit {
            gates: self.gates.iter().rev().map(Gate::adjoint).collect(),
            ..self.clone()
        }
    }

    /// Rewrites into {CNOT, CZ, H, ZPhase, XPhase}. Toffoli uses the
    /// standard 7-T decomposition; CCZ is the same without the target
    /// Hadamards; SWAP is three CNOTs.
    pub fn to_basic_gates(&self) -> Circuit {
        let mut gates = Vec::with_capacity(self.gates.len());
        for g in &self.gates {
            match *g {
                Gate::Toffoli { c1, c2, target } => {
                    gates.push(Gate::h(target));
                    ccz_body(&mut gates, c1, c2, target);
                    gates.push(Gate::h(target));
                }
                Gate::Ccz { a, b, c } => ccz_body(&mut gates, a, b, c),
                Gate::Swap { a, b } => {
                    gates.extend([Gate::cnot(a, b), Gate::cnot(b, a), Gate::cnot(a, b)]);
                }
                g => gates.push(g),
            }
        }
        Circuit { gates, ..self.clone() }
    }

    pub fn stats(&self) -> CircuitStats {
        let t_count = self
            .to_basic_gates()
            .gates
            .iter()
            .filter(|g| g.phase().is_some_and(Phase::is_t_like))
            .count();
        CircuitStats {
            qubits: self.qubits,
            gates: self.gates.len(),
            t_count,
            two_qubit: self.gates.iter().filter(|g| g.qubits().len() == 2).count(),
            hadamard: self.gates.iter().filter(|g| matches!(g, Gate::H(_))).count(),
        }
    }

    /// Translates a basic-gate circuit into a ZX-diagram with one input and
    /// one output per qubit.
    pub fn to_graph(&self) -> Result<Diagram, CircuitError> {
        self.build_graph(false).map(|(d, _)| d)
    }

    /// As [`to_graph`](Self::to_graph); with `track` set, every
    /// non-Clifford phase gate gets a tracked phase variable. Also returns
    /// the spider created for each gate, if any.
    pub(crate) fn build_graph(&self, track: bool) -> Result<(Diagram, Vec<Option<V>>), CircuitError> {
        let mut d = Diagram::new();
        if track {
            d.tracker = Some(Default::default());
        }
        let n = self.qubits;
        let at = |r: i64, q: usize| (Rational64::from_integer(r), Rational64::from_integer(q as i64));
        let mut last: Vec<V> = Vec::with_capacity(n);
        let mut pending = vec![EdgeKind::Simple; n];
        let mut rows = vec![1i64; n];
        for q in 0..n {
            last.push(d.add_node(VertexKind::Boundary, 0, q as i64));
        }
        d.set_inputs(last.clone());

        let spider = |d: &mut Diagram,
                      last: &mut Vec<V>,
                      pending: &mut Vec<EdgeKind>,
                      kind: VertexKind,
                      phase: Phase,
                      q: usize,
                      row: i64| {
            let (row, qubit) = at(row, q);
            let v = d.add_vertex_unchecked(VertexData {
                kind,
                phase,
                row,
                qubit,
            });
            d.set_edge(last[q], v, pending[q]);
            last[q] = v;
            pending[q] = EdgeKind::Simple;
            v
        };

        let mut made = Vec::with_capacity(self.gates.len());
        for g in &self.gates {
            let qs = g.qubits();
            let r = qs.iter().map(|&q| rows[q]).max().unwrap_or(1);
            let mut created = None;
            match *g {
                Gate::H(q) => pending[q] = pending[q].toggle(),
                Gate::ZPhase { qubit, phase } | Gate::XPhase { qubit, phase } => {
                    let kind = if matches!(g, Gate::ZPhase { .. }) {
                        VertexKind::ZSpider
                    } else {
                        VertexKind::XSpider
                    };
                    let v = spider(&mut d, &mut last, &mut pending, kind, phase, qubit, r);
                    if !phase.is_clifford() {
                        if let Some(t) = d.tracker.as_mut() {
                            t.new_var(v);
                        }
                    }
                    created = Some(v);
                }
                Gate::Cnot { control, target } => {
                    let c = spider(
                        &mut d,
                        &mut last,
                        &mut pending,
                        VertexKind::ZSpider,
                        Phase::zero(),
                        control,
                        r,
                    );
                    let t = spider(
                        &mut d,
                        &mut last,
                        &mut pending,
                        VertexKind::XSpider,
                        Phase::zero(),
                        target,
                        r,
                    );
                    d.set_edge(c, t, EdgeKind::Simple);
                }
                Gate::Cz { a, b } => {
                    let u = spider(
                        &mut d,
                        &mut last,
                        &mut pending,
                        VertexKind::ZSpider,
                        Phase::zero(),
                        a,
                        r,
                    );
                    let v = spider(
                        &mut d,
                        &mut last,
                        &mut pending,
                        VertexKind::ZSpider,
                        Phase::zero(),
                        b,
                        r,
                    );
                    d.set_edge(u, v, EdgeKind::Hadamard);
                }
                _ => return Err(CircuitError::NotBasic(g.to_string())),
            }
            if !matches!(g, Gate::H(_)) {
                for &q in &qs {
                    rows[q] = r + 1;
                }
            }
            made.push(created);
        }
        let out_row = rows.iter().copied().max().unwrap_or(1);
        let mut outputs = Vec::with_capacity(n);
        for q in 0..n {
            let o = d.add_node(VertexKind::Boundary, out_row, q as i64);
            d.set_edge(last[q], o, pending[q]);
            outputs.push(o);
        }
        d.set_outputs(outputs);
        Ok((d, made))
    }

    /// Peephole pass: cancels adjacent self-inverse pairs and merges
    /// adjacent phase gates of the same colour on the same qubit.
    pub fn basic_optimize(&self) -> Circuit {
        let mut out: Vec<Option<Gate>> = Vec::with_capacity(self.gates.len());
        // per qubit, indices into `out` of the live gates touching it
        let mut stacks: Vec<Vec<usize>> = vec![Vec::new(); self.qubits];

        for &g in &self.gates {
            if g.phase().is_some_and(Phase::is_zero) {
                continue;
            }
            let qs = g.qubits();
            let prev = stacks[qs[0]].last().copied();
            let adjacent = prev.filter(|&j| {
                qs.iter().all(|&q| stacks[q].last() == Some(&j))
                    && out[j].is_some_and(|h| sorted(h.qubits()) == sorted(qs.clone()))
            });
            if let Some(j) = adjacent {
                let h = out[j].expect("live");
                match combine(h, g) {
                    Combined::Cancel => {
                        out[j] = None;
                        for &q in &qs {
                            stacks[q].pop();
                        }
                        continue;
                    }
                    Combined::Merge(m) => {
                        out[j] = Some(m);
                        continue;
                    }
                    Combined::None => {}
                }
            }
            let idx = out.len();
            out.push(Some(g));
            for &q in &qs {
                stacks[q].push(idx);
            }
        }
        Circuit {
            gates: out.into_iter().flatten().collect(),
            ..self.clone()
        }
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

enum Combined {
    Cancel,
    Merge(Gate),
    None,
}

fn combine(first: Gate, second: Gate) -> Combined {
    match (first, second) {
        (Gate::H(_), Gate::H(_)) => Combined::Cancel,
        (Gate::Cnot { control: a, target: b }, Gate::Cnot { control: c, target: d }) if a == c && b == d => {
            Combined::Cancel
        }
        (Gate::Cz { .. }, Gate::Cz { .. }) | (Gate::Swap { .. }, Gate::Swap { .. }) => Combined::Cancel,
        (Gate::Ccz { .. }, Gate::Ccz { .. }) => Combined::Cancel,
        (Gate::Toffoli { target: a, .. }, Gate::Toffoli { target: b, .. }) if a == b => Combined::Cancel,
        (Gate::ZPhase { qubit, phase: p }, Gate::ZPhase { phase: r, .. }) => merged(Gate::zphase(qubit, p + r)),
        (Gate::XPhase { qubit, phase: p }, Gate::XPhase { phase: r, .. }) => merged(Gate::xphase(qubit, p + r)),
        _ => Combined::None,
    }
}

fn merged(g: Gate) -> Combined {
    if g.phase().is_some_and(Phase::is_zero) {
        Combined::Cancel
    } else {
        Combined::Merge(g)
    }
}

fn ccz_body(gates: &mut Vec<Gate>, a: usize, b: usize, c: usize) {
    gates.extend([
        Gate::cnot(b, c),
        Gate::tdg(c),
        Gate::cnot(a, c),
        Gate::t(c),
        Gate::cnot(b, c),
        Gate::tdg(c),
        Gate::cnot(a, c),
        Gate::t(b),
        Gate::t(c),
        Gate::cnot(a, b),
        Gate::t(a),
        Gate::tdg(b),
        Gate::cnot(a, b),
    ]);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::circuit_unitary;
    use crate::tensor::{compare_tensors, ToTensor};

    fn c(n: usize, gates: Vec<Gate>) -> Circuit {
        Circuit::from_gates(n, gates).unwrap()
    }

    #[test]
    fn rejects_bad_qubits() {
        let mut k = Circuit::new(2);
        assert!(matches!(
            k.add_gate(Gate::h(2)),
            Err(CircuitError::QubitOutOfRange { .. })
        ));
        assert!(matches!(
            k.add_gate(Gate::cnot(1, 1)),
            Err(CircuitError::RepeatedQubit(_))
        ));
    }

    #[test]
    fn decompositions_match_simulation() {
        for g in [
            Gate::toffoli(0, 1, 2),
            Gate::toffoli(2, 0, 1),
            Gate::ccz(1, 2, 0),
            Gate::swap(0, 2),
        ] {
            let k = c(3, vec![g]);
            let b = k.to_basic_gates();
            assert!(b.gates.iter().all(Gate::is_basic));
            assert!(compare_tensors(&circuit_unitary(&k), &circuit_unitary(&b)), "{g}");
        }
        assert_eq!(c(3, vec![Gate::toffoli(0, 1, 2)]).to_basic_gates().len(), 15);
        assert_eq!(c(3, vec![Gate::ccz(0, 1, 2)]).stats().t_count, 7);
    }

    #[test]
    fn graph_matches_simulation() {
        let k = c(
            3,
            vec![
                Gate::h(0),
                Gate::h(0),
                Gate::h(1),
                Gate::cnot(1, 0),
                Gate::t(2),
                Gate::cz(2, 0),
                Gate::xphase(1, Phase::new(3, 4)),
                Gate::h(2),
                Gate::cnot(0, 2),
                Gate::s(1),
            ],
        );
        let d = k.to_graph().unwrap();
        d.check_invariants().unwrap();
        assert!(compare_tensors(&d.to_tensor().unwrap(), &circuit_unitary(&k)));
    }

    #[test]
    fn basic_optimize_cancels_and_merges() {
        let k = c(
            2,
            vec![
                Gate::h(0),
                Gate::h(0),
                Gate::t(1),
                Gate::t(1),
                Gate::cnot(0, 1),
                Gate::cnot(0, 1),
                Gate::cnot(1, 0),
            ],
        );
        let o = k.basic_optimize();
        assert_eq!(o.gates, vec![Gate::s(1), Gate::cnot(1, 0)]);
        let k = c(2, vec![Gate::cnot(0, 1), Gate::cnot(1, 0)]);
        assert_eq!(k.basic_optimize().len(), 2);
    }
}
