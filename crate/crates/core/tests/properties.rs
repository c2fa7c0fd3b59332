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

use proptest::prelude::*;
use zxopt::io::{emit_qasm, parse_qasm};
use zxopt::linalg::Mat2;
use zxopt::sim::circuit_unitary;
use zxopt::simplify::{clifford_simp, full_reduce, fuse_simp, teleport_reduce};
use zxopt::*;

fn phase() -> impl Strategy<Value = Phase> {
    (-64i64..64, 1i64..17).prop_map(|(n, d)| Phase::new(n, d))
}

/// Gate on `n` qubits; three-qubit gates fall back to H when `n < 3`.
fn gate(n: usize) -> impl Strategy<Value = Gate> {
    (0usize..11, 0..n, 0..n, 0..n, phase()).prop_map(move |(k, a, b, c, p)| {
        let two = a != b;
        let three = two && c != a && c != b;
        match k {
            0 => Gate::h(a),
            1 => Gate::t(a),
            2 => Gate::s(a),
            3 => Gate::zphase(a, p),
            4 => Gate::xphase(a, p),
            5 if two => Gate::cnot(a, b),
            6 if two => Gate::cz(a, b),
            7 if two => Gate::swap(a, b),
            8 if three => Gate::toffoli(a, b, c),
            9 if three => Gate::ccz(a, b, c),
            10 => Gate::tdg(a),
            _ => Gate::h(a),
        }
    })
}

fn circuit(max_qubits: usize, max_gates: usize) -> impl Strategy<Value = Circuit> {
    (1..=max_qubits).prop_flat_map(move |n| {
        prop::collection::vec(gate(n), 0..max_gates).prop_map(move |gs| Circuit::from_gates(n, gs).unwrap())
    })
}

/// Clifford+T phases only, so that every rewrite can fire.
fn clifford_t_circuit(max_qubits: usize, max_gates: usize) -> impl Strategy<Value = Circuit> {
    circuit(max_qubits, max_gates).prop_map(|mut c| {
        for g in c.gates.iter_mut() {
            match g {
                Gate::ZPhase { phase, .. } | Gate::XPhase { phase, .. } => {
                    *phase = Phase::new(phase.numer() % 8, 4);
                }
                _ => {}
            }
        }
        c
    })
}

#[derive(Debug, Clone)]
enum Mutation {
    AddSpider(bool, Phase),
    AddEdges(Vec<(usize, usize, bool)>),
    Remove(usize),
}

fn mutation() -> impl Strategy<Value = Mutation> {
    prop_oneof![
        (any::<bool>(), phase()).prop_map(|(x, p)| Mutation::AddSpider(x, p)),
        prop::collection::vec((0usize..16, 0usize..16, any::<bool>()), 1..8).prop_map(Mutation::AddEdges),
        (0usize..16).prop_map(Mutation::Remove),
    ]
}

fn spider_kind(x: bool) -> VertexKind {
    if x {
        VertexKind::XSpider
    } else {
        VertexKind::ZSpider
    }
}

fn edge_kind(h: bool) -> EdgeKind {
    if h {
        EdgeKind::Hadamard
    } else {
        EdgeKind::Simple
    }
}

/// Diagram with `k` spiders, each with its own input wire.
fn spiders_with_inputs(kinds: &[(bool, Phase)]) -> (Diagram, Vec<V>) {
    let mut d = Diagram::new();
    let mut spiders = Vec::new();
    let mut inputs = Vec::new();
    for (i, &(x, p)) in kinds.iter().enumerate() {
        let b = d.add_node(VertexKind::Boundary, 0, i as i64);
        let s = d.add_vertex(spider_kind(x), p, 1.into(), (i as i64).into()).unwrap();
        d.add_edge(b, s, EdgeKind::Simple).unwrap();
        inputs.push(b);
        spiders.push(s);
    }
    d.set_inputs(inputs);
    (d, spiders)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn phase_arithmetic(a in phase(), b in phase()) {
        prop_assert_eq!(a + b - b, a);
        prop_assert_eq!(-(-a), a);
        prop_assert!(a.numer() >= 0 && a.numer() < 2 * a.denom());
        prop_assert_eq!(a + b, b + a);
    }

    #[test]
    fn mutations_keep_graph_simple(ms in prop::collection::vec(mutation(), 1..40)) {
        let mut d = Diagram::new();
        let mut live: Vec<V> = Vec::new();
        for m in ms {
            match m {
                Mutation::AddSpider(x, p) => {
                    live.push(d.add_vertex(spider_kind(x), p, 0.into(), 0.into()).unwrap());
                }
                Mutation::AddEdges(es) if !live.is_empty() => {
                    let table: Vec<EdgeTableEntry> = es
                        .iter()
                        .map(|&(u, v, h)| EdgeTableEntry::new(live[u % live.len()], live[v % live.len()], edge_kind(h)))
                        .collect();
                    d.add_edge_table(&table).unwrap();
                }
                Mutation::Remove(i) if !live.is_empty() => {
                    let v = live.remove(i % live.len());
                    d.remove_vertex(v);
                }
                _ => {}
            }
            prop_assert_eq!(d.check_invariants(), Ok(()));
        }
    }

    #[test]
    fn edge_table_preserves_semantics(
        kinds in prop::collection::vec((any::<bool>(), phase()), 2..5),
        edges in prop::collection::vec((0usize..5, 0usize..5, any::<bool>()), 1..7),
    ) {
        // reference: every requested edge goes through its own fresh
        // phase-free spiders, so no parallel edge or loop ever arises
        let (mut resolved, spiders) = spiders_with_inputs(&kinds);
        let (mut expanded, _) = spiders_with_inputs(&kinds);
        let mut table = Vec::new();
        for &(a, b, h) in &edges {
            let (u, v) = (spiders[a % spiders.len()], spiders[b % spiders.len()]);
            table.push(EdgeTableEntry::new(u, v, edge_kind(h)));
            let w1 = expanded.add_vertex(expanded.kind(u), Phase::zero(), 2.into(), 0.into()).unwrap();
            let w2 = expanded.add_vertex(expanded.kind(v), Phase::zero(), 2.into(), 0.into()).unwrap();
            expanded.add_edge(u, w1, EdgeKind::Simple).unwrap();
            expanded.add_edge(w1, w2, edge_kind(h)).unwrap();
            expanded.add_edge(w2, v, EdgeKind::Simple).unwrap();
        }
        resolved.add_edge_table(&table).unwrap();
        prop_assert_eq!(resolved.check_invariants(), Ok(()));
        let t1 = resolved.to_tensor().unwrap();
        let t2 = expanded.to_tensor().unwrap();
        prop_assert!(compare_tensors(&t1, &t2));
    }

    #[test]
    fn qasm_round_trip(c in circuit(6, 40)) {
        let back = parse_qasm(&emit_qasm(&c)).unwrap();
        prop_assert_eq!(back.qubits, c.qubits);
        prop_assert_eq!(back.gates, c.gates);
    }

    #[test]
    fn graph_translation_matches_simulation(c in circuit(4, 25)) {
        let d = c.to_basic_gates().to_graph().unwrap();
        prop_assert!(compare_tensors(&d.to_tensor().unwrap(), &circuit_unitary(&c)));
    }

    #[test]
    fn gauss_log_replays(rows in prop::collection::vec(prop::collection::vec(0u8..2, 5), 1..7)) {
        let m = Mat2::new(rows);
        let mut r = m.clone();
        let g = r.gauss();
        let mut replay = m.clone();
        for &(s, t) in &g.ops {
            replay.row_add(s, t);
        }
        prop_assert_eq!(&replay, &r);
        prop_assert_eq!(g.len_pivots, m.rank());
        for (i, &c) in g.pivot_cols.iter().enumerate() {
            for row in 0..r.num_rows() {
                prop_assert_eq!(r.get(row, c), u8::from(row == i));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn simplifiers_and_extraction_are_sound(c in clifford_t_circuit(4, 30)) {
        let want = circuit_unitary(&c);
        let g = c.to_basic_gates().to_graph().unwrap();
        for simp in [fuse_simp, clifford_simp, full_reduce] {
            let mut d = g.clone();
            simp(&mut d).unwrap();
            prop_assert_eq!(d.check_invariants(), Ok(()));
            prop_assert!(compare_tensors(&d.to_tensor().unwrap(), &want));
        }
        let mut d = g.clone();
        full_reduce(&mut d).unwrap();
        let out = streaming_extract(&d).unwrap();
        prop_assert!(compare_tensors(&circuit_unitary(&out), &want));
        prop_assert_eq!(verify_equality(&c, &out).unwrap(), Equality::Equal);
    }

    #[test]
    fn arbitrary_phases_survive_full_reduce(c in circuit(3, 20)) {
        let mut d = c.to_basic_gates().to_graph().unwrap();
        full_reduce(&mut d).unwrap();
        prop_assert!(compare_tensors(&d.to_tensor().unwrap(), &circuit_unitary(&c)));
    }

    #[test]
    fn teleport_reduce_is_sound_and_never_adds_t(c in clifford_t_circuit(4, 40)) {
        let out = teleport_reduce(&c).unwrap();
        prop_assert!(compare_tensors(&circuit_unitary(&out), &circuit_unitary(&c)));
        prop_assert!(out.stats().t_count <= c.stats().t_count);
    }

    #[test]
    fn clifford_fixpoint_is_stable(c in circuit(4, 40).prop_map(|c| {
        let gates = c.gates.into_iter().filter(|g| g.phase().is_none_or(|p| p.is_clifford()) && !matches!(g, Gate::Toffoli { .. } | Gate::Ccz { .. })).collect();
        Circuit::from_gates(c.qubits, gates).unwrap()
    })) {
        let mut d = c.to_basic_gates().to_graph().unwrap();
        clifford_simp(&mut d).unwrap();
        let before = d.clone();
        prop_assert_eq!(clifford_simp(&mut d).unwrap(), 0);
        prop_assert_eq!(d, before);
    }
}
