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

//! Seeded random circuits for tests and benchmarks.

use crate::circuit::{Circuit, Gate};
use crate::phase::Phase;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Gate families a random circuit is drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateFamily {
    Cnot,
    Cz,
    H,
    S,
    T,
    Z,
    X,
    Toffoli,
}

pub const CLIFFORD: &[GateFamily] = &[
    GateFamily::Cnot,
    GateFamily::Cz,
    GateFamily::H,
    GateFamily::S,
    GateFamily::Z,
    GateFamily::X,
];
pub const CLIFFORD_T: &[GateFamily] = &[
    GateFamily::Cnot,
    GateFamily::Cz,
    GateFamily::H,
    GateFamily::S,
    GateFamily::T,
    GateFamily::Z,
    GateFamily::X,
];
pub const CLIFFORD_T_TOFFOLI: &[GateFamily] = &[
    GateFamily::Cnot,
    GateFamily::Cz,
    GateFamily::H,
    GateFamily::S,
    GateFamily::T,
    GateFamily::Z,
    GateFamily::X,
    GateFamily::Toffoli,
];

/// `gates` gates drawn uniformly from `families`, on uniformly chosen
/// distinct qubits. S and T are drawn with a random sign. Families that
/// need more qubits than available are skipped.
pub fn random_circuit(qubits: usize, gates: usize, families: &[GateFamily], seed: u64) -> Circuit {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let usable: Vec<GateFamily> = families.iter().copied().filter(|f| arity(*f) <= qubits).collect();
    assert!(!usable.is_empty(), "no gate family fits {qubits} qubits");
    let mut c = Circuit::new(qubits);
    let all: Vec<usize> = (0..qubits).collect();
    for _ in 0..gates {
        let f = *usable.choose(&mut rng).expect("non-empty");
        let qs: Vec<usize> = all.choose_multiple(&mut rng, arity(f)).copied().collect();
        let neg = rng.gen_bool(0.5);
        let g = match f {
            GateFamily::Cnot => Gate::cnot(qs[0], qs[1]),
            GateFamily::Cz => Gate::cz(qs[0], qs[1]),
            GateFamily::H => Gate::h(qs[0]),
            GateFamily::S => Gate::zphase(qs[0], Phase::new(if neg { 3 } else { 1 }, 2)),
            GateFamily::T => Gate::zphase(qs[0], Phase::new(if neg { 7 } else { 1 }, 4)),
            GateFamily::Z => Gate::z(qs[0]),
            GateFamily::X => Gate::x(qs[0]),
            GateFamily::Toffoli => Gate::toffoli(qs[0], qs[1], qs[2]),
        };
        c.add_gate(g).expect("valid by construction");
    }
    c
}

fn arity(f: GateFamily) -> usize {
    match f {
        GateFamily::Cnot | GateFamily::Cz => 2,
        GateFamily::Toffoli => 3,
        _ => 1,
    }
}

pub fn random_clifford(qubits: usize, gates: usize, seed: u64) -> Circuit {
    random_circuit(qubits, gates, CLIFFORD, seed)
}

pub fn random_clifford_t(qubits: usize, gates: usize, seed: u64) -> Circuit {
    random_circuit(qubits, gates, CLIFFORD_T, seed)
}

/// Inserts `pairs` adjacent T·T† pairs at random positions.
pub fn inject_cancelling_t_pairs(c: &Circuit, pairs: usize, seed: u64) -> Circuit {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gates = c.gates.clone();
    for _ in 0..pairs {
        let at = rng.gen_range(0..=gates.len());
        let q = rng.gen_range(0..c.qubits);
        gates.insert(at, Gate::tdg(q));
        gates.insert(at, Gate::t(q));
    }
    Circuit { gates, ..c.clone() }
}
