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

//! Dense unitary simulation of circuits, gate by gate.
//!
//! Independent of the diagram machinery, so it serves as the reference
//! semantics when checking translations and rewrites. Qubit 0 is the most
//! significant bit, matching the tensor axis convention.

use crate::circuit::{Circuit, Gate};
use crate::tensor::Tensor64;
use num_complex::Complex64;

/// Refuses circuits wider than this many qubits.
pub const MAX_QUBITS: usize = 12;

/// The circuit's unitary as a tensor with `n` outputs and `n` inputs.
pub fn circuit_unitary(c: &Circuit) -> Tensor64 {
    let n = c.qubits;
    assert!(n <= MAX_QUBITS, "too many qubits to simulate");
    let dim = 1usize << n;
    let mut cols: Vec<Vec<Complex64>> = (0..dim)
        .map(|j| {
            let mut v = vec![Complex64::new(0.0, 0.0); dim];
            v[j] = Complex64::new(1.0, 0.0);
            v
        })
        .collect();
    for g in &c.gates {
        for col in cols.iter_mut() {
            apply_gate(col, n, g);
        }
    }
    let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
    for (j, col) in cols.iter().enumerate() {
        for (i, &x) in col.iter().enumerate() {
            data[i * dim + j] = x;
        }
    }
    Tensor64::new(n, n, data)
}

fn bit(n: usize, q: usize) -> usize {
    1 << (n - 1 - q)
}

/// Applies one gate to a state vector.
pub fn apply_gate(state: &mut [Complex64], n: usize, g: &Gate) {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    match *g {
        Gate::H(q) => {
            let b = bit(n, q);
            for i in 0..state.len() {
                if i & b == 0 {
                    let (x, y) = (state[i], state[i | b]);
                    state[i] = (x + y) * s;
                    state[i | b] = (x - y) * s;
                }
            }
        }
        Gate::ZPhase { qubit, phase } => {
            let b = bit(n, qubit);
            let w = Complex64::from_polar(1.0, phase.to_radians());
            for (i, x) in state.iter_mut().enumerate() {
                if i & b != 0 {
                    *x *= w;
                }
            }
        }
        Gate::XPhase { qubit, phase } => {
            // H Z(a) H = e^{ia/2} Rx(a)
            let b = bit(n, qubit);
            let w = Complex64::from_polar(1.0, phase.to_radians());
            let (p, m) = (
                (Complex64::new(1.0, 0.0) + w) * 0.5,
                (Complex64::new(1.0, 0.0) - w) * 0.5,
            );
            for i in 0..state.len() {
                if i & b == 0 {
                    let (x, y) = (state[i], state[i | b]);
                    state[i] = p * x + m * y;
                    state[i | b] = m * x + p * y;
                }
            }
        }
        Gate::Cnot { control, target } => {
            let (c, t) = (bit(n, control), bit(n, target));
            for i in 0..state.len() {
                if i & c != 0 && i & t == 0 {
                    state.swap(i, i | t);
                }
            }
        }
        Gate::Cz { a, b } => {
            let m = bit(n, a) | bit(n, b);
            for (i, x) in state.iter_mut().enumerate() {
                if i & m == m {
                    *x = -*x;
                }
            }
        }
        Gate::Toffoli { c1, c2, target } => {
            let (c, t) = (bit(n, c1) | bit(n, c2), bit(n, target));
            for i in 0..state.len() {
                if i & c == c && i & t == 0 {
                    state.swap(i, i | t);
                }
            }
        }
        Gate::Ccz { a, b, c } => {
            let m = bit(n, a) | bit(n, b) | bit(n, c);
            for (i, x) in state.iter_mut().enumerate() {
                if i & m == m {
                    *x = -*x;
                }
            }
        }
        Gate::Swap { a, b } => {
            let (ba, bb) = (bit(n, a), bit(n, b));
            for i in 0..state.len() {
                if i & ba != 0 && i & bb == 0 {
                    state.swap(i, (i & !ba) | bb);
                }
            }
        }
    }
}
