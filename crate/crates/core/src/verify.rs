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

//! Equality checking of circuits by rewriting.

use crate::circuit::{Circuit, CircuitError};
use crate::simplify::{full_reduce, SimplifyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equality {
    /// `c1† · c2` reduced to the identity diagram.
    Equal,
    /// Reduction stopped short of the identity. The circuits may still be
    /// equal.
    Inconclusive,
}

/// Builds `c1† ; c2`, runs [`full_reduce`] and checks for a bare identity.
pub fn verify_equality(c1: &Circuit, c2: &Circuit) -> Result<Equality, SimplifyError> {
    if c1.qubits != c2.qubits {
        return Err(CircuitError::QubitMismatch(c1.qubits, c2.qubits).into());
    }
    let mut c = c1.adjoint();
    c.add_circuit(c2)?;
    let mut d = c.to_basic_gates().to_graph()?;
    full_reduce(&mut d)?;
    Ok(if d.is_identity() {
        Equality::Equal
    } else {
        Equality::Inconclusive
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{random_circuit, CLIFFORD_T_TOFFOLI};
    use crate::sim::circuit_unitary;
    use crate::tensor::compare_tensors;
    use crate::Gate;

    #[test]
    fn circuit_equals_itself_and_its_optimisation() {
        for seed in 0..20 {
            let c = random_circuit(4, 40, CLIFFORD_T_TOFFOLI, seed);
            assert_eq!(verify_equality(&c, &c).unwrap(), Equality::Equal);
            assert_eq!(verify_equality(&c, &c.basic_optimize()).unwrap(), Equality::Equal);
        }
    }

    #[test]
    fn cnot_versus_cz_is_inconclusive() {
        let a = Circuit::from_gates(2, vec![Gate::cnot(0, 1)]).unwrap();
        let b = Circuit::from_gates(2, vec![Gate::cz(0, 1)]).unwrap();
        assert_eq!(verify_equality(&a, &b).unwrap(), Equality::Inconclusive);
        assert!(!compare_tensors(&circuit_unitary(&a), &circuit_unitary(&b)));
    }

    #[test]
    fn qubit_mismatch() {
        assert!(verify_equality(&Circuit::new(1), &Circuit::new(2)).is_err());
    }
}
