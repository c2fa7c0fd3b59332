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

use num_complex::Complex64;
use std::path::{Path, PathBuf};
use zxopt::io::{self, emit_qasm, emit_tikz, load, LoadError, SourceFormat};
use zxopt::sim::circuit_unitary;
use zxopt::simplify::full_reduce;
use zxopt::*;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn is_unitary(t: &Tensor64) -> bool {
    let p = t.then(&t.adjoint());
    let dim = 1 << t.num_outputs();
    (0..dim).all(|r| {
        (0..dim).all(|c| {
            let want = if r == c {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            };
            (p.get(r, c) - want).norm() < 1e-9
        })
    })
}

#[test]
fn all_formats_load_the_same_circuit() {
    let qasm = load(&data("adder.qasm")).unwrap();
    let qc = load(&data("adder.qc")).unwrap();
    let quipper = load(&data("adder.quipper")).unwrap();
    assert_eq!(qasm.name, "adder");
    assert_eq!(qasm.qubits, 4);
    assert_eq!(qc.qubit_labels, vec!["a", "b", "c", "d"]);
    let u = circuit_unitary(&qasm);
    assert!(is_unitary(&circuit_unitary(&qasm.to_basic_gates())));
    assert!(compare_tensors(&circuit_unitary(&qc), &u));
    assert!(compare_tensors(&circuit_unitary(&quipper), &u));
}

#[test]
fn tfc_is_reversible_part() {
    let tfc = load(&data("adder.tfc")).unwrap();
    assert_eq!(tfc.gates.len(), 4);
    assert!(is_unitary(&circuit_unitary(&tfc.to_basic_gates())));
    assert_eq!(tfc.stats().t_count, 14);
}

#[test]
fn detection_ignores_extension_when_content_is_clear() {
    for name in ["adder.qasm", "adder.qc", "adder.quipper", "adder.tfc"] {
        let text = std::fs::read_to_string(data(name)).unwrap();
        let by_ext = load(&data(name)).unwrap();
        let by_text = io::parse(&text).unwrap();
        assert_eq!(by_ext.gates, by_text.gates, "{name}");
        assert_eq!(SourceFormat::sniff(&text), SourceFormat::from_extension(&data(name)));
    }
}

#[test]
fn garbage_is_a_detection_error() {
    assert!(matches!(io::parse("\n\n"), Err(LoadError::UnknownFormat)));
    assert!(matches!(io::parse("lorem ipsum"), Err(LoadError::UnknownFormat)));
}

#[test]
fn optimised_circuit_reparses() {
    let c = load(&data("adder.qasm")).unwrap();
    let mut d = c.to_basic_gates().to_graph().unwrap();
    full_reduce(&mut d).unwrap();
    let out = streaming_extract(&d).unwrap();
    let back = io::parse(&emit_qasm(&out)).unwrap();
    assert_eq!(back.gates, out.gates);
    assert!(compare_tensors(&circuit_unitary(&back), &circuit_unitary(&c)));
    let tikz = emit_tikz(&d);
    assert_eq!(tikz.matches("\\node").count(), d.num_vertices());
    assert_eq!(tikz.matches("\\draw").count(), d.num_edges());
}
