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

//! Quantum circuit optimisation and verification with the ZX-calculus.
//!
//! Circuits ([`Circuit`]) are translated into ZX-diagrams ([`Diagram`]),
//! simplified by the rewrite strategies in [`simplify`], and turned back
//! into circuits by [`extract`]. [`tensor`] evaluates diagrams to dense
//! tensors for brute-force checking and [`verify`] proves equality of
//! circuits by rewriting.
//!
//! ```
//! use zxopt::simplify::full_reduce;
//! use zxopt::{io, streaming_extract, verify_equality, Equality};
//!
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! let c = io::parse("OPENQASM 2.0;\nqreg q[2];\nt q[0];\ncx q[0], q[1];\ntdg q[0];\n")?;
//! let mut d = c.to_basic_gates().to_graph()?;
//! full_reduce(&mut d)?;
//! let out = streaming_extract(&d)?;
//! assert_eq!(verify_equality(&c, &out)?, Equality::Equal);
//! print!("{}", io::emit_qasm(&out));
//! # Ok(())
//! # }
//! ```

pub mod circuit;
pub mod extract;
pub mod generate;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod phase;
pub mod scalar;
pub mod sim;
pub mod simplify;
pub mod tensor;
pub mod verify;

pub use circuit::{Circuit, CircuitStats, Gate};
pub use extract::{streaming_extract, ExtractError};
pub use graph::{Diagram, DiagramError, EdgeKind, EdgeTableEntry, VertexKind, V};
pub use phase::Phase;
pub use tensor::{compare_tensors, Tensor, Tensor32, Tensor64, TensorError, ToTensor};
pub use verify::{verify_equality, Equality};
