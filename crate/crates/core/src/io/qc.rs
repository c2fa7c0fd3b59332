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

//! QC and TFC reversible-circuit formats.
//!
//! `.v` names the wires in order. Gate lines take space or comma separated
//! wire names; for `tof`, `tN`, `X` and `Z` the last wire is the target and
//! the number of wires (not `N`) decides the gate.

use super::ParseError;
use crate::circuit::{Circuit, Gate};
use std::collections::HashMap;

pub fn parse_qc(src: &str) -> Result<Circuit, ParseError> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut c: Option<Circuit> = None;
    let mut in_body = false;
    let mut ended = false;
    for (ln, raw) in src.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw.find('#').map_or(raw, |i| &raw[..i]);
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let col = line.len() - line.trim_start().len() + 1;
        let err = |msg: String| ParseError::new(line_no, col, msg);
        let mut words = trimmed
            .split(|ch: char| ch.is_whitespace() || ch == ',')
            .filter(|w| !w.is_empty());
        let head = words.next().unwrap();
        let args: Vec<&str> = words.collect();
        if ended {
            return Err(err("text after END".into()));
        }
        if let Some(dir) = head.strip_prefix('.') {
            if in_body {
                return Err(err(format!("directive .{dir} inside BEGIN/END")));
            }
            match dir {
                "v" => {
                    for a in &args {
                        if index.insert(a.to_string(), names.len()).is_some() {
                            return Err(err(format!("wire {a:?} declared twice")));
                        }
                        names.push(a.to_string());
                    }
                }
                // input/output/constant annotations do not change the unitary
                "i" | "o" | "c" | "ol" => {}
                _ => return Err(err(format!("unknown directive .{dir}"))),
            }
            continue;
        }
        match head {
            "BEGIN" => {
                if in_body || c.is_some() {
                    return Err(err("repeated BEGIN".into()));
                }
                if names.is_empty() {
                    return Err(err("BEGIN before .v".into()));
                }
                let mut circ = Circuit::new(names.len());
                circ.qubit_labels = names.clone();
                c = Some(circ);
                in_body = true;
                continue;
            }
            "END" => {
                if !in_body {
                    return Err(err("END without BEGIN".into()));
                }
                in_body = false;
                ended = true;
                continue;
            }
            _ => {}
        }
        if !in_body {
            return Err(err(format!("gate {head:?} outside BEGIN/END")));
        }
        let q: Vec<usize> = args
            .iter()
            .map(|a| {
                index
                    .get(*a)
                    .copied()
                    .ok_or_else(|| err(format!("undeclared wire {a:?}")))
            })
            .collect::<Result<_, _>>()?;
        let one = |g: fn(usize) -> Gate| {
            if q.len() == 1 {
                Ok(g(q[0]))
            } else {
                Err(err(format!("{head} takes one wire")))
            }
        };
        let not = || match q[..] {
            [t] => Ok(Gate::x(t)),
            [a, t] => Ok(Gate::cnot(a, t)),
            [a, b, t] => Ok(Gate::toffoli(a, b, t)),
            _ => Err(err(format!(
                "{head} with {} wires is not supported (at most 2 controls)",
                q.len()
            ))),
        };
        let g = match head {
            "H" | "h" => one(Gate::h)?,
            "T" => one(Gate::t)?,
            "T*" => one(Gate::tdg)?,
            "S" | "P" => one(Gate::s)?,
            "S*" | "P*" => one(Gate::sdg)?,
            "tof" | "X" | "not" => not()?,
            "cnot" => match q[..] {
                [a, t] => Gate::cnot(a, t),
                _ => return Err(err("cnot takes two wires".into())),
            },
            "Z" => match q[..] {
                [t] => Gate::z(t),
                [a, b] => Gate::cz(a, b),
                [a, b, t] => Gate::ccz(a, b, t),
                _ => return Err(err(format!("Z with {} wires is not supported", q.len()))),
            },
            "swap" | "f2" => match q[..] {
                [a, b] => Gate::swap(a, b),
                _ => return Err(err(format!("{head} takes two wires"))),
            },
            h if h.len() > 1 && h.starts_with('t') && h[1..].chars().all(|ch| ch.is_ascii_digit()) => not()?,
            _ => return Err(err(format!("unsupported gate {head:?}"))),
        };
        c.as_mut()
            .unwrap()
            .add_gate(g)
            .map_err(|e| ParseError::circuit(line_no, col, e))?;
    }
    if in_body {
        return Err(ParseError::new(src.lines().count().max(1), 1, "missing END"));
    }
    c.ok_or_else(|| ParseError::new(1, 1, "no BEGIN/END block"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::circuit_unitary;
    use crate::tensor::compare_tensors;

    #[test]
    fn toffoli_line_matches_hand_built_toffoli() {
        let c = parse_qc(".v a b c\n.i a b c\n.o a b c\nBEGIN\nt1 a b c\nEND\n").unwrap();
        assert_eq!(c.gates, vec![Gate::toffoli(0, 1, 2)]);
        let hand = Circuit::from_gates(3, vec![Gate::toffoli(0, 1, 2)]).unwrap();
        assert!(compare_tensors(&circuit_unitary(&c), &circuit_unitary(&hand)));
        assert!(compare_tensors(
            &circuit_unitary(&c.to_basic_gates()),
            &circuit_unitary(&hand)
        ));
        assert_eq!(c.qubit_labels, vec!["a", "b", "c"]);
    }

    #[test]
    fn tfc_commas_and_gate_forms() {
        let src = "# tfc\n.v x,y,z\n.i x,y\n.c 0\nBEGIN\nt3 x,y,z\nt2 x,y\nt1 z\nT* x\nH y\nZ x y z\ntof x y\nS* z\nswap x z\nEND\n";
        let c = parse_qc(src).unwrap();
        assert_eq!(
            c.gates,
            vec![
                Gate::toffoli(0, 1, 2),
                Gate::cnot(0, 1),
                Gate::x(2),
                Gate::tdg(0),
                Gate::h(1),
                Gate::ccz(0, 1, 2),
                Gate::cnot(0, 1),
                Gate::sdg(2),
                Gate::swap(0, 2),
            ]
        );
    }

    #[test]
    fn rejects_loudly() {
        let e = parse_qc(".v a\n.foo\nBEGIN\nEND").unwrap_err();
        assert_eq!((e.line, e.col), (2, 1));
        assert!(parse_qc(".v a\nBEGIN\n  Y a\nEND").unwrap_err().col == 3);
        assert!(parse_qc(".v a\nBEGIN\nH b\nEND").is_err());
        assert!(parse_qc(".v a b c d\nBEGIN\nt4 a b c d\nEND").is_err());
        assert!(parse_qc(".v a\nBEGIN\nH a\n").is_err());
        assert!(parse_qc(".v a b\nBEGIN\ncnot a a\nEND").is_err());
    }
}
