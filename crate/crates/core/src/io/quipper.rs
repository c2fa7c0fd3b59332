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

//! Quipper ASCII subset: H, not/X, Z, T, S (optionally inverted with `*`),
//! swap, and `exp(-i%Z)` rotations. Anything else is an error.

use super::ParseError;
use crate::circuit::{Circuit, Gate};
use crate::phase::Phase;
use std::collections::HashMap;

struct Wires(HashMap<i64, usize>);

impl Wires {
    fn get(&self, w: i64) -> Result<usize, String> {
        self.0
            .get(&w)
            .copied()
            .ok_or_else(|| format!("wire {w} is not an input"))
    }
}

fn wire_list(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|w| !w.is_empty())
        .map(|w| w.parse().map_err(|_| format!("bad wire {w:?}")))
        .collect()
}

/// `with controls=[+0,+1]`; negative controls are not supported.
fn controls(s: &str) -> Result<Vec<i64>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let inner = s
        .strip_prefix("with controls=[")
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| format!("unexpected {s:?}"))?;
    inner
        .split(',')
        .map(str::trim)
        .map(|w| match w.strip_prefix('+') {
            Some(n) => n.parse().map_err(|_| format!("bad control {w:?}")),
            None if w.starts_with('-') => Err("negative controls are not supported".into()),
            None => w.parse().map_err(|_| format!("bad control {w:?}")),
        })
        .collect()
}

fn gate_line(line: &str, wires: &Wires) -> Result<Gate, String> {
    let (kind, rest) = line.split_once('[').ok_or("expected QGate[...] or QRot[...]")?;
    let close = rest.find(']').ok_or("unclosed '['")?;
    let label = &rest[..close];
    let mut rest = &rest[close + 1..];
    let inverse = match rest.strip_prefix('*') {
        Some(r) => {
            rest = r;
            true
        }
        None => false,
    };
    let rest = rest.strip_prefix('(').ok_or("expected '(' before the targets")?;
    let close = rest.find(')').ok_or("unclosed '('")?;
    let targets = wire_list(&rest[..close])?;
    let tail = rest[close + 1..].trim();
    let tail = tail.strip_suffix("with nocontrol").unwrap_or(tail);
    let ctrl = controls(tail)?;
    let t: Vec<usize> = targets.iter().map(|&w| wires.get(w)).collect::<Result<_, _>>()?;
    let cs: Vec<usize> = ctrl.iter().map(|&w| wires.get(w)).collect::<Result<_, _>>()?;
    match kind {
        "QGate" => {
            let name = label.trim_matches('"');
            let single = |g: fn(usize) -> Gate| match (t.as_slice(), cs.len()) {
                (&[q], 0) => Ok(g(q)),
                _ => Err(format!("{name} must act on one wire with no controls")),
            };
            match (name, inverse) {
                ("H", _) => single(Gate::h),
                ("T", false) => single(Gate::t),
                ("T", true) => single(Gate::tdg),
                ("S", false) => single(Gate::s),
                ("S", true) => single(Gate::sdg),
                ("not" | "X", _) => match (t.as_slice(), cs.as_slice()) {
                    (&[q], &[]) => Ok(Gate::x(q)),
                    (&[q], &[a]) => Ok(Gate::cnot(a, q)),
                    (&[q], &[a, b]) => Ok(Gate::toffoli(a, b, q)),
                    _ => Err(format!("{name} supports one target and at most two controls")),
                },
                ("Z", _) => match (t.as_slice(), cs.as_slice()) {
                    (&[q], &[]) => Ok(Gate::z(q)),
                    (&[q], &[a]) => Ok(Gate::cz(a, q)),
                    (&[q], &[a, b]) => Ok(Gate::ccz(a, b, q)),
                    _ => Err("Z supports one target and at most two controls".into()),
                },
                ("swap", _) => match (t.as_slice(), cs.len()) {
                    (&[a, b], 0) => Ok(Gate::swap(a, b)),
                    _ => Err("swap takes two targets and no controls".into()),
                },
                _ => Err(format!("unsupported gate {name:?}")),
            }
        }
        "QRot" => {
            // exp(-i θ Z) = diag(e^{-iθ}, e^{iθ}), a Z phase of 2θ
            let (op, theta) = label.split_once(',').ok_or("QRot needs an angle")?;
            if op.trim().trim_matches('"') != "exp(-i%Z)" {
                return Err(format!("unsupported rotation {op}"));
            }
            let theta: f64 = theta.trim().parse().map_err(|_| format!("bad angle {theta:?}"))?;
            let theta = if inverse { -theta } else { theta };
            let phase = Phase::approximate(2.0 * theta, 1024, 1e-9)
                .ok_or_else(|| format!("angle {theta} is not a rational multiple of pi"))?;
            match (t.as_slice(), cs.len()) {
                (&[q], 0) => Ok(Gate::zphase(q, phase)),
                _ => Err("rotations must act on one wire with no controls".into()),
            }
        }
        _ => Err(format!("unsupported primitive {kind:?}")),
    }
}

/// `0:Qbit, 1:Qbit`.
fn header(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|w| !w.is_empty())
        .map(|w| {
            let (n, ty) = w.split_once(':').ok_or_else(|| format!("bad wire {w:?}"))?;
            if ty.trim() != "Qbit" {
                return Err(format!("only Qbit wires are supported, got {ty:?}"));
            }
            n.trim().parse().map_err(|_| format!("bad wire {n:?}"))
        })
        .collect()
}

pub fn parse_quipper(src: &str) -> Result<Circuit, ParseError> {
    let mut c: Option<(Circuit, Wires)> = None;
    for (ln, raw) in src.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let col = raw.len() - raw.trim_start().len() + 1;
        let err = |msg: String| ParseError::new(ln + 1, col, msg);
        if let Some(rest) = line.strip_prefix("Inputs:") {
            if c.is_some() {
                return Err(err("repeated Inputs header".into()));
            }
            let ws = header(rest).map_err(err)?;
            let mut map = HashMap::new();
            for (i, &w) in ws.iter().enumerate() {
                if map.insert(w, i).is_some() {
                    return Err(err(format!("wire {w} listed twice")));
                }
            }
            let mut circ = Circuit::new(ws.len());
            circ.qubit_labels = ws.iter().map(i64::to_string).collect();
            c = Some((circ, Wires(map)));
            continue;
        }
        let Some((circ, wires)) = c.as_mut() else {
            return Err(err("expected an Inputs: header".into()));
        };
        if let Some(rest) = line.strip_prefix("Outputs:") {
            let ws = header(rest).map_err(err)?;
            if ws.len() != circ.qubits || ws.iter().any(|w| !wires.0.contains_key(w)) {
                return Err(err("outputs differ from inputs".into()));
            }
            continue;
        }
        if line.starts_with("Comment[") {
            continue;
        }
        let g = gate_line(line, wires).map_err(err)?;
        circ.add_gate(g).map_err(|e| ParseError::circuit(ln + 1, col, e))?;
    }
    c.map(|(circ, _)| circ)
        .ok_or_else(|| ParseError::new(1, 1, "missing Inputs: header"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vocabulary() {
        let src = "Inputs: 0:Qbit, 2:Qbit, 5:Qbit\n\
                   QGate[\"H\"](0)\n\
                   QGate[\"not\"](5) with controls=[+0,+2]\n\
                   QGate[\"not\"](2) with controls=[+0]\n\
                   QGate[\"T\"]*(2)\n\
                   QGate[\"S\"](5) with nocontrol\n\
                   Comment[\"hi\"](0)\n\
                   QGate[\"Z\"](0) with controls=[+5]\n\
                   QRot[\"exp(-i%Z)\",0.39269908169872414](2)\n\
                   Outputs: 0:Qbit, 2:Qbit, 5:Qbit\n";
        let c = parse_quipper(src).unwrap();
        assert_eq!(
            c.gates,
            vec![
                Gate::h(0),
                Gate::toffoli(0, 1, 2),
                Gate::cnot(0, 1),
                Gate::tdg(1),
                Gate::s(2),
                Gate::cz(2, 0),
                Gate::t(1),
            ]
        );
    }

    #[test]
    fn unsupported_is_an_error() {
        let e = parse_quipper("Inputs: 0:Qbit\nQInit0(1)\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(parse_quipper("Inputs: 0:Qbit\nQGate[\"W\"](0)\n").is_err());
        assert!(parse_quipper("Inputs: 0:Qbit, 1:Qbit\nQGate[\"not\"](0) with controls=[-1]\n").is_err());
        assert!(parse_quipper("Inputs: 0:Cbit\n").is_err());
        assert!(parse_quipper("QGate[\"H\"](0)\n").is_err());
        assert!(parse_quipper("Inputs: 0:Qbit\nQRot[\"exp(-i%Z)\",0.3](0)\n").is_err());
    }
}
