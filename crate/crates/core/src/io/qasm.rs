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

//! OpenQASM 2.0 subset.

use super::ParseError;
use crate::circuit::{Circuit, Gate};
use crate::phase::Phase;
use num_rational::Rational64;
use std::fmt::Write;

/// A statement with the position of its first character.
struct Stmt<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

/// Splits on `;`, dropping `//` comments.
fn statements(src: &str) -> Vec<Stmt<'_>> {
    let mut out = Vec::new();
    for (ln, raw) in src.lines().enumerate() {
        let line = raw.find("//").map_or(raw, |i| &raw[..i]);
        let mut start = 0;
        for piece in line.split_inclusive(';') {
            let trimmed = piece.trim_start();
            let col = start + piece.len() - trimmed.len() + 1;
            let body = trimmed.trim_end().trim_end_matches(';').trim_end();
            if !body.is_empty() {
                out.push(Stmt {
                    text: body,
                    line: ln + 1,
                    col,
                });
            }
            start += piece.len();
        }
    }
    out
}

/// Value of a parameter expression: `coeff * pi^pi_pow`, or a float when
/// the exact form is lost.
#[derive(Clone, Copy, Debug)]
enum Val {
    Exact(Rational64, i32),
    Float(f64),
}

impl Val {
    fn to_f64(self) -> f64 {
        match self {
            Val::Exact(r, p) => *r.numer() as f64 / *r.denom() as f64 * std::f64::consts::PI.powi(p),
            Val::Float(x) => x,
        }
    }
}

struct Expr<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Expr<'_> {
    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Val, String> {
        let mut v = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let w = self.term()?;
            let w = if c == b'-' { neg(w) } else { w };
            v = match (v, w) {
                (Val::Exact(a, p), Val::Exact(b, q)) if p == q || a == 0.into() || b == 0.into() => {
                    let pw = if a == 0.into() { q } else { p };
                    Val::Exact(a + b, pw)
                }
                (a, b) => Val::Float(a.to_f64() + b.to_f64()),
            };
        }
        Ok(v)
    }

    fn term(&mut self) -> Result<Val, String> {
        let mut v = self.factor()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let w = self.factor()?;
            v = match (c, v, w) {
                (b'*', Val::Exact(a, p), Val::Exact(b, q)) => Val::Exact(a * b, p + q),
                (b'/', _, Val::Exact(b, _)) if b == 0.into() => return Err("division by zero".into()),
                (b'/', Val::Exact(a, p), Val::Exact(b, q)) => Val::Exact(a / b, p - q),
                (b'*', a, b) => Val::Float(a.to_f64() * b.to_f64()),
                (_, a, b) => Val::Float(a.to_f64() / b.to_f64()),
            };
        }
        Ok(v)
    }

    fn factor(&mut self) -> Result<Val, String> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(neg(self.factor()?))
            }
            Some(b'+') => {
                self.pos += 1;
                self.factor()
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err("expected ')'".into());
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                match &self.s[start..self.pos] {
                    b"pi" => Ok(Val::Exact(1.into(), 1)),
                    w => Err(format!(
                        "unknown identifier {:?} in expression",
                        String::from_utf8_lossy(w)
                    )),
                }
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => {
                let start = self.pos;
                while self.pos < self.s.len()
                    && (self.s[self.pos].is_ascii_digit() || matches!(self.s[self.pos], b'.' | b'e' | b'E'))
                {
                    // keep a sign directly after an exponent marker
                    if matches!(self.s[self.pos], b'e' | b'E') && matches!(self.s.get(self.pos + 1), Some(b'+' | b'-'))
                    {
                        self.pos += 1;
                    }
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                number(text).ok_or_else(|| format!("bad number {text:?}"))
            }
            _ => Err("expected a number, pi or '('".into()),
        }
    }
}

fn neg(v: Val) -> Val {
    match v {
        Val::Exact(a, p) => Val::Exact(-a, p),
        Val::Float(x) => Val::Float(-x),
    }
}

/// Decimal literals without an exponent are kept exact when they fit.
fn number(text: &str) -> Option<Val> {
    if !text.contains(['e', 'E']) {
        let (int, frac) = text.split_once('.').unwrap_or((text, ""));
        if frac.len() <= 15 && int.len() + frac.len() <= 17 {
            let digits = format!("{int}{frac}");
            let n: i64 = if digits.is_empty() {
                return None;
            } else {
                digits.parse().ok()?
            };
            return Some(Val::Exact(Rational64::new(n, 10i64.pow(frac.len() as u32)), 0));
        }
    }
    text.parse().ok().map(Val::Float)
}

/// Angle in radians to a phase. Exact `r*pi` forms map directly; anything
/// else must be within 1e-9 of a multiple of pi with denominator ≤ 1024.
fn angle(text: &str) -> Result<Phase, String> {
    let mut e = Expr {
        s: text.as_bytes(),
        pos: 0,
    };
    let v = e.expr()?;
    if e.peek().is_some() {
        return Err(format!("trailing input in expression {text:?}"));
    }
    match v {
        Val::Exact(r, 1) => Ok(Phase::from_rational(r)),
        Val::Exact(r, _) if r == 0.into() => Ok(Phase::zero()),
        v => Phase::approximate(v.to_f64(), 1024, 1e-9)
            .ok_or_else(|| format!("angle {text:?} is not a rational multiple of pi")),
    }
}

pub fn parse_qasm(src: &str) -> Result<Circuit, ParseError> {
    let mut reg: Option<(String, usize)> = None;
    let mut c = Circuit::new(0);
    for st in statements(src) {
        let err = |msg: String| ParseError::new(st.line, st.col, msg);
        let (head, rest) = split_head(st.text);
        match head {
            "OPENQASM" => {
                if rest.trim() != "2.0" {
                    return Err(err(format!("unsupported QASM version {:?}", rest.trim())));
                }
                continue;
            }
            "include" | "creg" | "barrier" => continue,
            "measure" | "reset" | "if" => return Err(err(format!("{head} is not supported"))),
            "qreg" => {
                if reg.is_some() {
                    return Err(err("only one qreg is supported".into()));
                }
                let (name, size) = reg_ref(rest.trim()).ok_or_else(|| err(format!("bad qreg {rest:?}")))?;
                c = Circuit::new(size);
                c.qubit_labels = (0..size).map(|i| format!("{name}[{i}]")).collect();
                reg = Some((name.to_string(), size));
                continue;
            }
            _ => {}
        }
        let (name, params) = match head.split_once('(') {
            Some((n, p)) => {
                let p = p
                    .strip_suffix(')')
                    .ok_or_else(|| err(format!("unclosed parameters in {head:?}")))?;
                (n, Some(p))
            }
            None => (head, None),
        };
        let (rname, _) = reg.as_ref().ok_or_else(|| err("gate before qreg declaration".into()))?;
        let args: Vec<usize> = rest
            .split(',')
            .map(|a| {
                let a = a.trim();
                let (n, i) = reg_ref(a).ok_or_else(|| err(format!("expected a qubit like {rname}[0], got {a:?}")))?;
                if n != rname {
                    return Err(err(format!("unknown register {n:?}")));
                }
                Ok(i)
            })
            .collect::<Result<_, _>>()?;
        let arity = |k: usize| {
            if args.len() == k {
                Ok(())
            } else {
                Err(err(format!("{name} takes {k} qubit(s), got {}", args.len())))
            }
        };
        let param = || -> Result<Phase, ParseError> {
            let p = params.ok_or_else(|| err(format!("{name} needs an angle")))?;
            angle(p).map_err(err)
        };
        if params.is_some() && !matches!(name, "rz" | "rx") {
            return Err(err(format!("{name} takes no parameters")));
        }
        let g = match name {
            "h" => arity(1).map(|_| Gate::h(args[0]))?,
            "x" => arity(1).map(|_| Gate::x(args[0]))?,
            "z" => arity(1).map(|_| Gate::z(args[0]))?,
            "s" => arity(1).map(|_| Gate::s(args[0]))?,
            "sdg" => arity(1).map(|_| Gate::sdg(args[0]))?,
            "t" => arity(1).map(|_| Gate::t(args[0]))?,
            "tdg" => arity(1).map(|_| Gate::tdg(args[0]))?,
            "rz" => {
                arity(1)?;
                Gate::zphase(args[0], param()?)
            }
            "rx" => {
                arity(1)?;
                Gate::xphase(args[0], param()?)
            }
            "cx" | "CX" => arity(2).map(|_| Gate::cnot(args[0], args[1]))?,
            "cz" => arity(2).map(|_| Gate::cz(args[0], args[1]))?,
            "swap" => arity(2).map(|_| Gate::swap(args[0], args[1]))?,
            "ccx" => arity(3).map(|_| Gate::toffoli(args[0], args[1], args[2]))?,
            "ccz" => arity(3).map(|_| Gate::ccz(args[0], args[1], args[2]))?,
            _ => return Err(err(format!("unsupported gate {name:?}"))),
        };
        c.add_gate(g).map_err(|e| ParseError::circuit(st.line, st.col, e))?;
    }
    if reg.is_none() {
        return Err(ParseError::new(1, 1, "no qreg declaration"));
    }
    Ok(c)
}

/// Splits `name(args) rest` at the first whitespace outside parentheses.
fn split_head(s: &str) -> (&str, &str) {
    let mut depth = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c.is_whitespace() && depth == 0 => return (&s[..i], &s[i..]),
            _ => {}
        }
    }
    (s, "")
}

/// `name[index]`.
fn reg_ref(s: &str) -> Option<(&str, usize)> {
    let (name, rest) = s.split_once('[')?;
    let idx = rest.strip_suffix(']')?.trim().parse().ok()?;
    let name = name.trim();
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return None;
    }
    Some((name, idx))
}

/// Writes QASM 2.0. Named phase gates are special-cased; other phases are
/// printed as exact fractions of pi.
pub fn emit_qasm(c: &Circuit) -> String {
    let mut s = String::new();
    s.push_str("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    let _ = writeln!(s, "qreg q[{}];", c.qubits);
    for g in &c.gates {
        let _ = match *g {
            Gate::H(q) => writeln!(s, "h q[{q}];"),
            Gate::Cnot { control, target } => writeln!(s, "cx q[{control}], q[{target}];"),
            Gate::Cz { a, b } => writeln!(s, "cz q[{a}], q[{b}];"),
            Gate::Swap { a, b } => writeln!(s, "swap q[{a}], q[{b}];"),
            Gate::Toffoli { c1, c2, target } => writeln!(s, "ccx q[{c1}], q[{c2}], q[{target}];"),
            Gate::Ccz { a, b, c } => writeln!(s, "ccz q[{a}], q[{b}], q[{c}];"),
            Gate::ZPhase { qubit, phase } => match (phase.numer(), phase.denom()) {
                (1, 4) => writeln!(s, "t q[{qubit}];"),
                (7, 4) => writeln!(s, "tdg q[{qubit}];"),
                (1, 2) => writeln!(s, "s q[{qubit}];"),
                (3, 2) => writeln!(s, "sdg q[{qubit}];"),
                (1, 1) => writeln!(s, "z q[{qubit}];"),
                _ => writeln!(s, "rz({phase}) q[{qubit}];"),
            },
            Gate::XPhase { qubit, phase } if phase == Phase::pi() => writeln!(s, "x q[{qubit}];"),
            Gate::XPhase { qubit, phase } => writeln!(s, "rx({phase}) q[{qubit}];"),
        };
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{random_circuit, CLIFFORD_T_TOFFOLI};

    #[test]
    fn cnot_example() {
        let c = parse_qasm("qreg q[2]; cx q[0],q[1];").unwrap();
        assert_eq!(c.qubits, 2);
        assert_eq!(c.gates, vec![Gate::cnot(0, 1)]);
    }

    #[test]
    fn exact_angles() {
        let c = parse_qasm("OPENQASM 2.0;\nqreg q[1];\nrz(3*pi/7) q[0];\nrz(-pi/4) q[0];\nrz(pi*0.5) q[0];\nrx(2*(pi/8)+pi/8) q[0];\nrz(0.7853981633974483) q[0];\n").unwrap();
        assert_eq!(
            c.gates,
            vec![
                Gate::zphase(0, Phase::new(3, 7)),
                Gate::tdg(0),
                Gate::s(0),
                Gate::xphase(0, Phase::new(3, 8)),
                Gate::t(0),
            ]
        );
    }

    #[test]
    fn emits_named_and_fraction_gates() {
        let c = Circuit::from_gates(2, vec![Gate::t(1), Gate::zphase(0, Phase::new(3, 7)), Gate::x(0)]).unwrap();
        let text = emit_qasm(&c);
        assert!(text.starts_with("OPENQASM 2.0;\n"));
        assert!(text.contains("t q[1];\n"));
        assert!(text.contains("rz(3*pi/7) q[0];\n"));
        assert!(text.contains("x q[0];\n"));
        assert!(text.ends_with('\n'));
        assert!(!text.contains("0.4"));
    }

    #[test]
    fn round_trip() {
        for seed in 0..30 {
            let c = random_circuit(5, 50, CLIFFORD_T_TOFFOLI, seed);
            let back = parse_qasm(&emit_qasm(&c)).unwrap();
            assert_eq!(back.qubits, c.qubits);
            assert_eq!(back.gates, c.gates);
        }
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_qasm("OPENQASM 2.0;\nqreg q[2];\nh q[0]; foo q[1];\n").unwrap_err();
        assert_eq!((e.line, e.col), (3, 9));
        let e = parse_qasm("qreg q[1];\nmeasure q[0] -> c[0];\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(parse_qasm("qreg q[1];\nh q[3];").is_err());
        assert!(parse_qasm("qreg q[1];\nrz(0.3) q[0];").is_err());
        assert!(parse_qasm("qreg q[1];\nqreg r[1];").is_err());
        assert!(parse_qasm("OPENQASM 3.0;\nqreg q[1];").is_err());
    }

    #[test]
    fn ignores_include_creg_barrier_and_comments() {
        let c = parse_qasm(
            "OPENQASM 2.0;\ninclude \"qelib1.inc\"; // lib\nqreg q[2];\ncreg c[2];\nbarrier q[0],q[1];\nccz q[0], q[1], q[1];",
        );
        assert!(c.is_err(), "repeated qubit");
        let c = parse_qasm("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncreg c[2];\nbarrier q[0],q[1];\nswap q[0],q[1]; // x\n").unwrap();
        assert_eq!(c.gates, vec![Gate::swap(0, 1)]);
    }
}
