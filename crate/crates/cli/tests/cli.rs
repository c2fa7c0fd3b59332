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

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use tempfile::TempDir;

fn zxopt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zxopt")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const ADDER: &str = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[4];\nh q[3];\nccx q[0], q[1], q[3];\ncx q[0], q[1];\nccx q[1], q[2], q[3];\ncx q[1], q[2];\nt q[2];\ntdg q[0];\nh q[3];\n";
const CLIFFORD: &str =
    "OPENQASM 2.0;\nqreg q[3];\nh q[0];\ncx q[0], q[1];\ns q[1];\ncz q[1], q[2];\nh q[2];\nh q[2];\n";

#[test]
fn opt_cancels_t_pair() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "tt.qasm", "OPENQASM 2.0;\nqreg q[1];\nt q[0];\ntdg q[0];\n");
    let o = zxopt(&["opt", s(&input)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\n");
    assert!(stderr(&o).contains("T-count 2"));
    assert!(stderr(&o).contains("T-count 0"));
}

#[test]
fn teleport_keeps_clifford_skeleton() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "c.qasm", CLIFFORD);
    let o = zxopt(&["opt", "--strategy", "teleport", s(&input)]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let body: Vec<&str> = text
        .lines()
        .filter(|l| l.ends_with("];") && !l.starts_with("qreg"))
        .map(|l| l.trim())
        .collect();
    let want: Vec<&str> = CLIFFORD.lines().skip(2).collect();
    assert_eq!(body, want);
}

#[test]
fn malformed_input_exits_2_with_line() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "bad.qasm", "OPENQASM 2.0;\nqreg q[1];\nfoo q[0];\n");
    let out = dir.path().join("out.qasm");
    let o = zxopt(&["opt", s(&input), "--output", s(&out)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    assert!(!out.exists());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1, "no stray files");
}

#[test]
fn every_strategy_output_reparses_and_verifies() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "adder.qasm", ADDER);
    for strategy in ["teleport", "clifford", "full"] {
        let out = dir.path().join(format!("{strategy}.qasm"));
        let o = zxopt(&["opt", "--strategy", strategy, s(&input), "-o", s(&out)]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        let v = zxopt(&["verify", s(&input), s(&out)]);
        assert_eq!(code(&v), 0, "{strategy}: {}", stdout(&v));
        assert_eq!(stdout(&v), "equal\n");
        let t = zxopt(&["verify", "--tensor", s(&input), s(&out)]);
        assert_eq!(stdout(&t), "equal\n");
    }
}

#[test]
fn verify_outcomes() {
    let dir = TempDir::new().unwrap();
    let cnot = write(&dir, "cnot.qasm", "OPENQASM 2.0;\nqreg q[2];\ncx q[0], q[1];\n");
    let cz = write(&dir, "cz.qasm", "OPENQASM 2.0;\nqreg q[2];\ncz q[0], q[1];\n");
    let one = write(&dir, "one.qasm", "OPENQASM 2.0;\nqreg q[1];\nh q[0];\n");
    let same = zxopt(&["verify", s(&cnot), s(&cnot)]);
    assert_eq!((code(&same), stdout(&same).as_str()), (0, "equal\n"));
    let diff = zxopt(&["verify", s(&cnot), s(&cz)]);
    assert_eq!((code(&diff), stdout(&diff).as_str()), (1, "inconclusive\n"));
    let diff = zxopt(&["verify", "--tensor", s(&cnot), s(&cz)]);
    assert_eq!((code(&diff), stdout(&diff).as_str()), (1, "not equal\n"));
    assert_eq!(code(&zxopt(&["verify", s(&cnot), s(&one)])), 2);
}

#[test]
fn several_inputs_in_parallel() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.qasm", ADDER);
    let b = write(&dir, "b.qc", ".v x y\nBEGIN\nT x\nT* x\ncnot x y\nEND\n");
    let out = dir.path().join("out");
    let o = zxopt(&["opt", s(&a), s(&b), "-o", s(&out)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(out.join("a.qasm").exists());
    let bq = std::fs::read_to_string(out.join("b.qasm")).unwrap();
    assert!(bq.ends_with("qreg q[2];\ncx q[0], q[1];\n"), "{bq}");
    let st = zxopt(&["stats", s(&a), s(&b)]);
    assert_eq!(code(&st), 0);
    assert_eq!(stdout(&st).lines().count(), 2);
    assert!(stdout(&st).lines().next().unwrap().contains("a.qasm"));
}

#[test]
fn format_override() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "circuit.txt", ".v a\nBEGIN\nH a\nEND\n");
    assert_eq!(code(&zxopt(&["stats", s(&p)])), 0);
    assert_eq!(code(&zxopt(&["stats", "--format", "qasm", s(&p)])), 2);
    let g = write(&dir, "junk.txt", "hello\n");
    let o = zxopt(&["stats", s(&g)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("format"));
}

#[test]
fn tikz_is_byte_stable() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "adder.qasm", ADDER);
    let a = zxopt(&["tikz", s(&input)]);
    let b = zxopt(&["tikz", s(&input)]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("\\begin{tikzpicture}"));
    let full = zxopt(&["tikz", "--strategy", "full", s(&input)]);
    assert_eq!(code(&full), 0);
    assert!(stdout(&full).contains("hadamard edge"));
}

#[test]
fn bench_is_deterministic() {
    let args = ["bench", "--qubits", "9", "--gates", "1000", "--seed", "1"];
    let a = zxopt(&args);
    let b = zxopt(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let rows: Vec<Vec<usize>> = stdout(&a)
        .lines()
        .skip(1)
        .map(|l| l.split('\t').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.windows(2).all(|w| w[0][1] < w[1][1]));
    assert_eq!(rows[4][1], 1000);
    // wall times on stderr
    assert_eq!(stderr(&a).lines().count(), 6);
}

#[test]
fn bench_handles_15_qubits_2500_gates() {
    let o = zxopt(&["bench", "--qubits", "15", "--gates", "2500"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().last().unwrap().starts_with("15\t2500\t"));
}
