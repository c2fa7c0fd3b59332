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

//! Phase teleportation: run [`full_reduce`](super::full_reduce) only to learn
//! which phases combine, then apply those combinations to the circuit.

use super::{full_reduce, SimplifyError};
use crate::circuit::{Circuit, Gate};
use crate::phase::Phase;
use std::collections::BTreeMap;

/// Moves the non-Clifford phases of `c` together wherever the diagram
/// rewrites would fuse them. The gate skeleton is kept; merged phase gates
/// become 0 and are dropped. Non-basic gates are decomposed first.
pub fn teleport_reduce(c: &Circuit) -> Result<Circuit, SimplifyError> {
    let c = c.to_basic_gates();
    let (mut d, made) = c.build_graph(true)?;
    full_reduce(&mut d)?;
    let groups = d.tracker.as_mut().expect("tracking enabled").groups();

    // variable ids were handed out in gate order
    let mut var_gate = Vec::new();
    for (i, g) in c.gates.iter().enumerate() {
        if made[i].is_some() && g.phase().is_some_and(|p| !p.is_clifford()) {
            var_gate.push(i);
        }
    }
    debug_assert_eq!(var_gate.len(), groups.len());

    // per group: representative variable and the summed phase relative to it
    let mut sums: BTreeMap<usize, (usize, Phase)> = BTreeMap::new();
    let mut rep_sign = BTreeMap::new();
    for (x, &(root, sign)) in groups.iter().enumerate() {
        rep_sign.entry(root).or_insert((x, sign));
    }
    for (x, &(root, sign)) in groups.iter().enumerate() {
        let (rep, rs) = rep_sign[&root];
        let p = c.gates[var_gate[x]].phase().expect("phase gate");
        let contrib = if sign == rs { p } else { -p };
        let e = sums.entry(root).or_insert((rep, Phase::zero()));
        e.1 += contrib;
    }

    let mut new_phase: BTreeMap<usize, Phase> = BTreeMap::new();
    for (x, &(root, _)) in groups.iter().enumerate() {
        let (rep, total) = sums[&root];
        new_phase.insert(var_gate[x], if x == rep { total } else { Phase::zero() });
    }

    let mut out = Circuit {
        gates: Vec::with_capacity(c.gates.len()),
        ..c.clone()
    };
    for (i, g) in c.gates.iter().enumerate() {
        let g = match (new_phase.get(&i), *g) {
            (None, g) => g,
            (Some(p), _) if p.is_zero() => continue,
            (Some(&p), Gate::ZPhase { qubit, .. }) => Gate::zphase(qubit, p),
            (Some(&p), Gate::XPhase { qubit, .. }) => Gate::xphase(qubit, p),
            (Some(_), g) => g,
        };
        out.gates.push(g);
    }
    Ok(out)
}
