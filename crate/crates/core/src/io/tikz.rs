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

//! TikZ export. Output depends only on the diagram, so it is byte-stable.

use crate::graph::{Diagram, EdgeKind, VertexKind};
use crate::phase::Phase;
use num_rational::Rational64;
use std::fmt::Write;

const PREAMBLE: &str = "\\documentclass[tikz]{standalone}
\\tikzset{
  zdot/.style={circle, draw, fill=green!30, inner sep=1pt, minimum size=3mm},
  xdot/.style={circle, draw, fill=red!30, inner sep=1pt, minimum size=3mm},
  boundary/.style={inner sep=0pt, minimum size=0mm},
  hadamard edge/.style={blue, dashed},
}
\\begin{document}
\\begin{tikzpicture}
";

fn coord(r: Rational64) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}", *r.numer() as f64 / *r.denom() as f64)
    }
}

/// `\frac{3\pi}{4}`, `\pi`.
pub(crate) fn phase_label(p: Phase) -> String {
    let (n, d) = (p.numer(), p.denom());
    let top = if n == 1 { "\\pi".to_string() } else { format!("{n}\\pi") };
    if d == 1 {
        top
    } else {
        format!("\\frac{{{top}}}{{{d}}}")
    }
}

pub fn emit_tikz(d: &Diagram) -> String {
    let mut s = String::from(PREAMBLE);
    let mut vs: Vec<_> = d.vertices().collect();
    vs.sort_unstable();
    for v in vs {
        let style = match d.kind(v) {
            VertexKind::ZSpider => "zdot",
            VertexKind::XSpider => "xdot",
            VertexKind::Boundary => "boundary",
        };
        let p = d.phase(v);
        let label = if p.is_zero() {
            String::new()
        } else {
            format!("${}$", phase_label(p))
        };
        let _ = writeln!(
            s,
            "  \\node [{style}] ({v}) at ({}, {}) {{{label}}};",
            coord(d.row(v)),
            coord(-d.qubit(v))
        );
    }
    let mut es: Vec<_> = d.edges().map(|(u, v, k)| (u.min(v), u.max(v), k)).collect();
    es.sort_unstable_by_key(|&(u, v, _)| (u, v));
    for (u, v, k) in es {
        let _ = match k {
            EdgeKind::Simple => writeln!(s, "  \\draw ({u}) -- ({v});"),
            EdgeKind::Hadamard => writeln!(s, "  \\draw [hadamard edge] ({u}) -- ({v});"),
        };
    }
    s.push_str("\\end{tikzpicture}\n\\end{document}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_diagram_is_a_skeleton() {
        let t = emit_tikz(&Diagram::new());
        assert!(!t.contains("\\node"));
        assert!(t.contains("\\begin{tikzpicture}"));
        assert!(t.ends_with("\\end{document}\n"));
    }

    #[test]
    fn single_spider_label() {
        let mut d = Diagram::new();
        d.add_vertex(VertexKind::ZSpider, Phase::new(1, 2), 1.into(), 0.into())
            .unwrap();
        let t = emit_tikz(&d);
        assert_eq!(t.matches("\\node").count(), 1);
        assert!(t.contains("{$\\frac{\\pi}{2}$}"));
        assert!(t.contains("at (1, 0)"));
    }

    #[test]
    fn hadamard_edge_style() {
        let mut d = Diagram::new();
        let a = d.add_node(VertexKind::ZSpider, 0, 0);
        let b = d.add_node(VertexKind::ZSpider, 1, 1);
        d.add_edge(a, b, EdgeKind::Hadamard).unwrap();
        let t = emit_tikz(&d);
        assert_eq!(t.matches("\\draw").count(), 1);
        assert!(t.contains("\\draw [hadamard edge] (0) -- (1);"));
        assert!(t.contains("at (1, -1)"));
        assert_eq!(t, emit_tikz(&d.clone()));
    }

    #[test]
    fn labels() {
        assert_eq!(phase_label(Phase::pi()), "\\pi");
        assert_eq!(phase_label(Phase::new(3, 4)), "\\frac{3\\pi}{4}");
        assert_eq!(phase_label(Phase::new(-1, 4)), "\\frac{7\\pi}{4}");
    }
}
