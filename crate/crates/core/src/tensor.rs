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

//! Dense tensor semantics of diagrams and comparison up to a global scalar.
//!
//! Axis convention: outputs first, then inputs, each in boundary-list
//! order. Axis 0 is the most significant bit of the flat index, so a
//! diagram with `n` inputs and `m` outputs flattens to a `2^m × 2^n`
//! row-major matrix.

use crate::graph::{Diagram, EdgeKind, VertexKind, V};
use crate::scalar::Scalar;
use num_complex::Complex;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TensorError {
    #[error("diagram has {found} boundary wires, limit is {limit}")]
    TooManyBoundaries { found: usize, limit: usize },
    #[error("contraction needs {found} open legs, limit is {limit}")]
    TooWide { found: usize, limit: usize },
}

/// Size limits for brute-force contraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TensorLimits {
    pub max_boundaries: usize,
    pub max_width: usize,
}

impl Default for TensorLimits {
    fn default() -> Self {
        TensorLimits {
            max_boundaries: 20,
            max_width: 24,
        }
    }
}

/// A tensor with every axis of dimension 2.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor<T> {
    outputs: usize,
    inputs: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> Tensor<T> {
    pub fn new(outputs: usize, inputs: usize, data: Vec<Complex<T>>) -> Self {
        assert_eq!(data.len(), 1 << (outputs + inputs), "tensor data has wrong length");
        Tensor { outputs, inputs, data }
    }

    pub fn zeros(outputs: usize, inputs: usize) -> Self {
        Tensor::new(
            outputs,
            inputs,
            vec![Complex::new(T::zero(), T::zero()); 1 << (outputs + inputs)],
        )
    }

    pub fn identity(qubits: usize) -> Self {
        let mut t = Tensor::zeros(qubits, qubits);
        let dim = 1 << qubits;
        for i in 0..dim {
            t.data[i * dim + i] = Complex::new(T::one(), T::zero());
        }
        t
    }

    pub fn rank(&self) -> usize {
        self.outputs + self.inputs
    }

    pub fn num_outputs(&self) -> usize {
        self.outputs
    }

    pub fn num_inputs(&self) -> usize {
        self.inputs
    }

    pub fn data(&self) -> &[Complex<T>] {
        &self.data
    }

    /// Entry `(row, col)` of the matrix view.
    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.data[(row << self.inputs) | col]
    }

    pub fn scale(&self, z: Complex<T>) -> Self {
        Tensor::new(self.outputs, self.inputs, self.data.iter().map(|&x| x * z).collect())
    }

    /// Sequential composition: `self` first, then `next` (matrix `next · self`).
    pub fn then(&self, next: &Tensor<T>) -> Self {
        assert_eq!(self.outputs, next.inputs, "arity mismatch");
        let (rows, mid, cols) = (1 << next.outputs, 1 << self.outputs, 1 << self.inputs);
        let mut out = Tensor::zeros(next.outputs, self.inputs);
        for r in 0..rows {
            for k in 0..mid {
                let a = next.data[r * mid + k];
                if a.norm_sqr() == T::zero() {
                    continue;
                }
                for c in 0..cols {
                    out.data[r * cols + c] = out.data[r * cols + c] + a * self.data[k * cols + c];
                }
            }
        }
        out
    }

    /// Kronecker product, `self` on the more significant axes.
    pub fn kron(&self, other: &Tensor<T>) -> Self {
        let (ar, ac) = (1usize << self.outputs, 1usize << self.inputs);
        let (br, bc) = (1usize << other.outputs, 1usize << other.inputs);
        let mut out = Tensor::zeros(self.outputs + other.outputs, self.inputs + other.inputs);
        let cols = ac * bc;
        for i in 0..ar {
            for j in 0..ac {
                let a = self.data[i * ac + j];
                for k in 0..br {
                    for l in 0..bc {
                        out.data[(i * br + k) * cols + j * bc + l] = a * other.data[k * bc + l];
                    }
                }
            }
        }
        out
    }

    /// Conjugate transpose of the matrix view.
    pub fn adjoint(&self) -> Self {
        let (rows, cols) = (1usize << self.outputs, 1usize << self.inputs);
        let mut out = Tensor::zeros(self.inputs, self.outputs);
        for r in 0..rows {
            for c in 0..cols {
                out.data[c * rows + r] = self.data[r * cols + c].conj();
            }
        }
        out
    }

    fn max_abs(&self) -> T {
        self.data.iter().map(|x| x.norm()).fold(T::zero(), T::max)
    }
}

pub type Tensor64 = Tensor<f64>;
pub type Tensor32 = Tensor<f32>;

/// Relative tolerance used by [`compare_tensors`].
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// True iff `t1 = z·t2` for some non-zero `z`, within the default tolerance.
pub fn compare_tensors<T: Scalar>(t1: &Tensor<T>, t2: &Tensor<T>) -> bool {
    compare_tensors_tol(t1, t2, T::from(DEFAULT_TOLERANCE).unwrap())
}

/// `z` is read off the largest entry of `t2`; the check is then
/// `max |t1 - z·t2| <= tol · max |t1|`.
pub fn compare_tensors_tol<T: Scalar>(t1: &Tensor<T>, t2: &Tensor<T>, tol: T) -> bool {
    if t1.outputs != t2.outputs || t1.inputs != t2.inputs {
        return false;
    }
    let Some((k, _)) = t2.data.iter().enumerate().map(|(i, x)| (i, x.norm())).fold(
        None,
        |best: Option<(usize, T)>, (i, n)| match best {
            Some((_, m)) if m >= n => best,
            _ => Some((i, n)),
        },
    ) else {
        return true;
    };
    if t2.data[k].norm() == T::zero() {
        return t1.max_abs() == T::zero();
    }
    let z = t1.data[k] / t2.data[k];
    if z.norm() == T::zero() {
        return false;
    }
    let bound = tol * t1.max_abs();
    t1.data.iter().zip(&t2.data).all(|(&a, &b)| (a - b * z).norm() <= bound)
}

/// Conversion of a diagram to its linear map.
pub trait ToTensor {
    fn to_tensor_with<T: Scalar>(&self, limits: TensorLimits) -> Result<Tensor<T>, TensorError>;

    fn to_tensor(&self) -> Result<Tensor64, TensorError> {
        self.to_tensor_with(TensorLimits::default())
    }
}

/// A factor over binary variables; bit `j` of the flat index is `vars[j]`.
#[derive(Debug, Clone)]
struct Factor<T> {
    vars: Vec<usize>,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> Factor<T> {
    fn unary(var: usize, a: Complex<T>, b: Complex<T>) -> Self {
        Factor {
            vars: vec![var],
            data: vec![a, b],
        }
    }

    /// Normalised Hadamard between two distinct variables.
    fn hadamard(u: usize, v: usize) -> Self {
        let s = T::FRAC_1_SQRT_2();
        let z = Complex::new(s, T::zero());
        Factor {
            vars: vec![u, v],
            data: vec![z, z, z, -z],
        }
    }

    fn index_in(&self, pos: &[usize], assignment: usize) -> usize {
        let mut idx = 0;
        for (j, &p) in pos.iter().enumerate() {
            idx |= ((assignment >> p) & 1) << j;
        }
        idx
    }
}

/// Multiplies `factors` together and sums out `gone`, if given.
fn combine<T: Scalar>(factors: &[Factor<T>], gone: Option<usize>) -> Factor<T> {
    let mut vars: Vec<usize> = factors.iter().flat_map(|f| f.vars.iter().copied()).collect();
    vars.sort_unstable();
    vars.dedup();
    let kept: Vec<usize> = vars.iter().copied().filter(|&v| Some(v) != gone).collect();
    // assignment bits: kept vars first, then the summed var on top
    let mut order = kept.clone();
    order.extend(gone);
    let pos: Vec<Vec<usize>> = factors
        .iter()
        .map(|f| {
            f.vars
                .iter()
                .map(|v| order.iter().position(|x| x == v).expect("var"))
                .collect()
        })
        .collect();
    let zero = Complex::new(T::zero(), T::zero());
    let one = Complex::new(T::one(), T::zero());
    let mut data = vec![zero; 1 << kept.len()];
    let reps = if gone.is_some() { 2 } else { 1 };
    for (r, slot) in data.iter_mut().enumerate() {
        let mut acc = zero;
        for g in 0..reps {
            let a = r | (g << kept.len());
            let mut prod = one;
            for (f, p) in factors.iter().zip(&pos) {
                prod = prod * f.data[f.index_in(p, a)];
            }
            acc = acc + prod;
        }
        *slot = acc;
    }
    Factor { vars: kept, data }
}

/// The factor graph of a diagram: spiders joined by simple edges share one
/// variable, Hadamard edges are pairwise factors, and every boundary maps
/// to the variable its wire ends on.
struct FactorGraph<T> {
    num_vars: usize,
    factors: Vec<Factor<T>>,
    boundary_var: BTreeMap<V, usize>,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

fn factor_graph<T: Scalar>(d: &Diagram) -> FactorGraph<T> {
    // X spiders are Z spiders with a Hadamard on every leg
    let is_x = |v: V| d.kind(v) == VertexKind::XSpider;
    let kind_of = |u: V, v: V, k: EdgeKind| {
        if is_x(u) != is_x(v) {
            k.toggle()
        } else {
            k
        }
    };
    let ids: Vec<V> = d.vertices().collect();
    let index: BTreeMap<V, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut parent: Vec<usize> = (0..ids.len()).collect();
    for (u, v, k) in d.edges() {
        let both_boundary = d.is_boundary(u) && d.is_boundary(v);
        if kind_of(u, v, k) == EdgeKind::Simple || both_boundary && k == EdgeKind::Simple {
            let (a, b) = (find(&mut parent, index[&u]), find(&mut parent, index[&v]));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut var_of_root = BTreeMap::new();
    let var: Vec<usize> = (0..ids.len())
        .map(|i| {
            let r = find(&mut parent, i);
            let n = var_of_root.len();
            *var_of_root.entry(r).or_insert(n)
        })
        .collect();
    let num_vars = var_of_root.len();
    let one = Complex::new(T::one(), T::zero());
    let mut factors = Vec::new();
    for (i, &v) in ids.iter().enumerate() {
        if !d.is_boundary(v) && !d.phase(v).is_zero() {
            let angle = T::from(d.phase(v).to_radians()).expect("finite");
            factors.push(Factor::unary(var[i], one, Complex::from_polar(T::one(), angle)));
        }
    }
    for (u, v, k) in d.edges() {
        if kind_of(u, v, k) == EdgeKind::Simple {
            continue;
        }
        let (a, b) = (var[index[&u]], var[index[&v]]);
        if a == b {
            let s = Complex::new(T::FRAC_1_SQRT_2(), T::zero());
            factors.push(Factor::unary(a, s, -s));
        } else {
            factors.push(Factor::hadamard(a, b));
        }
    }
    let boundary_var = d
        .inputs()
        .iter()
        .chain(d.outputs())
        .map(|&b| (b, var[index[&b]]))
        .collect();
    FactorGraph {
        num_vars,
        factors,
        boundary_var,
    }
}

/// Greedy elimination order (fewest neighbours, then least fill-in) for
/// every variable not in `open`, with the largest factor it creates.
fn elimination_plan(num_vars: usize, scopes: &[Vec<usize>], open: &BTreeSet<usize>) -> (Vec<usize>, usize) {
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); num_vars];
    for s in scopes {
        for &a in s {
            for &b in s {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
    }
    let mut remaining: BTreeSet<usize> = (0..num_vars).filter(|v| !open.contains(v)).collect();
    let mut order = Vec::with_capacity(remaining.len());
    let mut peak = open.len();
    while !remaining.is_empty() {
        let v = *remaining
            .iter()
            .min_by_key(|&&v| {
                let n: Vec<usize> = adj[v].iter().copied().collect();
                let mut fill = 0;
                for (i, &a) in n.iter().enumerate() {
                    for &b in &n[i + 1..] {
                        if !adj[a].contains(&b) {
                            fill += 1;
                        }
                    }
                }
                (n.len(), fill, v)
            })
            .expect("nonempty");
        remaining.remove(&v);
        let n: Vec<usize> = std::mem::take(&mut adj[v]).into_iter().collect();
        peak = peak.max(n.len() + 1);
        for &a in &n {
            adj[a].remove(&v);
            for &b in &n {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
        order.push(v);
    }
    (order, peak)
}

fn plan<T: Scalar>(g: &FactorGraph<T>) -> (Vec<usize>, usize) {
    let scopes: Vec<Vec<usize>> = g.factors.iter().map(|f| f.vars.clone()).collect();
    let open: BTreeSet<usize> = g.boundary_var.values().copied().collect();
    elimination_plan(g.num_vars, &scopes, &open)
}

impl Diagram {
    /// Largest intermediate factor, in variables, that evaluation needs.
    pub fn contraction_width(&self) -> usize {
        plan(&factor_graph::<f64>(self)).1
    }
}

impl ToTensor for Diagram {
    fn to_tensor_with<T: Scalar>(&self, limits: TensorLimits) -> Result<Tensor<T>, TensorError> {
        let nb = self.inputs().len() + self.outputs().len();
        if nb > limits.max_boundaries {
            return Err(TensorError::TooManyBoundaries {
                found: nb,
                limit: limits.max_boundaries,
            });
        }
        let g = factor_graph::<T>(self);
        let (order, peak) = plan(&g);
        if peak > limits.max_width {
            return Err(TensorError::TooWide {
                found: peak,
                limit: limits.max_width,
            });
        }
        let mut factors = g.factors;
        for v in order {
            let (bucket, rest): (Vec<_>, Vec<_>) = factors.into_iter().partition(|f| f.vars.contains(&v));
            factors = rest;
            if bucket.is_empty() {
                // a free variable sums to a factor of 2
                let two = Complex::new(T::one() + T::one(), T::zero());
                factors.push(Factor {
                    vars: vec![],
                    data: vec![two],
                });
            } else {
                factors.push(combine(&bucket, Some(v)));
            }
        }
        let all = combine(&factors, None);

        // outputs ++ inputs, axis 0 most significant
        let order: Vec<V> = self.outputs().iter().chain(self.inputs()).copied().collect();
        let n = order.len();
        let vars: Vec<usize> = order.iter().map(|b| g.boundary_var[b]).collect();
        let zero = Complex::new(T::zero(), T::zero());
        let mut data = vec![zero; 1 << n];
        'entries: for (idx, slot) in data.iter_mut().enumerate() {
            let mut value: BTreeMap<usize, usize> = BTreeMap::new();
            for (axis, &x) in vars.iter().enumerate() {
                let bit = (idx >> (n - 1 - axis)) & 1;
                if *value.entry(x).or_insert(bit) != bit {
                    continue 'entries;
                }
            }
            let mut k = 0;
            for (j, x) in all.vars.iter().enumerate() {
                k |= value[x] << j;
            }
            *slot = if all.vars.is_empty() { all.data[0] } else { all.data[k] };
        }
        Ok(Tensor::new(self.outputs().len(), self.inputs().len(), data))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase::Phase;
    use num_rational::Rational64;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn one_spider(kind: VertexKind, phase: Phase) -> Diagram {
        let mut d = Diagram::new();
        let i = d.add_node(VertexKind::Boundary, 0, 0);
        let s = d
            .add_vertex(kind, phase, Rational64::from_integer(1), Rational64::from_integer(0))
            .unwrap();
        let o = d.add_node(VertexKind::Boundary, 2, 0);
        d.add_edge(i, s, EdgeKind::Simple).unwrap();
        d.add_edge(s, o, EdgeKind::Simple).unwrap();
        d.set_inputs(vec![i]);
        d.set_outputs(vec![o]);
        d
    }

    #[test]
    fn z_spider_is_diagonal_phase() {
        let a = Phase::new(1, 3);
        let t = one_spider(VertexKind::ZSpider, a).to_tensor().unwrap();
        let expected = Tensor::new(
            1,
            1,
            vec![
                c(1.0, 0.0),
                c(0.0, 0.0),
                c(0.0, 0.0),
                Complex::from_polar(1.0, a.to_radians()),
            ],
        );
        assert!(compare_tensors(&t, &expected));
    }

    #[test]
    fn x_pi_is_not() {
        let t = one_spider(VertexKind::XSpider, Phase::pi()).to_tensor().unwrap();
        let not = Tensor::new(1, 1, vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        assert!(compare_tensors(&t, &not));
    }

    #[test]
    fn f32_evaluation_agrees() {
        let d = one_spider(VertexKind::XSpider, Phase::new(1, 4));
        let t32: Tensor32 = d.to_tensor_with(TensorLimits::default()).unwrap();
        let t64 = d.to_tensor().unwrap();
        for (a, b) in t32.data().iter().zip(t64.data()) {
            assert!((a.re as f64 - b.re).abs() < 1e-6 && (a.im as f64 - b.im).abs() < 1e-6);
        }
    }

    #[test]
    fn compare_basic_cases() {
        let t = Tensor::new(1, 1, vec![c(1.0, 0.0), c(2.0, 0.0), c(0.0, 1.0), c(0.0, 0.0)]);
        assert!(compare_tensors(&t, &t.scale(c(2.0, 0.0))));
        assert!(compare_tensors(&t.scale(c(0.0, -3.0)), &t));
        assert!(!compare_tensors(&t, &Tensor::zeros(1, 1)));
        assert!(!compare_tensors(&Tensor::zeros(1, 1), &t));
        assert!(!compare_tensors(&t, &Tensor::identity(1)));
        assert!(!compare_tensors(&Tensor64::identity(1), &Tensor64::identity(2)));
    }

    #[test]
    fn cnot_differs_from_cz() {
        let o = c(0.0, 0.0);
        let l = c(1.0, 0.0);
        let cnot = Tensor::new(2, 2, vec![l, o, o, o, o, l, o, o, o, o, o, l, o, o, l, o]);
        let cz = Tensor::new(2, 2, vec![l, o, o, o, o, l, o, o, o, o, l, o, o, o, o, c(-1.0, 0.0)]);
        assert!(!compare_tensors(&cnot, &cz));
        assert!(compare_tensors(&cnot.then(&cnot), &Tensor::identity(2)));
    }

    #[test]
    fn size_limit() {
        let mut d = Diagram::new();
        let bs: Vec<V> = (0..22).map(|q| d.add_node(VertexKind::Boundary, 0, q)).collect();
        d.set_inputs(bs);
        assert!(matches!(d.to_tensor(), Err(TensorError::TooManyBoundaries { .. })));
    }
}
