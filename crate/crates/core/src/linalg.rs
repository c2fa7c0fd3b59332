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

//! Matrices over GF(2) and Gaussian elimination with a recorded row-operation
//! log, as needed by circuit extraction.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2 {
    rows: Vec<Vec<u8>>,
    cols: usize,
}

impl Mat2 {
    pub fn new(rows: Vec<Vec<u8>>) -> Mat2 {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Mat2 {
            rows: rows
                .into_iter()
                .map(|r| r.into_iter().map(|x| x & 1).collect())
                .collect(),
            cols,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Mat2 {
        Mat2 {
            rows: vec![vec![0; cols]; rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Mat2 {
        let mut m = Mat2::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = 1;
        }
        m
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.rows[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: u8) {
        self.rows[r][c] = x & 1;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.rows[r]
    }

    pub fn row_weight(&self, r: usize) -> usize {
        self.rows[r].iter().filter(|&&x| x == 1).count()
    }

    /// `row[tgt] ^= row[src]`.
    pub fn row_add(&mut self, src: usize, tgt: usize) {
        assert_ne!(src, tgt);
        for c in 0..self.cols {
            self.rows[tgt][c] ^= self.rows[src][c];
        }
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        assert_eq!(self.cols, other.num_rows());
        let mut out = Mat2::zeros(self.num_rows(), other.cols);
        for i in 0..self.num_rows() {
            for k in 0..self.cols {
                if self.rows[i][k] == 1 {
                    for j in 0..other.cols {
                        out.rows[i][j] ^= other.rows[k][j];
                    }
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.gauss().len_pivots
    }

    /// Reduces to row-reduced echelon form in place and returns the row
    /// operations performed, in order.
    ///
    /// For each pivot column, the pivot row is taken to be the current row
    /// if it has a 1 there; otherwise the lightest lower row with a 1 is
    /// added into it (ties go to the lowest index). The pivot row is then
    /// added to every other row with a 1 in that column.
    pub fn gauss(&mut self) -> GaussResult {
        let mut ops = Vec::new();
        let mut pivot_row = 0;
        let mut pivots = Vec::new();
        for col in 0..self.cols {
            if pivot_row == self.num_rows() {
                break;
            }
            if self.rows[pivot_row][col] == 0 {
                let src = (pivot_row + 1..self.num_rows())
                    .filter(|&r| self.rows[r][col] == 1)
                    .min_by_key(|&r| (self.row_weight(r), r));
                match src {
                    Some(src) => {
                        self.row_add(src, pivot_row);
                        ops.push((src, pivot_row));
                    }
                    None => continue,
                }
            }
            for r in 0..self.num_rows() {
                if r != pivot_row && self.rows[r][col] == 1 {
                    self.row_add(pivot_row, r);
                    ops.push((pivot_row, r));
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        GaussResult {
            ops,
            len_pivots: pivot_row,
            pivot_cols: pivots,
        }
    }
}

/// Row-reduces a copy of `m`; returns the row operations and the result.
pub fn gf2_gauss(m: &Mat2) -> (Vec<(usize, usize)>, Mat2) {
    let mut r = m.clone();
    let g = r.gauss();
    (g.ops, r)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussResult {
    /// `(src, tgt)` pairs meaning `row[tgt] ^= row[src]`.
    pub ops: Vec<(usize, usize)>,
    pub len_pivots: usize,
    pub pivot_cols: Vec<usize>,
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let s: String = r.iter().map(|&x| if x == 1 { '1' } else { '0' }).collect();
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn replay(m: &Mat2, ops: &[(usize, usize)]) -> Mat2 {
        let mut m = m.clone();
        for &(s, t) in ops {
            m.row_add(s, t);
        }
        m
    }

    fn is_rref(m: &Mat2) -> bool {
        let mut last = None;
        for r in 0..m.num_rows() {
            let lead = (0..m.num_cols()).find(|&c| m.get(r, c) == 1);
            match (last, lead) {
                (Some(None), Some(_)) => return false,
                (Some(Some(a)), Some(b)) if b <= a => return false,
                _ => {}
            }
            if let Some(c) = lead {
                if (0..m.num_rows()).any(|o| o != r && m.get(o, c) == 1) {
                    return false;
                }
            }
            last = Some(lead);
        }
        true
    }

    #[test]
    fn invertible_reduces_to_identity() {
        let m = Mat2::new(vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 1, 1]]);
        let mut r = m.clone();
        let g = r.gauss();
        assert_eq!(r, Mat2::identity(3));
        assert_eq!(g.len_pivots, 3);
        assert_eq!(replay(&m, &g.ops), r);
    }

    #[test]
    fn exhaustive_3x3() {
        for bits in 0u32..512 {
            let rows = (0..3)
                .map(|i| (0..3).map(|j| ((bits >> (3 * i + j)) & 1) as u8).collect())
                .collect();
            let m = Mat2::new(rows);
            let mut r = m.clone();
            let g = r.gauss();
            assert!(is_rref(&r), "{m}");
            assert_eq!(replay(&m, &g.ops), r);
        }
    }

    #[test]
    fn prefers_lightest_row() {
        let mut m = Mat2::new(vec![vec![0, 1], vec![1, 1], vec![1, 0]]);
        let g = m.gauss();
        assert_eq!(g.ops[0], (2, 0));
    }

    #[test]
    fn small_cases() {
        let (ops, r) = gf2_gauss(&Mat2::identity(4));
        assert!(ops.is_empty());
        assert_eq!(r, Mat2::identity(4));
        let (ops, r) = gf2_gauss(&Mat2::new(vec![vec![1, 1], vec![0, 1]]));
        assert_eq!(ops, vec![(1, 0)]);
        assert_eq!(r, Mat2::identity(2));
    }

    #[test]
    fn ops_replayed_on_identity_give_inverse() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut found = 0;
        while found < 20 {
            let m = Mat2::new((0..6).map(|_| (0..6).map(|_| rng.gen_range(0..2)).collect()).collect());
            if m.rank() < 6 {
                continue;
            }
            found += 1;
            let (ops, _) = gf2_gauss(&m);
            let inv = replay(&Mat2::identity(6), &ops);
            assert_eq!(inv.mul(&m), Mat2::identity(6));
        }
    }

    #[test]
    fn rank_and_mul() {
        let a = Mat2::new(vec![vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 0]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(Mat2::identity(3).mul(&a), a);
    }
}
