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

//! Exact phases, stored as rational multiples of π reduced into `[0, 2)`.

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

/// A phase `r·π` with `r` rational, normalised into `[0, 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Phase(Rational64);

impl Phase {
    pub fn new(numer: i64, denom: i64) -> Phase {
        Phase::from_rational(Rational64::new(numer, denom))
    }

    pub fn from_rational(r: Rational64) -> Phase {
        let two = Rational64::from_integer(2);
        let mut r = r % two;
        if r.is_negative() {
            r += two;
        }
        Phase(r)
    }

    pub fn zero() -> Phase {
        Phase(Rational64::zero())
    }

    /// The phase π.
    pub fn pi() -> Phase {
        Phase(Rational64::one())
    }

    /// Multiple of π as a rational in `[0, 2)`.
    pub fn to_rational(self) -> Rational64 {
        self.0
    }

    pub fn numer(self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    /// 0 or π.
    pub fn is_pauli(self) -> bool {
        self.denom() == 1
    }

    /// ±π/2.
    pub fn is_proper_clifford(self) -> bool {
        self.denom() == 2
    }

    pub fn is_clifford(self) -> bool {
        self.denom() <= 2
    }

    /// Odd multiples of π/4, the phases counted by the T-count.
    pub fn is_t_like(self) -> bool {
        self.denom() == 4
    }

    /// Angle in radians, in `[0, 2π)`.
    pub fn to_radians(self) -> f64 {
        *self.0.numer() as f64 / *self.0.denom() as f64 * std::f64::consts::PI
    }

    /// Best rational approximation of `radians / π` with denominator at most
    /// `max_denom`, provided it lies within `tol` of the input.
    pub fn approximate(radians: f64, max_denom: i64, tol: f64) -> Option<Phase> {
        let x = radians / std::f64::consts::PI;
        if !x.is_finite() {
            return None;
        }
        for d in 1..=max_denom {
            let n = (x * d as f64).round();
            if (n / d as f64 - x).abs() <= tol {
                return Some(Phase::new(n as i64, d));
            }
        }
        None
    }
}

impl From<Rational64> for Phase {
    fn from(r: Rational64) -> Phase {
        Phase::from_rational(r)
    }
}

impl Add for Phase {
    type Output = Phase;
    fn add(self, rhs: Phase) -> Phase {
        Phase::from_rational(self.0 + rhs.0)
    }
}

impl AddAssign for Phase {
    fn add_assign(&mut self, rhs: Phase) {
        *self = *self + rhs;
    }
}

impl Sub for Phase {
    type Output = Phase;
    fn sub(self, rhs: Phase) -> Phase {
        Phase::from_rational(self.0 - rhs.0)
    }
}

impl SubAssign for Phase {
    fn sub_assign(&mut self, rhs: Phase) {
        *self = *self - rhs;
    }
}

impl Neg for Phase {
    type Output = Phase;
    fn neg(self) -> Phase {
        Phase::from_rational(-self.0)
    }
}

/// Renders as `n*pi/d`, with the `n*` and `/d` parts omitted when trivial.
impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = (self.numer(), self.denom());
        match (n, d) {
            (0, _) => write!(f, "0"),
            (1, 1) => write!(f, "pi"),
            (1, d) => write!(f, "pi/{d}"),
            (n, 1) => write!(f, "{n}*pi"),
            (n, d) => write!(f, "{n}*pi/{d}"),
        }
    }
}
