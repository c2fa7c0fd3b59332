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

//! Floating-point scalar abstraction for tensor evaluation.

use num_traits::{Float, FloatConst};
use std::fmt::Debug;

/// Real type underlying the complex entries of a [`Tensor`](crate::tensor::Tensor).
/// Implemented for `f32` and `f64`.
pub trait Scalar: Float + FloatConst + Debug + Send + Sync + 'static {}

impl<T> Scalar for T where T: Float + FloatConst + Debug + Send + Sync + 'static {}
