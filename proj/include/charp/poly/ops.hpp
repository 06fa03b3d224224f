// Copyright 2026 The charp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <vector>

#include "charp/poly/polynomial.hpp"

namespace charp::poly {

/// dF/dx_i.
Polynomial partial_derivative(const Polynomial& f, unsigned i);
/// Diagonal second Hasse derivative: coefficientwise C(j,2) x_i^(j-2).
Polynomial hasse_second_derivative(const Polynomial& f, unsigned i);
/// Second Hasse derivative D_{ij}: the Hasse diagonal when i == j, the plain
/// mixed partial otherwise.
Polynomial hasse_second(const Polynomial& f, unsigned i, unsigned j);

std::vector<Polynomial> gradient(const Polynomial& f);
/// sum_i F_{x_i} v_i.
Polynomial gradient_dot(const Polynomial& f, const std::vector<Polynomial>& v);
/// sum_{i<=j} F_{x_i x_j / 2} v_i v_j with Hasse derivatives on the diagonal.
Polynomial hessian_form(const Polynomial& f, const std::vector<Polynomial>& v);

/// Constant vector helper for gradient_dot / hessian_form.
std::vector<Polynomial> constant_vector(const RingPtr& ring, const std::vector<Elem>& v);

/// Square matrix over the field, row-major.
using FieldMatrix = std::vector<std::vector<Elem>>;

/// F(M x). Throws UsageError when M is singular or has the wrong shape.
Polynomial substitute_linear(const Polynomial& f, const FieldMatrix& m);

/// Sets x_chart = 1; the result lives in a ring without that variable.
Polynomial dehomogenize(const Polynomial& f, unsigned chart);
/// Ring obtained by dropping variable `chart`.
RingPtr chart_ring(const RingPtr& ring, unsigned chart);
/// Inverse of dehomogenize: target has one more variable, inserted at index
/// chart. Requires d >= deg f.
Polynomial homogenize(const Polynomial& f, unsigned d, const RingPtr& target, unsigned chart);
/// Convenience: inserts a fresh variable called `name` at index chart.
Polynomial homogenize(const Polynomial& f, unsigned d, unsigned chart, const std::string& name);

}  // namespace charp::poly
