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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "charp/error.hpp"
#include "charp/zerodim/solve.hpp"

namespace charp::zerodim {

/// One affine chart of a projective (or multi-projective) scheme.
struct Chart {
  unsigned id = 0;
  Ideal ideal;
  /// Affine chart coordinates -> normalized projective coordinates.
  std::function<std::vector<Elem>(const ff::Field&, std::span<const Elem>)> to_key;
  /// Normalized projective coordinates -> affine chart coordinates, or
  /// nullopt when the point is outside the chart.
  std::function<std::optional<std::vector<Elem>>(const ff::Field&, std::span<const Elem>)> from_key;
};

struct ChartSummary {
  unsigned id = 0;
  std::size_t degree = 0;
  std::size_t points = 0;
  std::uint64_t fingerprint = 0;
};

struct SchemeReport {
  FieldPtr base;
  std::uint64_t fingerprint = 0;
  std::size_t total_degree = 0;
  std::size_t radical_degree = 0;
  /// Coordinates are normalized projective coordinates; `chart` is the first
  /// chart the point was found in.
  std::vector<SchemePoint> points;
  std::optional<unsigned> uniform_multiplicity;
  std::uint64_t seed = 0;
  ResourceStats stats;
  std::vector<ChartSummary> charts;
};

/// Divides by the first nonzero coordinate.
std::vector<Elem> normalize_projective(const ff::Field& f, std::span<const Elem> v);

/// Solves every chart, merges points by canonical projective coordinates,
/// computes multiplicities in each chart containing a point and checks
/// that they agree and that every chart conserves its degree.
SchemeReport scheme_report(const std::vector<Chart>& charts, const SolveOptions& opts = {});

/// Single affine chart: the key is the affine point itself.
SchemeReport affine_report(const Ideal& ideal, const SolveOptions& opts = {});

std::string to_json(const SchemeReport& r, int indent = 2);

}  // namespace charp::zerodim
