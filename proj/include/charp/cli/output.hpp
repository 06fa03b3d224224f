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

#include <span>
#include <string>

#include "charp/zerodim/report.hpp"
#include "json.hpp"

namespace charp::cli {

using ff::Elem;
using ff::FieldPtr;
using gb::Ideal;
using nlohmann::json;
using poly::Monomial;
using poly::Polynomial;
using ff::UPoly;

/// "[1,1,0]" with field literals.
std::string format_point(const ff::Field& f, std::span<const Elem> v);

json report_json(const zerodim::SchemeReport& r);

/// "3 x3" style summary: radical degree, multiplicity (or "mixed"), total.
std::string report_summary(const zerodim::SchemeReport& r);

}  // namespace charp::cli
