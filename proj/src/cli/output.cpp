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


#include "charp/cli/output.hpp"

namespace charp::cli {

std::string format_point(const ff::Field& f, std::span<const Elem> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += f.format(v[i]);
  }
  return s + "]";
}

json report_json(const zerodim::SchemeReport& r) { return json::parse(zerodim::to_json(r, -1)); }

std::string report_summary(const zerodim::SchemeReport& r) {
  std::string s = std::to_string(r.radical_degree) + " geometric points, ";
  s += r.uniform_multiplicity ? "multiplicity " + std::to_string(*r.uniform_multiplicity) : "mixed multiplicities";
  return s + ", total degree " + std::to_string(r.total_degree);
}

}  // namespace charp::cli
