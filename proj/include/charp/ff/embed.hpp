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

#include "charp/ff/field.hpp"

namespace charp::ff {

/// A fixed ring embedding GF(p^k) -> GF(p^(k m)), determined by the image of
/// the generator t (the smallest root of the source modulus in the target).
class Embedding {
 public:
  Embedding(FieldPtr source, FieldPtr target);
  /// Embedding sending t to theta; theta must be a root of the source
  /// modulus in the target.
  Embedding(FieldPtr source, FieldPtr target, Elem theta);

  const FieldPtr& source() const { return source_; }
  const FieldPtr& target() const { return target_; }
  Elem image_of_generator() const { return theta_; }
  Elem apply(Elem a) const;

 private:
  void init_powers();
  FieldPtr source_;
  FieldPtr target_;
  Elem theta_ = 0;
  std::vector<Elem> powers_;  // theta^i, i < k
};

/// Shared, cached embedding for a field pair. Throws UsageError when the
/// source degree does not divide the target degree.
const Embedding& embedding(const FieldPtr& source, const FieldPtr& target);

Elem embed(Elem a, const FieldPtr& source, const FieldPtr& target);
FieldElement embed(const FieldElement& a, const FieldPtr& target);

}  // namespace charp::ff
