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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace charp::kernels {

/// Row-major dense matrix over F_p, p < 2^31. Row operations go through the
/// vector kernels when p < 2^16.
class DenseModMatrix {
 public:
  DenseModMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  std::span<std::uint32_t> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t r) const {
    return {a_.data() + r * cols_, cols_};
  }

  /// In-place reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// Basis of {v : A v = 0}.
  std::vector<std::vector<std::uint32_t>> kernel() const;

 private:
  void row_axpy(std::size_t dst, std::size_t src, std::uint32_t c);
  void row_scale(std::size_t r, std::uint32_t c);

  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> a_;
};

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

}  // namespace charp::kernels
