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
#include <vector>

#include "charp/ff/field.hpp"

namespace charp::ff {

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  static Matrix identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Elem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix scaled(Elem c) const;
  std::vector<Elem> apply(const std::vector<Elem>& v) const;
  Matrix transpose() const;
  /// Rows of a stacked on top of rows of b.
  static Matrix vstack(const Matrix& a, const Matrix& b);

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// Basis of the right kernel. Vector k has a 1 in the k-th free column
  /// and 0 in the other free columns.
  std::vector<std::vector<Elem>> kernel() const;
  /// Free (non-pivot) columns matching kernel().
  std::vector<std::size_t> free_columns() const;

 private:
  bool use_kernel_path() const;
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> a_;
};

}  // namespace charp::ff
