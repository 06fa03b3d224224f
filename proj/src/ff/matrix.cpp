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


#include "charp/ff/matrix.hpp"

#include "charp/error.hpp"
#include "charp/kernels/dense_mod.hpp"

namespace charp::ff {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || field_ != o.field_) throw UsageError("matrix shape mismatch");
  const Field& f = *field_;
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = at(i, k);
      if (!a) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Elem b = o.at(k, j);
        if (b) out.at(i, j) = f.add(out.at(i, j), f.mul(a, b));
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) {
    throw UsageError("matrix shape mismatch");
  }
  Matrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_->add(a_[i], o.a_[i]);
  return out;
}

Matrix Matrix::scaled(Elem c) const {
  Matrix out = *this;
  for (auto& v : out.a_) v = field_->mul(v, c);
  return out;
}

std::vector<Elem> Matrix::apply(const std::vector<Elem>& v) const {
  if (v.size() != cols_) throw UsageError("matrix-vector shape mismatch");
  const Field& f = *field_;
  std::vector<Elem> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Elem s = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j] && at(i, j)) s = f.add(s, f.mul(at(i, j), v[j]));
    }
    out[i] = s;
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_ || a.field_ != b.field_) throw UsageError("vstack shape mismatch");
  Matrix out(a.field_, a.rows_ + b.rows_, a.cols_);
  std::copy(a.a_.begin(), a.a_.end(), out.a_.begin());
  std::copy(b.a_.begin(), b.a_.end(), out.a_.begin() + static_cast<std::ptrdiff_t>(a.a_.size()));
  return out;
}

bool Matrix::use_kernel_path() const {
  return field_->is_prime() && field_->characteristic() < (1u << 31);
}

std::vector<std::size_t> Matrix::rref() {
  if (use_kernel_path()) {
    kernels::DenseModMatrix m(rows_, cols_, static_cast<std::uint32_t>(field_->characteristic()));
    for (std::size_t i = 0; i < a_.size(); ++i) m.at(i / cols_, i % cols_) = static_cast<std::uint32_t>(a_[i]);
    auto piv = m.rref();
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = m.at(i / cols_, i % cols_);
    return piv;
  }
  const Field& f = *field_;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && at(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(r, j));
    }
    const Elem inv = f.inv(at(r, c));
    for (std::size_t j = c; j < cols_; ++j) at(r, j) = f.mul(at(r, j), inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const Elem factor = at(i, c);
      if (!factor) continue;
      const Elem nf = f.neg(factor);
      for (std::size_t j = c; j < cols_; ++j) {
        if (at(r, j)) at(i, j) = f.add(at(i, j), f.mul(nf, at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return copy.rref().size();
}

std::vector<std::size_t> Matrix::free_columns() const {
  Matrix m = *this;
  const auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!is_pivot[c]) out.push_back(c);
  }
  return out;
}

std::vector<std::vector<Elem>> Matrix::kernel() const {
  Matrix m = *this;
  const auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Elem>> out;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(cols_, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field_->neg(m.at(i, free));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace charp::ff
