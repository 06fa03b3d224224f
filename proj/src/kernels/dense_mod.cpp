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


#include "charp/kernels/dense_mod.hpp"

#include <utility>

#include "charp/error.hpp"
#include "charp/kernels/modvec.hpp"

namespace charp::kernels {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw DivisionByZero();
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    const std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

DenseModMatrix::DenseModMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {
  if (p < 2 || p >= (1u << 31)) throw UsageError("DenseModMatrix: modulus out of range");
}

void DenseModMatrix::row_axpy(std::size_t dst, std::size_t src, std::uint32_t c) {
  if (p_ < kMaxKernelModulus) {
    axpy_mod(row(dst), row(src), c, p_);
    return;
  }
  auto d = row(dst);
  auto s = row(src);
  for (std::size_t i = 0; i < cols_; ++i) {
    d[i] = static_cast<std::uint32_t>((d[i] + static_cast<std::uint64_t>(c) * s[i]) % p_);
  }
}

void DenseModMatrix::row_scale(std::size_t r, std::uint32_t c) {
  if (p_ < kMaxKernelModulus) {
    scale_mod(row(r), c, p_);
    return;
  }
  for (auto& v : row(r)) v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * c % p_);
}

std::vector<std::size_t> DenseModMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && at(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(r, j));
    }
    row_scale(r, inv_mod(at(r, c), p_));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      row_axpy(i, r, p_ - at(i, c));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t DenseModMatrix::rank() const {
  DenseModMatrix copy = *this;
  return copy.rref().size();
}

std::vector<std::vector<std::uint32_t>> DenseModMatrix::kernel() const {
  DenseModMatrix m = *this;
  const auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(cols_, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const std::uint32_t e = m.at(i, free);
      v[pivots[i]] = e ? p_ - e : 0;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace charp::kernels
