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


#include <immintrin.h>

#include "charp/kernels/modvec.hpp"

namespace charp::kernels::avx2 {
namespace {

// x mod p for 32-bit lanes, p < 2^16. q = floor(x * m / 2^32) with
// m = floor(2^32 / p) undershoots the true quotient by at most 2.
inline __m256i reduce(__m256i x, __m256i m, __m256i pv) {
  const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(x, m), 32);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), m);
  const __m256i q = _mm256_blend_epi32(even, odd, 0xAA);
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, pv));
  r = _mm256_min_epu32(r, _mm256_sub_epi32(r, pv));
  r = _mm256_min_epu32(r, _mm256_sub_epi32(r, pv));
  return r;
}

}  // namespace

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
              std::uint32_t c, std::uint32_t p) {
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i m = _mm256_set1_epi32(static_cast<int>(0xFFFFFFFFu / p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i prod = reduce(_mm256_mullo_epi32(s, cv), m, pv);
    __m256i sum = _mm256_add_epi32(d, prod);
    sum = _mm256_min_epu32(sum, _mm256_sub_epi32(sum, pv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), sum);
  }
  scalar::axpy_mod(dst + i, src + i, n - i, c, p);
}

void scale_mod(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p) {
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i m = _mm256_set1_epi32(static_cast<int>(0xFFFFFFFFu / p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        reduce(_mm256_mullo_epi32(d, cv), m, pv));
  }
  scalar::scale_mod(dst + i, n - i, c, p);
}

}  // namespace charp::kernels::avx2
