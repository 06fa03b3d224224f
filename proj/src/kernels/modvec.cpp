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


#include "charp/kernels/modvec.hpp"

#include <atomic>

#include "charp/error.hpp"

namespace charp::kernels {
namespace {

std::atomic<bool> g_force_scalar{false};

bool use_avx2(std::uint32_t p) {
  static const bool has = cpu_has_avx2();
  return has && p < kMaxKernelModulus && !g_force_scalar.load(std::memory_order_relaxed);
}

}  // namespace

namespace scalar {

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
              std::uint32_t c, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>(
        (dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
  }
}

void scale_mod(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * dst[i] % p);
  }
}

}  // namespace scalar

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

void set_force_scalar(bool on) { g_force_scalar.store(on); }

const char* active_backend() {
  return use_avx2(3) ? "avx2" : "scalar";
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t c, std::uint32_t p) {
  if (dst.size() != src.size()) throw UsageError("axpy_mod: length mismatch");
  if (c == 0) return;
  if (use_avx2(p)) {
    avx2::axpy_mod(dst.data(), src.data(), dst.size(), c, p);
  } else {
    scalar::axpy_mod(dst.data(), src.data(), dst.size(), c, p);
  }
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
  if (use_avx2(p)) {
    avx2::scale_mod(dst.data(), dst.size(), c, p);
  } else {
    scalar::scale_mod(dst.data(), dst.size(), c, p);
  }
}

}  // namespace charp::kernels
