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

namespace charp::kernels {

/// Largest modulus the vector kernels accept: products of two residues must
/// fit in 32 bits.
inline constexpr std::uint32_t kMaxKernelModulus = 1u << 16;

/// dst[i] = (dst[i] + c * src[i]) mod p. Entries must already be reduced.
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t c, std::uint32_t p);
/// dst[i] = (c * dst[i]) mod p.
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);

namespace scalar {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
              std::uint32_t c, std::uint32_t p);
void scale_mod(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
              std::uint32_t c, std::uint32_t p);
void scale_mod(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p);
}  // namespace avx2

bool cpu_has_avx2();
/// Forces the scalar path (tests compare both paths on one machine).
void set_force_scalar(bool on);
/// "avx2" or "scalar".
const char* active_backend();

}  // namespace charp::kernels
