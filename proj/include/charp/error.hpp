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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace charp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (mismatched rings, bad arguments, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in finite field") {}
};

/// Text input (field literal, polynomial, curve file) could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A geometric input violated the hypotheses needed for a finite answer.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// Rejection sampling ran out of attempts.
class SamplingFailure : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant. Always a bug or an impossible configuration.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Progress counters attached to resource-limit failures.
struct ResourceStats {
  std::uint64_t pairs_processed = 0;
  std::uint64_t pairs_skipped = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t basis_size = 0;
  std::uint64_t max_degree = 0;
};

/// A configured cap (pairs, basis size, field degree, ...) was exceeded.
class ResourceLimit : public Error {
 public:
  ResourceLimit(const std::string& what, ResourceStats stats = {})
      : Error(what), stats_(stats) {}
  const ResourceStats& stats() const { return stats_; }

 private:
  ResourceStats stats_;
};

/// Cooperative cancellation was requested.
class Cancelled : public Error {
 public:
  Cancelled() : Error("computation cancelled") {}
};

}  // namespace charp
