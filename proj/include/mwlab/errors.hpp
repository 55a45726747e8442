// Copyright 2026 The Authors.
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

#ifndef MWLAB_ERRORS_HPP
#define MWLAB_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mwlab {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// -- matroid construction ---------------------------------------------------

struct EmptyBases : Error {
  EmptyBases() : Error("basis collection is empty") {}
};

struct MixedCardinality : Error {
  explicit MixedCardinality(const std::string& msg) : Error(msg) {}
};

/// Basis-exchange failure; carries a witnessing pair and the element that
/// cannot be exchanged out of b1.
struct ExchangeViolation : Error {
  std::uint64_t b1, b2;
  int element;
  ExchangeViolation(const std::string& msg, std::uint64_t b1_, std::uint64_t b2_, int e)
      : Error(msg), b1(b1_), b2(b2_), element(e) {}
};

struct RankOutOfRange : Error {
  explicit RankOutOfRange(const std::string& msg) : Error(msg) {}
};

struct BadEndpoint : Error {
  explicit BadEndpoint(const std::string& msg) : Error(msg) {}
};

struct GroundSetTooLarge : Error {
  explicit GroundSetTooLarge(const std::string& msg) : Error(msg) {}
};

struct RankZero : Error {
  explicit RankZero(const std::string& msg) : Error(msg) {}
};

// -- bounds -----------------------------------------------------------------

struct BadRange : Error {
  explicit BadRange(const std::string& msg) : Error(msg) {}
};

struct RankTooSmall : Error {
  explicit RankTooSmall(const std::string& msg) : Error(msg) {}
};

struct HypothesisUnmet : Error {
  explicit HypothesisUnmet(const std::string& msg) : Error(msg) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// -- io ---------------------------------------------------------------------

/// Malformed input text; line is 1-based.
struct SyntaxError : Error {
  int line;
  SyntaxError(const std::string& msg, int line_) : Error(msg), line(line_) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

struct CountMismatch : Error {
  explicit CountMismatch(const std::string& msg) : Error(msg) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

struct SinkError : Error {
  explicit SinkError(const std::string& msg) : Error(msg) {}
};

// -- engine -----------------------------------------------------------------

/// The two Tutte engines (or a cross-check identity) disagreed.  This is a
/// correctness violation, not a user error.
struct EngineMismatch : Error {
  explicit EngineMismatch(const std::string& msg) : Error(msg) {}
};

}  // namespace mwlab

#endif  // MWLAB_ERRORS_HPP
