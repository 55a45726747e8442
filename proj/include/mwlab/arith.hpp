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

#ifndef MWLAB_ARITH_HPP
#define MWLAB_ARITH_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace mwlab {

/// Exact arbitrary-precision integer.  Every inequality over integers in this
/// library is evaluated on this type; no floating point enters those paths.
using Int = boost::multiprecision::cpp_int;

/// 50-decimal-digit float, used only where a formula is genuinely
/// transcendental (log towers) and a plain double could round the wrong way.
using Float50 = boost::multiprecision::cpp_bin_float_50;

/// 2^k for k >= 0.
inline Int pow2(long long k) {
  Int one = 1;
  return one << static_cast<unsigned>(k);
}

/// Binomial coefficient C(n, k), exactly.  Returns 0 when k < 0 or k > n.
inline Int binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Int acc = 1;
  // Each partial product is C(n-k+i, i), so the division is exact.
  for (long long i = 1; i <= k; ++i) {
    acc *= (n - k + i);
    acc /= i;
  }
  return acc;
}

inline Int factorial(long long n) {
  Int acc = 1;
  for (long long i = 2; i <= n; ++i) acc *= i;
  return acc;
}

/// base^exp for integer base (may be negative), exp >= 0.
inline Int ipow(long long base, int exp) {
  Int acc = 1;
  Int b = base;
  for (int i = 0; i < exp; ++i) acc *= b;
  return acc;
}

inline Float50 log2_hp(const Float50& x) {
  static const Float50 ln2 = boost::multiprecision::log(Float50(2));
  return boost::multiprecision::log(x) / ln2;
}

}  // namespace mwlab

#endif  // MWLAB_ARITH_HPP
