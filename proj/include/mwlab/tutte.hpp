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

#ifndef MWLAB_TUTTE_HPP
#define MWLAB_TUTTE_HPP

#include <vector>

#include "mwlab/arith.hpp"
#include "mwlab/matroid.hpp"
#include "mwlab/whitney.hpp"

namespace mwlab {

/// Dense coefficient table of T(M; x, y): t[i][j] is the coefficient of
/// x^i y^j, 0 <= i <= r, 0 <= j <= n-r.  Coefficients are exact and
/// non-negative.
struct TuttePolynomial {
  int n = 0;
  int r = 0;
  std::vector<std::vector<Int>> t;

  const Int& coeff(int i, int j) const { return t[i][j]; }

  /// Exact value of sum t[i][j] x^i y^j at integer (x, y).
  Int evaluate(long long x, long long y) const;

  bool operator==(const TuttePolynomial& other) const {
    return n == other.n && r == other.r && t == other.t;
  }
};

/// Expand sum w[i][j] (x-1)^i (y-1)^j into the coefficient table.
/// Raises EngineMismatch if any expanded coefficient comes out negative.
TuttePolynomial tutte_from_whitney(const WhitneyTable& w);

/// Deletion-contraction with memoization on the exact relabeled basis
/// representation of each minor.  Base case: when every element is a loop or
/// coloop, T = x^#coloops y^#loops; otherwise the pivot is the lowest-indexed
/// ordinary element.  Produces exactly the same table as
/// tutte_from_whitney(whitney_table(m)).
TuttePolynomial tutte_delcon(const Matroid& m);

/// Number of subsets containing no broken circuit (circuit minus its
/// order-least element), under the given ground-set ordering.  Equals
/// T(M;2,0) and does not depend on the order.  A loop yields the empty
/// broken circuit, so the count is 0 for loopy matroids.
Int nbc_count(const Matroid& m, const std::vector<int>& order);

std::vector<int> identity_order(int n);

/// Number of bases; equals T(M;1,1).
Int basis_count(const Matroid& m);

}  // namespace mwlab

#endif  // MWLAB_TUTTE_HPP
