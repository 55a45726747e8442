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

#ifndef MWLAB_WHITNEY_HPP
#define MWLAB_WHITNEY_HPP

#include <vector>

#include "mwlab/arith.hpp"
#include "mwlab/matroid.hpp"

namespace mwlab {

/// Corank-nullity counts: w[i][j] = #subsets A with corank i = r - rank(A)
/// and nullity j = |A| - rank(A).  Dimensions (r+1) x (n-r+1); the counts
/// sum to 2^n.
struct WhitneyTable {
  int n = 0;
  int r = 0;
  std::vector<std::vector<Int>> w;

  Int total() const {
    Int s = 0;
    for (const auto& row : w)
      for (const Int& v : row) s += v;
    return s;
  }
};

inline constexpr int kDefaultGroundSetCap = 24;

/// Exact subset enumeration over all 2^n subsets.  This is the slow, obvious
/// oracle the deletion-contraction engine is checked against.
/// Throws GroundSetTooLarge when n exceeds the cap.
WhitneyTable whitney_table(const Matroid& m, int max_n = kDefaultGroundSetCap);

}  // namespace mwlab

#endif  // MWLAB_WHITNEY_HPP
