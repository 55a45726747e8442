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

#include "mwlab/whitney.hpp"

#include <cstdint>

namespace mwlab {

WhitneyTable whitney_table(const Matroid& m, int max_n) {
  const int n = m.n();
  const int r = m.rank();
  if (n > max_n) {
    throw GroundSetTooLarge("whitney_table: n=" + std::to_string(n) +
                            " exceeds cap " + std::to_string(max_n));
  }

  // Counts fit in 64 bits because they are bounded by 2^n and n <= cap.
  std::vector<std::vector<std::uint64_t>> counts(
      r + 1, std::vector<std::uint64_t>(n - r + 1, 0));
  const std::vector<Mask>& bases = m.bases();
  const Mask limit = Mask{1} << n;
  for (Mask a = 0; a < limit; ++a) {
    const int sz = popcount(a);
    const int cap = sz < r ? sz : r;
    int rank = 0;
    for (Mask b : bases) {
      const int c = popcount(a & b);
      if (c > rank) {
        rank = c;
        if (rank == cap) break;
      }
    }
    ++counts[r - rank][sz - rank];
  }

  WhitneyTable w;
  w.n = n;
  w.r = r;
  w.w.assign(r + 1, std::vector<Int>(n - r + 1, 0));
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= n - r; ++j) w.w[i][j] = counts[i][j];
  return w;
}

}  // namespace mwlab
