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

#include "mwlab/tutte.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace mwlab {

namespace {

// Remove bit position e, shifting higher bits down by one.
Mask squeeze(Mask b, int e) {
  const Mask low = mask_bit(e) - 1;
  return (b & low) | ((b >> (e + 1)) << e);
}

struct MinorKey {
  int n;
  std::vector<Mask> bases;
  bool operator==(const MinorKey&) const = default;
};

struct MinorKeyHash {
  std::size_t operator()(const MinorKey& k) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(k.n));
    for (Mask b : k.bases) mix(b);
    return static_cast<std::size_t>(h);
  }
};

using Memo = std::unordered_map<MinorKey, TuttePolynomial, MinorKeyHash>;

TuttePolynomial delcon(const MinorKey& key, Memo& memo) {
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int n = key.n;
  const Mask full = full_mask(n);
  Mask in_some = 0, in_all = full;
  for (Mask b : key.bases) {
    in_some |= b;
    in_all &= b;
  }
  const Mask loop_set = full & ~in_some;
  const Mask coloop_set = in_all;
  const Mask ordinary = full & ~loop_set & ~coloop_set;
  const int r = popcount(key.bases.front());

  TuttePolynomial result;
  result.n = n;
  result.r = r;
  result.t.assign(r + 1, std::vector<Int>(n - r + 1, 0));

  if (ordinary == 0) {
    // Every element is a loop or coloop: T = x^#coloops * y^#loops.
    result.t[popcount(coloop_set)][popcount(loop_set)] = 1;
  } else {
    const int e = std::countr_zero(ordinary);
    MinorKey del{n - 1, {}};
    MinorKey con{n - 1, {}};
    for (Mask b : key.bases) {
      if (b & mask_bit(e)) {
        con.bases.push_back(squeeze(b & ~mask_bit(e), e));
      } else {
        del.bases.push_back(squeeze(b, e));
      }
    }
    // Filtering and squeezing both preserve ascending order.
    const TuttePolynomial td = delcon(del, memo);
    const TuttePolynomial tc = delcon(con, memo);
    for (int i = 0; i <= td.r; ++i)
      for (int j = 0; j <= td.n - td.r; ++j) result.t[i][j] += td.t[i][j];
    for (int i = 0; i <= tc.r; ++i)
      for (int j = 0; j <= tc.n - tc.r; ++j) result.t[i][j] += tc.t[i][j];
  }

  memo.emplace(key, result);
  return result;
}

}  // namespace

Int TuttePolynomial::evaluate(long long x, long long y) const {
  Int total = 0;
  for (int i = 0; i <= r; ++i) {
    const Int xi = ipow(x, i);
    for (int j = 0; j <= n - r; ++j) {
      if (t[i][j] == 0) continue;
      total += t[i][j] * xi * ipow(y, j);
    }
  }
  return total;
}

TuttePolynomial tutte_from_whitney(const WhitneyTable& w) {
  const int n = w.n;
  const int r = w.r;
  TuttePolynomial out;
  out.n = n;
  out.r = r;
  out.t.assign(r + 1, std::vector<Int>(n - r + 1, 0));
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j <= n - r; ++j) {
      if (w.w[i][j] == 0) continue;
      for (int a = 0; a <= i; ++a) {
        const Int ca = binomial(i, a);
        for (int b = 0; b <= j; ++b) {
          Int term = w.w[i][j] * ca * binomial(j, b);
          if (((i - a) + (j - b)) % 2 != 0) term = -term;
          out.t[a][b] += term;
        }
      }
    }
  }
  for (const auto& row : out.t) {
    for (const Int& c : row) {
      if (c < 0) throw EngineMismatch("whitney expansion produced a negative coefficient");
    }
  }
  return out;
}

TuttePolynomial tutte_delcon(const Matroid& m) {
  Memo memo;  // private to this invocation
  return delcon(MinorKey{m.n(), m.bases()}, memo);
}

std::vector<int> identity_order(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

Int nbc_count(const Matroid& m, const std::vector<int>& order) {
  const int n = m.n();
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("nbc_count: order must be a permutation of the ground set");
  }
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    const int e = order[i];
    if (e < 0 || e >= n || position[e] != -1) {
      throw std::invalid_argument("nbc_count: order must be a permutation of the ground set");
    }
    position[e] = i;
  }

  std::vector<Mask> broken;
  for (Mask c : m.circuits().members) {
    int least = -1;
    for (Mask rest = c; rest;) {
      const int e = std::countr_zero(rest);
      rest &= rest - 1;
      if (least < 0 || position[e] < position[least]) least = e;
    }
    const Mask b = c & ~mask_bit(least);
    if (b == 0) return 0;  // loop circuit: every subset contains the empty set
    broken.push_back(b);
  }
  std::sort(broken.begin(), broken.end());
  broken.erase(std::unique(broken.begin(), broken.end()), broken.end());

  Int count = 0;
  const Mask limit = Mask{1} << n;
  for (Mask a = 0; a < limit; ++a) {
    bool ok = true;
    for (Mask b : broken) {
      if ((a & b) == b) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

Int basis_count(const Matroid& m) { return Int(m.bases().size()); }

}  // namespace mwlab
