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

#include "mwlab/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace mwlab {

namespace {

constexpr int kMaxGroundSet = 63;  // one Mask bit per element

std::string mask_to_string(Mask m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int e = 0; m >> e; ++e) {
    if (m & mask_bit(e)) {
      if (!first) os << ",";
      os << e;
      first = false;
    }
  }
  os << "}";
  return os.str();
}

void check_ground_size(int n) {
  if (n < 0 || n > kMaxGroundSet) {
    throw GroundSetTooLarge("ground set size " + std::to_string(n) +
                            " outside supported range 0.." +
                            std::to_string(kMaxGroundSet));
  }
}

// Verifies the exchange axiom on a sorted, deduplicated, equicardinal basis
// list; throws ExchangeViolation with a witness on failure.
void check_exchange(const std::vector<Mask>& bases) {
  std::unordered_set<Mask> present(bases.begin(), bases.end());
  for (const Mask b1 : bases) {
    for (const Mask b2 : bases) {
      if (b1 == b2) continue;
      Mask out = b1 & ~b2;
      Mask in = b2 & ~b1;
      for (Mask rest = out; rest;) {
        const int e = std::countr_zero(rest);
        rest &= rest - 1;
        bool found = false;
        for (Mask cand = in; cand;) {
          const int f = std::countr_zero(cand);
          cand &= cand - 1;
          if (present.count((b1 ^ mask_bit(e)) | mask_bit(f))) {
            found = true;
            break;
          }
        }
        if (!found) {
          throw ExchangeViolation(
              "exchange axiom fails: no f in B2\\B1 with (B1\\{" +
                  std::to_string(e) + "})+{f} a basis, B1=" + mask_to_string(b1) +
                  " B2=" + mask_to_string(b2),
              b1, b2, e);
        }
      }
    }
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // false if x and y were already connected
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

}  // namespace

std::vector<Mask> k_subsets(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  Mask c = full_mask(k);
  const Mask limit = Mask{1} << n;
  while (c < limit) {
    out.push_back(c);
    // Gosper's hack: next larger mask with the same popcount.
    Mask u = c & (~c + 1);
    Mask v = c + u;
    c = v | (((v ^ c) / u) >> 2);
  }
  return out;
}

int SubsetFamily::min_size() const {
  int best = -1;
  for (Mask m : members) {
    int s = popcount(m);
    if (best < 0 || s < best) best = s;
  }
  return best;
}

Matroid Matroid::from_bases(int n, std::vector<Mask> basis_list, std::string provenance) {
  check_ground_size(n);
  if (basis_list.empty()) throw EmptyBases();
  const Mask full = full_mask(n);
  for (Mask b : basis_list) {
    if (b & ~full) {
      throw RankOutOfRange("basis " + mask_to_string(b) +
                           " uses elements outside 0.." + std::to_string(n - 1));
    }
  }
  std::sort(basis_list.begin(), basis_list.end());
  basis_list.erase(std::unique(basis_list.begin(), basis_list.end()), basis_list.end());
  const int r = popcount(basis_list.front());
  for (Mask b : basis_list) {
    if (popcount(b) != r) {
      throw MixedCardinality("basis " + mask_to_string(b) + " has " +
                             std::to_string(popcount(b)) + " elements, expected " +
                             std::to_string(r));
    }
  }
  check_exchange(basis_list);
  return Matroid(n, r, std::move(basis_list), std::move(provenance));
}

Matroid Matroid::uniform(int r, int n) {
  check_ground_size(n);
  if (r < 0 || r > n) {
    throw RankOutOfRange("uniform rank " + std::to_string(r) +
                         " outside 0.." + std::to_string(n));
  }
  return Matroid(n, r, k_subsets(n, r),
                 "uniform(" + std::to_string(r) + "," + std::to_string(n) + ")");
}

Matroid Matroid::graphic(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count < 0) throw BadEndpoint("negative vertex count");
  const int n = static_cast<int>(edges.size());
  check_ground_size(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw BadEndpoint("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") outside 0.." + std::to_string(vertex_count - 1));
    }
  }
  // rank = vertices - components (isolated vertices included)
  UnionFind all(vertex_count);
  int components = vertex_count;
  for (const auto& [u, v] : edges) {
    if (all.unite(u, v)) --components;
  }
  const int r = vertex_count - components;

  std::vector<Mask> bases;
  for (Mask cand : k_subsets(n, r)) {
    UnionFind uf(vertex_count);
    bool acyclic = true;
    for (Mask rest = cand; rest;) {
      const int e = std::countr_zero(rest);
      rest &= rest - 1;
      if (!uf.unite(edges[e].first, edges[e].second)) {
        acyclic = false;
        break;
      }
    }
    if (acyclic) bases.push_back(cand);
  }
  return Matroid(n, r, std::move(bases),
                 "graphic(v=" + std::to_string(vertex_count) +
                     ",e=" + std::to_string(n) + ")");
}

Matroid Matroid::dual() const {
  const Mask full = full_mask(n_);
  std::vector<Mask> co;
  co.reserve(bases_.size());
  for (Mask b : bases_) co.push_back(full & ~b);
  std::sort(co.begin(), co.end());
  return Matroid(n_, n_ - r_, std::move(co), "dual(" + provenance_ + ")");
}

int Matroid::rank_of(Mask subset) const {
  const int cap = popcount(subset);
  int best = 0;
  for (Mask b : bases_) {
    const int c = popcount(subset & b);
    if (c > best) {
      best = c;
      if (best == r_ || best == cap) break;
    }
  }
  return best;
}

Mask Matroid::closure(Mask subset) const {
  const int base_rank = rank_of(subset);
  Mask result = subset;
  for (int e = 0; e < n_; ++e) {
    if (subset & mask_bit(e)) continue;
    if (rank_of(subset | mask_bit(e)) == base_rank) result |= mask_bit(e);
  }
  return result;
}

SubsetFamily Matroid::circuits() const {
  std::vector<Mask> found;
  for (int k = 1; k <= r_ + 1 && k <= n_; ++k) {
    for (Mask cand : k_subsets(n_, k)) {
      if (rank_of(cand) >= k) continue;  // independent
      bool minimal = true;
      for (Mask rest = cand; rest;) {
        const int e = std::countr_zero(rest);
        rest &= rest - 1;
        if (rank_of(cand ^ mask_bit(e)) < k - 1) {
          minimal = false;
          break;
        }
      }
      if (minimal) found.push_back(cand);
    }
  }
  std::sort(found.begin(), found.end());
  return SubsetFamily{SubsetFamily::Kind::circuits, std::move(found)};
}

SubsetFamily Matroid::cocircuits() const {
  if (r_ == 0) throw RankZero("cocircuits undefined for rank-0 matroid");

  // Every hyperplane is the closure of an independent (r-1)-set, and every
  // independent set is contained in a basis.
  std::set<Mask> independent;
  for (Mask b : bases_) {
    for (Mask rest = b; rest;) {
      const int e = std::countr_zero(rest);
      rest &= rest - 1;
      independent.insert(b ^ mask_bit(e));
    }
  }
  std::set<Mask> hyperplanes;
  for (Mask s : independent) hyperplanes.insert(closure(s));

  const Mask full = full_mask(n_);
  std::vector<Mask> cocircs;
  cocircs.reserve(hyperplanes.size());
  for (Mask h : hyperplanes) cocircs.push_back(full & ~h);
  std::sort(cocircs.begin(), cocircs.end());

  // Contract: cocircuits coincide with the circuits of the dual.
  SubsetFamily via_dual = dual().circuits();
  if (via_dual.members != cocircs) {
    throw EngineMismatch("cocircuit enumeration disagrees with dual circuits");
  }
  return SubsetFamily{SubsetFamily::Kind::cocircuits, std::move(cocircs)};
}

std::pair<Mask, Mask> Matroid::loops_and_coloops() const {
  Mask in_some = 0;
  Mask in_all = full_mask(n_);
  for (Mask b : bases_) {
    in_some |= b;
    in_all &= b;
  }
  return {full_mask(n_) & ~in_some, in_all};
}

bool Matroid::is_u12_direct_sum() const {
  if (n_ != 2 * r_) return false;
  auto [lo, co] = loops_and_coloops();
  if (lo || co) return false;
  const SubsetFamily c = circuits();
  Mask covered = 0;
  for (Mask m : c.members) {
    if (popcount(m) != 2) return false;
    if (m & covered) return false;  // pairs must be disjoint
    covered |= m;
  }
  return covered == full_mask(n_);
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  check_ground_size(a.n() + b.n());
  std::vector<Mask> bases;
  bases.reserve(a.bases().size() * b.bases().size());
  for (Mask bb : b.bases()) {
    const Mask shifted = bb << a.n();
    for (Mask ba : a.bases()) bases.push_back(ba | shifted);
  }
  std::sort(bases.begin(), bases.end());
  return Matroid(a.n() + b.n(), a.rank() + b.rank(), std::move(bases),
                 "sum(" + a.provenance() + "," + b.provenance() + ")");
}

Matroid add_loops(const Matroid& m, int k) {
  if (k < 0) throw BadRange("cannot add a negative number of loops");
  check_ground_size(m.n() + k);
  if (k == 0) return m;
  return Matroid(m.n() + k, m.rank(), m.bases(),
                 m.provenance() + "+" + std::to_string(k) + "loops");
}

}  // namespace mwlab
