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

#ifndef MWLAB_MATROID_HPP
#define MWLAB_MATROID_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mwlab/errors.hpp"

namespace mwlab {

/// Subset of a ground set of at most 63 elements, one bit per element.
using Mask = std::uint64_t;

inline Mask mask_bit(int e) { return Mask{1} << e; }
inline Mask full_mask(int n) { return n == 0 ? 0 : (Mask{1} << n) - 1; }
inline int popcount(Mask m) { return std::popcount(m); }

/// All k-subsets of {0..n-1} in ascending bitmask order.
std::vector<Mask> k_subsets(int n, int k);

/// A family of subsets of a common ground set (circuits, cocircuits, ...).
struct SubsetFamily {
  enum class Kind { circuits, cocircuits, loops, coloops, flats };
  Kind kind;
  std::vector<Mask> members;  // ascending bitmask order

  int min_size() const;  // smallest member cardinality; -1 if empty
};

/// An immutable matroid given by its explicit basis collection.
///
/// Bases are stored sorted ascending by bitmask value with no duplicates;
/// every basis has exactly rank() bits.  All query operations are pure, so
/// values can be shared freely across threads.
class Matroid {
 public:
  /// Validating constructor: checks non-emptiness, uniform cardinality and
  /// the basis-exchange axiom.  Duplicate entries are collapsed.
  static Matroid from_bases(int n, std::vector<Mask> basis_list,
                            std::string provenance = "explicit");

  /// U_{r,n}: every r-subset of an n-set is a basis.
  static Matroid uniform(int r, int n);

  /// Cycle matroid of a multigraph.  Elements are edge indices in input
  /// order; bases are the maximal spanning forests.  Self-edges become
  /// loops, parallel edges are kept as distinct elements.
  static Matroid graphic(int vertex_count,
                         const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  int rank() const { return r_; }
  const std::vector<Mask>& bases() const { return bases_; }
  const std::string& provenance() const { return provenance_; }

  /// Bases of the dual are the complements of bases.
  Matroid dual() const;

  /// Rank of a subset: max |A ∩ B| over bases B.
  int rank_of(Mask subset) const;

  /// {e : rank(A ∪ {e}) = rank(A)}.  Idempotent and extensive.
  Mask closure(Mask subset) const;

  /// Minimal dependent sets, sizes 1..rank+1.
  SubsetFamily circuits() const;

  /// Complements of hyperplanes (flats of rank r-1).  Cross-checked against
  /// circuits of the dual; a disagreement raises EngineMismatch.
  /// Undefined when rank() == 0 (throws RankZero).
  SubsetFamily cocircuits() const;

  /// Loops are in no basis, coloops (isthmuses) in every basis.
  std::pair<Mask, Mask> loops_and_coloops() const;
  Mask loops() const { return loops_and_coloops().first; }
  Mask coloops() const { return loops_and_coloops().second; }

  /// True iff the matroid is a direct sum of copies of U_{1,2}: n = 2r, no
  /// loops or coloops, and the circuits are n/2 disjoint 2-element sets
  /// covering the ground set.  The empty matroid counts (zero copies).
  bool is_u12_direct_sum() const;

  bool operator==(const Matroid& other) const {
    return n_ == other.n_ && bases_ == other.bases_;
  }

 private:
  friend Matroid direct_sum(const Matroid&, const Matroid&);
  friend Matroid add_loops(const Matroid&, int);

  // Trusted constructor: bases must already be sorted, deduplicated and
  // exchange-valid.
  Matroid(int n, int r, std::vector<Mask> bases, std::string provenance)
      : n_(n), r_(r), bases_(std::move(bases)), provenance_(std::move(provenance)) {}

  int n_;
  int r_;
  std::vector<Mask> bases_;
  std::string provenance_;
};

/// Disjoint union; the second summand's elements are relabeled to
/// n1..n1+n2-1 and the basis collections combine as a cross product.
Matroid direct_sum(const Matroid& a, const Matroid& b);

/// Direct sum with k rank-0 singletons appended after the existing elements.
Matroid add_loops(const Matroid& m, int k);

}  // namespace mwlab

#endif  // MWLAB_MATROID_HPP
