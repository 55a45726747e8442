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

#ifndef MWLAB_BOUNDS_HPP
#define MWLAB_BOUNDS_HPP

#include <array>
#include <string>
#include <vector>

#include "mwlab/arith.hpp"
#include "mwlab/matroid.hpp"

namespace mwlab {

/// f(n, r) = 2^(n-r) - 2*C(n, r), exact.
struct GapValue {
  int n = 0;
  int r = 0;
  Int value;
};

/// One audited inequality (or identity).  Exact steps carry both sides as
/// big integers; transcendental steps carry high-precision decimal renderings
/// in lhs_text / rhs_text instead.
struct ChainStep {
  std::string label;
  Int lhs;
  Int rhs;
  bool exact = true;
  std::string lhs_text;
  std::string rhs_text;
  bool holds = false;
};

/// Ordered audit of a proof chain.  `overall` is the conjunction of the step
/// flags; a failing intermediate step with a holding final step is a legal
/// and interesting outcome, so the two are never conflated by callers.
struct ChainReport {
  std::string name;
  std::vector<ChainStep> steps;
  bool overall = false;

  bool step_holds(const std::string& label) const;
};

struct LogInequalityCheck {
  double x = 0;
  double lhs = 0;  // (log2 x)(log2 log2 x)
  double rhs = 0;  // log2 x + log2 log2 x + log2 log2 log2 x + 1
  bool holds = false;
};

struct BinomialIdentityCheck {
  int r = 0;
  Int lhs;  // C(2r-2,r-1)*2^0 + C(2r-3,r-2)*2^1 + ... + C(r,1)*2^(r-2) + 2^(r-1)
  Int rhs;  // 2^(2r-2)
  bool holds = false;
};

/// f(n, r) = 2^(n-r) - 2*C(n, r).  Requires 0 <= r <= n (BadRange otherwise).
GapValue gap_f(int n, int r);

/// ceil(r * (log2 r + log2 log2 r + log2 log2 log2 r)) for r >= 4.
///
/// Evaluated in double precision first; if the result lands within 1e-9 of
/// an integer it is recomputed at 50 decimal digits, and a value within
/// 1e-30 of an integer there is treated as that integer before the ceiling
/// is taken (the expression is exact at powers such as r = 4 or 16).
long long density_threshold(int r);

/// Least n >= r with gap_f(n, r) >= 0, found by ascending scan.
long long minimal_nr(int r);

/// Forward difference of f in n: verifies, exactly,
///   f(n+1,r) - f(n,r) == 2^(n-r) - 2*C(n,r-1)   and   f(n+1,r) > 2*f(n,r).
/// Requires n > 2r (HypothesisUnmet otherwise).
ChainReport check_forward_difference(int n, int r);

/// (log2 x)(log2 log2 x) >= log2 x + log2 log2 x + log2 log2 log2 x + 1,
/// compared with 1e-12 slack.  The claim is for x >= 17; evaluation is
/// permitted for any x > 2 (DomainError below that).
LogInequalityCheck check_log_inequality(double x);

/// Audits the density proof chain at (n, r), for r >= 5 and
/// n >= density_threshold(r) (HypothesisUnmet otherwise).  Transcendental
/// steps are checked at 50-digit precision; integer steps exactly, with
/// divisions cleared by cross-multiplication:
///   n >= r(log2 r + log2log2 r + log2log2log2 r)
///   r*log2(r)*log2(log2 r) >= ceil(...)  [the "round up" step via the log
///                                         inequality; fails below r = 16 --
///                                         reported, not judged]
///   2^n >= n^r                           [i.e. 2^(n-r) >= n^r / 2^r]
///   r!  >= 2^(r+1)
///   n^r >= r! * C(n,r)
///   n^r >= 2^(r+1) * C(n,r)              [i.e. n^r / 2^r >= 2*C(n,r)]
///   2^(n-r) >= 2*C(n,r)
ChainReport check_density_chain(int n, int r);

/// C(2r-2,r-1) + C(2r-3,r-2)*2 + ... + C(r,1)*2^(r-2) + 2^(r-1) == 2^(2r-2).
BinomialIdentityCheck check_binomial_identity(int r);

/// Audits, exactly, for a matroid whose cocircuits all have >= r+1 elements
/// (HypothesisUnmet otherwise; requires r >= 1):
///   (a) n >= 2r
///   (b) T(M;0,2) >= 2^(n-1)
///   (c) 2^(n-1) >= 2*C(n,r)
///   (d) 2*C(n,r) >= 2*T(M;1,1)
///   (e) T(M;2,0) + T(M;0,2) >= 2*T(M;1,1)
ChainReport check_cocircuit_chain(const Matroid& m);

/// Audits, exactly, for an isthmus-free matroid with >= r-1 loops
/// (HypothesisUnmet otherwise):
///   (a) T(M;0,2) >= 2^(n-r)
///   (b) 2^(n-r) >= 2*C(n-r+1, r)
///   (c) 2*C(n-r+1, r) >= 2*T(M;1,1)
///   (d) T(M;2,0) + T(M;0,2) >= 2*T(M;1,1)
ChainReport check_loops_chain(const Matroid& m);

/// Published n_r reference values for r = 1..16.  Reported side by side with
/// the oracle scan; never used as ground truth in an assertion.
const std::array<long long, 16>& reference_nr_table();

}  // namespace mwlab

#endif  // MWLAB_BOUNDS_HPP
