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

#ifndef MWLAB_MW_HPP
#define MWLAB_MW_HPP

#include <optional>
#include <string>
#include <vector>

#include "mwlab/arith.hpp"
#include "mwlab/bounds.hpp"
#include "mwlab/catalog_io.hpp"
#include "mwlab/matroid.hpp"

namespace mwlab {

/// The three evaluations and the inequality margin
/// T(2,0) + T(0,2) - 2*T(1,1), all exact.
struct MWReport {
  int n = 0;
  int r = 0;
  Int t20;
  Int t02;
  Int t11;
  Int margin;
  bool equality = false;       // margin == 0
  bool u12_sum = false;        // structural direct-sum-of-U12 detection
  bool hypothesis_ok = false;  // loopless and coloopless
};

struct HypothesisProfile {
  bool loopless = false;
  bool coloopless = false;
  bool density_ok = false;    // isthmus-free, r >= 4 and n >= density_threshold(r)
  bool cocircuit_ok = false;  // r >= 1 and min cocircuit size >= r+1
  bool loops_ok = false;      // isthmus-free with >= r-1 loops
  int min_cocircuit_size = 0; // 0 when rank is 0 (undefined)
  int loop_count = 0;
};

/// Outcome of one sufficient-condition result on one matroid.  The chain is
/// absent when the hypothesis fails, and for the density result also when
/// r = 4 (its proof chain is audited only for r >= 5; the conclusion is
/// still evaluated exactly).
struct TheoremAudit {
  bool applicable = false;
  bool conclusion_holds = false;
  std::optional<ChainReport> chain;
};

struct AuditReport {
  MWReport mw;
  HypothesisProfile profile;
  TheoremAudit density;    // conclusion: T(0,2) >= 2*T(1,1)
  TheoremAudit cocircuit;  // conclusion: margin >= 0
  TheoremAudit loops;      // conclusion: margin >= 0
};

/// Evaluates the inequality on one matroid.  t20 is cross-checked against
/// nbc_count (loop-free case), t02 against the dual's T(2,0), and t11
/// against the basis count; any disagreement raises EngineMismatch.
MWReport mw_check(const Matroid& m);

HypothesisProfile hypothesis_profile(const Matroid& m);

/// Runs every sufficient-condition audit whose hypothesis holds.
AuditReport audit(const Matroid& m);

// -- corpus sweeps ------------------------------------------------------------

struct Instance {
  std::string id;
  Matroid matroid;
};

struct Violation {
  std::string id;
  Int margin;
  std::string matroid_text;  // full reproduction data in MATROID format
};

struct TheoremTally {
  long applicable = 0;
  long conclusion_holds = 0;
  long all_steps_hold = 0;  // chains run to completion with every step true
  std::vector<std::string> conclusion_fail_ids;
};

struct SweepSummary {
  std::string config_digest;
  long instances = 0;
  long skipped_by_caps = 0;
  long hypothesis_ok_instances = 0;
  std::vector<Violation> violations;  // margin < 0 under the conjecture hypothesis
  long equality_cases = 0;
  std::vector<std::string> equality_ids;
  long u12_mismatches = 0;  // equality and structural detection disagree
  std::vector<std::string> u12_mismatch_ids;
  TheoremTally density;
  TheoremTally cocircuit;
  TheoremTally loops;
  bool has_min_margin = false;
  Int min_margin;  // over hypothesis-satisfying instances
  bool injected = false;
};

/// Expands a family specification into a deterministic instance list:
/// declared families first (in clause order), then duals, then pairwise
/// direct sums of the declared families, then loop extensions of the
/// declared families and their duals.  Caps drop instances before any
/// polynomial work; the dropped count is reported.
std::vector<Instance> expand_family(const FamilySpec& spec, long* skipped_by_caps = nullptr);

/// Built-in corpus: uniform matroids with 1 <= r < n <= 9, every connected
/// simple graph on at most 5 vertices, duals, pairwise direct sums, and loop
/// extensions up to r loops, under cap_n = 10.
FamilySpec default_family_spec();

/// Checks every instance and aggregates; identical summaries regardless of
/// the worker count.
SweepSummary sweep(const FamilySpec& spec, int jobs = 1);

/// Exit status a front end should report for a finished sweep: 2 when the
/// summary contains a reportable violation, 0 otherwise.
int sweep_exit_code(const SweepSummary& summary);

/// Connected simple graphs on 1..max_vertices vertices, one representative
/// per isomorphism class, as (vertex_count, edges) pairs in a deterministic
/// order.  Dedup is by minimum over all vertex permutations, so
/// max_vertices <= 6.
std::vector<std::pair<int, std::vector<std::pair<int, int>>>> connected_graphs_upto(
    int max_vertices);

/// Built-in named graphs: K2..K6, C2..C9 (cycles), W3..W6 (wheels),
/// P2..P6 (paths).  Unknown names raise ConfigError.
std::pair<int, std::vector<std::pair<int, int>>> builtin_graph(const std::string& name);

}  // namespace mwlab

#endif  // MWLAB_MW_HPP
