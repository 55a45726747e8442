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

#ifndef MWLAB_CATALOG_IO_HPP
#define MWLAB_CATALOG_IO_HPP

#include <string>
#include <vector>

#include "mwlab/matroid.hpp"

namespace mwlab {

// -- MATROID files ------------------------------------------------------------
//
//   MATROID 1
//   n 4
//   r 2
//   bases 6
//   0 1
//   ...
//
// One basis per line, strictly increasing 0-based indices separated by single
// spaces.  The writer lists bases in ascending bitmask order; the parser
// accepts any order, so writer-produced files round-trip byte-identically.

Matroid parse_matroid(const std::string& text);
std::string write_matroid(const Matroid& m);

// -- GRAPH files --------------------------------------------------------------
//
//   GRAPH 1
//   vertices 4
//   0 1
//   ...
//
// One edge per line; self-edges and repeats allowed; edge index = line order.

Matroid parse_graph(const std::string& text);

/// Serializes a vertex count and edge list in the GRAPH format.
std::string write_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

// -- sweep configuration ------------------------------------------------------

struct FamilyClause {
  enum class Kind { uniform, graphic_builtin, graphic_file, matroid_file, u12_sums };
  Kind kind;
  int r_min = 0, r_max = 0, n_min = 0, n_max = 0;  // uniform
  std::string name;                                // builtin name / path / glob
  int count = 0;                                   // u12_sums upper k
};

struct FamilySpec {
  std::vector<FamilyClause> clauses;
  bool dualize = false;
  bool sum_pairs = false;
  bool loops_upto_rank = false;
  int loops_fixed = 0;  // used when !loops_upto_rank; 0 disables
  int cap_n = kDefaultGroundSetCapForSweep;
  long long cap_bases = 100000;
  bool inject_fake_violation = false;  // test hook for the exit-code contract
  std::string source_text;             // canonical text this spec was parsed from

  static constexpr int kDefaultGroundSetCapForSweep = 10;
};

/// Parses the line-oriented SWEEP format (see README).  ConfigError on any
/// unknown clause or malformed argument.
FamilySpec parse_family_spec(const std::string& text);

/// Canonical serialization; parse_family_spec(write_family_spec(s)) == s.
std::string write_family_spec(const FamilySpec& spec);

// -- report sinks -------------------------------------------------------------

/// Writes text to a file path, or to stdout when path is empty.
/// Throws SinkError on failure.
void write_text(const std::string& text, const std::string& path);

/// FNV-1a 64-bit digest as 16 hex characters; used to stamp reports with the
/// configuration they were produced from.
std::string digest(const std::string& text);

}  // namespace mwlab

#endif  // MWLAB_CATALOG_IO_HPP
