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

#include <doctest.h>

#include "mwlab/catalog_io.hpp"
#include "mwlab/mw.hpp"

using namespace mwlab;

TEST_CASE("matroid file parsing") {
  const std::string u12 = "MATROID 1\nn 2\nr 1\nbases 2\n0\n1\n";
  const Matroid m = parse_matroid(u12);
  CHECK(m.n() == 2);
  CHECK(m.rank() == 1);
  CHECK(m == Matroid::uniform(1, 2));
  CHECK(write_matroid(m) == u12);

  // declared r disagrees with basis size
  CHECK_THROWS_AS(parse_matroid("MATROID 1\nn 2\nr 2\nbases 2\n0\n1\n"), CountMismatch);
  // declared count disagrees with the number of lines
  CHECK_THROWS_AS(parse_matroid("MATROID 1\nn 2\nr 1\nbases 3\n0\n1\n"), CountMismatch);
  // exchange axiom failure surfaces as ValidationError
  CHECK_THROWS_AS(parse_matroid("MATROID 1\nn 4\nr 2\nbases 2\n0 1\n2 3\n"), ValidationError);

  // syntax errors carry 1-based line numbers
  try {
    parse_matroid("MATROID 1\nn 2\nr 1\nbases 2\n0\nbogus\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 6);
  }
  try {
    parse_matroid("MATROID 2\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 1);
  }
  CHECK_THROWS_AS(parse_matroid("MATROID 1\nn 3\nr 2\nbases 1\n1 0\n"), SyntaxError);
  CHECK_THROWS_AS(parse_matroid("MATROID 1\nn 3\nr 2\nbases 1\n0 7\n"), SyntaxError);
  // element indices above the bitmask width are rejected before any mask math
  CHECK_THROWS_AS(parse_matroid("MATROID 1\nn 100\nr 1\nbases 1\n70\n"), ValidationError);
  CHECK_THROWS_AS(parse_matroid("MATROID 1\nn -2\nr 0\nbases 1\n\n"), ValidationError);
}

TEST_CASE("matroid file round-trips") {
  const std::vector<Matroid> sample = {
      Matroid::uniform(2, 4),
      Matroid::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
      direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 2)),
      add_loops(Matroid::uniform(2, 4), 1),
      Matroid::uniform(0, 3),
      Matroid::graphic(1, {}),
  };
  for (const Matroid& m : sample) {
    const std::string text = write_matroid(m);
    const Matroid back = parse_matroid(text);
    CHECK(back == m);
    CHECK(back.rank() == m.rank());
    CHECK(write_matroid(back) == text);  // byte-identical
  }
}

TEST_CASE("graph file parsing") {
  const std::string k4 =
      "GRAPH 1\nvertices 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
  const Matroid m = parse_graph(k4);
  CHECK(m.n() == 6);
  CHECK(m.rank() == 3);
  CHECK(write_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}) == k4);

  const Matroid loop = parse_graph("GRAPH 1\nvertices 1\n0 0\n");
  CHECK(loop.loops() == mask_bit(0));

  const Matroid empty = parse_graph("GRAPH 1\nvertices 3\n");
  CHECK(empty.n() == 0);
  CHECK(empty.rank() == 0);

  CHECK_THROWS_AS(parse_graph("GRAPH 1\nvertices 2\n0 5\n"), BadEndpoint);
  CHECK_THROWS_AS(parse_graph("GRAPH 1\nvertices x\n"), SyntaxError);
  CHECK_THROWS_AS(parse_graph("HELLO\n"), SyntaxError);
  try {
    parse_graph("GRAPH 1\nvertices 2\n0 1 2\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("family spec parsing") {
  const std::string text =
      "SWEEP 1\n"
      "cap_n 8\n"
      "cap_bases 500\n"
      "# comment line\n"
      "uniform 1 2 2 4\n"
      "graphic_builtin K4\n"
      "u12_sums 3\n"
      "dualize 1\n"
      "sum_pairs 0\n"
      "add_loops upto_rank\n";
  const FamilySpec spec = parse_family_spec(text);
  CHECK(spec.cap_n == 8);
  CHECK(spec.cap_bases == 500);
  CHECK(spec.clauses.size() == 3);
  CHECK(spec.dualize);
  CHECK_FALSE(spec.sum_pairs);
  CHECK(spec.loops_upto_rank);
  CHECK_FALSE(spec.inject_fake_violation);

  // canonical serialization round-trips
  const std::string canon = write_family_spec(spec);
  const FamilySpec again = parse_family_spec(canon);
  CHECK(write_family_spec(again) == canon);

  CHECK_THROWS_AS(parse_family_spec("SWEEP 1\nbogus 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_family_spec("nope\n"), ConfigError);
  CHECK_THROWS_AS(parse_family_spec("SWEEP 1\nuniform 2 1 2 4\n"), ConfigError);
  CHECK_THROWS_AS(parse_family_spec("SWEEP 1\nuniform 1 2\n"), ConfigError);

  // the default corpus spec parses back to the same canonical text
  const FamilySpec def = default_family_spec();
  CHECK(write_family_spec(parse_family_spec(def.source_text)) == def.source_text);
}

TEST_CASE("digest and sinks") {
  CHECK(digest("abc") == digest("abc"));
  CHECK(digest("abc") != digest("abd"));
  CHECK(digest("").size() == 16);

  CHECK_THROWS_AS(write_text("x\n", "/nonexistent_dir_mwlab/report.txt"), SinkError);
}
