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

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "mwlab/mw.hpp"
#include "mwlab/reports.hpp"

using namespace mwlab;

namespace {

const std::vector<std::pair<int, int>> kK4Edges = {{0, 1}, {0, 2}, {0, 3},
                                                   {1, 2}, {1, 3}, {2, 3}};

}  // namespace

TEST_CASE("mw_check") {
  const MWReport s2 = mw_check(direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 2)));
  CHECK(s2.t20 == 4);
  CHECK(s2.t02 == 4);
  CHECK(s2.t11 == 4);
  CHECK(s2.margin == 0);
  CHECK(s2.equality);
  CHECK(s2.u12_sum);
  CHECK(s2.hypothesis_ok);

  const MWReport u24 = mw_check(Matroid::uniform(2, 4));
  CHECK(u24.t20 == 8);
  CHECK(u24.t02 == 8);
  CHECK(u24.t11 == 6);
  CHECK(u24.margin == 4);
  CHECK_FALSE(u24.equality);
  CHECK_FALSE(u24.u12_sum);

  const MWReport k4 = mw_check(Matroid::graphic(4, kK4Edges));
  CHECK(k4.t20 == 24);
  CHECK(k4.t02 == 24);
  CHECK(k4.t11 == 16);
  CHECK(k4.margin == 16);

  // loopy input is reported, not rejected
  const MWReport loopy = mw_check(add_loops(Matroid::uniform(2, 4), 1));
  CHECK(loopy.t20 == 0);
  CHECK_FALSE(loopy.hypothesis_ok);

  // empty matroid: T = 1, margin 0, and the vacuous sum-of-U12 structure
  const MWReport empty = mw_check(Matroid::graphic(1, {}));
  CHECK(empty.margin == 0);
  CHECK(empty.equality);
  CHECK(empty.u12_sum);
  CHECK(empty.hypothesis_ok);
}

TEST_CASE("hypothesis_profile") {
  const HypothesisProfile u24 = hypothesis_profile(Matroid::uniform(2, 4));
  CHECK(u24.loopless);
  CHECK(u24.coloopless);
  CHECK(u24.min_cocircuit_size == 3);
  CHECK(u24.cocircuit_ok);  // 3 = r+1
  CHECK_FALSE(u24.density_ok);
  CHECK_FALSE(u24.loops_ok);

  const HypothesisProfile loopy = hypothesis_profile(add_loops(Matroid::uniform(2, 4), 1));
  CHECK(loopy.loops_ok);  // 1 >= r-1 = 1, isthmus-free
  CHECK_FALSE(loopy.loopless);
  CHECK(loopy.loop_count == 1);

  // density flag is pure threshold arithmetic: 12 >= threshold(4) = 12
  const HypothesisProfile u412 = hypothesis_profile(Matroid::uniform(4, 12));
  CHECK(u412.density_ok);
  CHECK_FALSE(hypothesis_profile(Matroid::uniform(4, 11)).density_ok);
  CHECK_FALSE(hypothesis_profile(Matroid::uniform(3, 9)).density_ok);  // r < 4

  // K4: min cocircuit 3 < r+1 = 4
  const HypothesisProfile k4 = hypothesis_profile(Matroid::graphic(4, kK4Edges));
  CHECK(k4.min_cocircuit_size == 3);
  CHECK_FALSE(k4.cocircuit_ok);

  // rank 0: no cocircuits to measure
  const HypothesisProfile rank0 = hypothesis_profile(Matroid::uniform(0, 2));
  CHECK(rank0.min_cocircuit_size == 0);
  CHECK_FALSE(rank0.cocircuit_ok);
}

TEST_CASE("audit") {
  const AuditReport u24 = audit(Matroid::uniform(2, 4));
  CHECK(u24.cocircuit.applicable);
  CHECK(u24.cocircuit.conclusion_holds);  // 16 >= 12
  REQUIRE(u24.cocircuit.chain.has_value());
  CHECK_FALSE(u24.cocircuit.chain->overall);  // step (c) fails
  CHECK_FALSE(u24.density.applicable);
  CHECK_FALSE(u24.loops.applicable);

  // U_{1,2}: both small-parameter results apply
  const AuditReport u12 = audit(Matroid::uniform(1, 2));
  CHECK(u12.cocircuit.applicable);
  CHECK(u12.loops.applicable);
  CHECK(u12.cocircuit.conclusion_holds);
  CHECK(u12.loops.conclusion_holds);
  CHECK_FALSE(u12.density.applicable);

  // density applies at r = 4 with the conclusion evaluated exactly, but the
  // proof chain is only audited from r = 5 up
  const AuditReport u412 = audit(Matroid::uniform(4, 12));
  CHECK(u412.density.applicable);
  CHECK(u412.density.conclusion_holds);  // T(0,2) >= 2*T(1,1), exact
  CHECK_FALSE(u412.density.chain.has_value());

  // the corpus counterexample: hypothesis holds, conclusion fails
  const AuditReport tri = audit(add_loops(Matroid::uniform(2, 3), 1));
  CHECK(tri.loops.applicable);
  CHECK_FALSE(tri.loops.conclusion_holds);
  CHECK(tri.mw.margin == -2);
  CHECK_FALSE(tri.mw.hypothesis_ok);  // the inequality hypothesis excludes loopy matroids
}

TEST_CASE("audit of a dense uniform matroid") {
  // U_{4,16}: n = 16 >= threshold(4) = 12, so the density result applies.
  const Matroid m = Matroid::uniform(4, 16);
  const AuditReport rep = audit(m);
  CHECK(rep.density.applicable);
  CHECK(rep.density.conclusion_holds);
  CHECK_FALSE(rep.density.chain.has_value());  // r = 4 < 5

  // T(0,2) from the pure-y coefficient structure: coefficient of y^(12-k)
  // is C(3+k, k), summed against powers of two.
  Int expected = 0;
  for (int k = 0; k <= 11; ++k) expected += binomial(3 + k, k) * pow2(12 - k);
  CHECK(rep.mw.t02 == expected);
  CHECK(rep.mw.t02 >= 2 * rep.mw.t11);
}

TEST_CASE("connected graph generator") {
  const auto graphs = connected_graphs_upto(5);
  int by_v[6] = {0, 0, 0, 0, 0, 0};
  for (const auto& [v, edges] : graphs) ++by_v[v];
  CHECK(by_v[1] == 1);
  CHECK(by_v[2] == 1);
  CHECK(by_v[3] == 2);
  CHECK(by_v[4] == 6);
  CHECK(by_v[5] == 21);
  CHECK(graphs.size() == 31);
}

TEST_CASE("builtin graphs") {
  CHECK(Matroid::graphic(builtin_graph("K4").first, builtin_graph("K4").second).bases().size() == 16);
  CHECK(Matroid::graphic(builtin_graph("C5").first, builtin_graph("C5").second) ==
        Matroid::uniform(4, 5));
  CHECK(Matroid::graphic(builtin_graph("C2").first, builtin_graph("C2").second) ==
        Matroid::uniform(1, 2));
  const auto w3 = builtin_graph("W3");
  CHECK(Matroid::graphic(w3.first, w3.second).bases().size() == 16);  // W3 = K4
  CHECK(builtin_graph("P4").second.size() == 3);
  CHECK_THROWS_AS(builtin_graph("Q7"), ConfigError);
  CHECK_THROWS_AS(builtin_graph("K9"), ConfigError);
}

TEST_CASE("family expansion") {
  FamilySpec spec;
  spec.cap_n = 6;
  spec.cap_bases = 1000;
  FamilyClause uni;
  uni.kind = FamilyClause::Kind::uniform;
  uni.r_min = 1;
  uni.r_max = 2;
  uni.n_min = 2;
  uni.n_max = 4;
  spec.clauses.push_back(uni);
  spec.dualize = true;
  spec.sum_pairs = true;
  spec.loops_upto_rank = true;
  spec.source_text = write_family_spec(spec);

  long skipped = 0;
  const auto instances = expand_family(spec, &skipped);
  // base: U(1,2) U(1,3) U(1,4) U(2,2) U(2,3) U(2,4) = 6; duals 6; pairs with
  // n1+n2 <= 6; loop extensions on base+duals
  std::set<std::string> ids;
  for (const auto& inst : instances) ids.insert(inst.id);
  CHECK(ids.size() == instances.size());  // unique ids
  CHECK(ids.count("uniform_r1_n2") == 1);
  CHECK(ids.count("dual.uniform_r1_n2") == 1);
  CHECK(ids.count("sum.uniform_r1_n2+uniform_r1_n2") == 1);
  CHECK(ids.count("loops1.uniform_r1_n2") == 1);

  // same spec expands identically
  const auto again = expand_family(spec);
  REQUIRE(again.size() == instances.size());
  for (size_t i = 0; i < again.size(); ++i) {
    CHECK(again[i].id == instances[i].id);
    CHECK(again[i].matroid == instances[i].matroid);
  }

  // caps skip, not fail
  FamilySpec tight = spec;
  tight.cap_n = 3;
  long skipped_tight = 0;
  const auto small = expand_family(tight, &skipped_tight);
  CHECK(skipped_tight > 0);
  CHECK(small.size() < instances.size());
}

TEST_CASE("file-backed family clauses") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "mwlab_family_files";
  fs::create_directories(dir);
  {
    std::ofstream a(dir / "a.matroid");
    a << write_matroid(Matroid::uniform(2, 4));
    std::ofstream b(dir / "b.matroid");
    b << write_matroid(Matroid::uniform(1, 3));
    std::ofstream g(dir / "tri.graph");
    g << write_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  }

  FamilySpec spec;
  spec.cap_n = 8;
  FamilyClause files;
  files.kind = FamilyClause::Kind::matroid_file;
  files.name = (dir / "*.matroid").string();
  spec.clauses.push_back(files);
  FamilyClause graph;
  graph.kind = FamilyClause::Kind::graphic_file;
  graph.name = (dir / "tri.graph").string();
  spec.clauses.push_back(graph);
  spec.source_text = write_family_spec(spec);

  const auto instances = expand_family(spec);
  REQUIRE(instances.size() == 3);
  // glob matches sort by path, so a.matroid precedes b.matroid
  CHECK(instances[0].matroid == Matroid::uniform(2, 4));
  CHECK(instances[1].matroid == Matroid::uniform(1, 3));
  CHECK(instances[2].matroid == Matroid::uniform(2, 3));

  // unreadable and invalid files surface as ConfigError
  FamilySpec missing = spec;
  missing.clauses[0].name = (dir / "nope.matroid").string();
  CHECK_THROWS_AS(expand_family(missing), ConfigError);
  {
    std::ofstream bad(dir / "bad.matroid");
    bad << "MATROID 1\nn 4\nr 2\nbases 2\n0 1\n2 3\n";
  }
  CHECK_THROWS_AS(expand_family(spec), ConfigError);  // glob now picks up bad.matroid
  fs::remove(dir / "bad.matroid");
}

TEST_CASE("u12_sums family matches the equality profile") {
  FamilySpec spec;
  spec.cap_n = 12;
  FamilyClause c;
  c.kind = FamilyClause::Kind::u12_sums;
  c.count = 5;
  spec.clauses.push_back(c);
  spec.source_text = write_family_spec(spec);

  const SweepSummary summary = sweep(spec, 1);
  CHECK(summary.instances == 5);
  CHECK(summary.equality_cases == 5);
  CHECK(summary.violations.empty());
  CHECK(summary.u12_mismatches == 0);
  CHECK(summary.has_min_margin);
  CHECK(summary.min_margin == 0);
  CHECK(sweep_exit_code(summary) == 0);
}

TEST_CASE("uniform-family sweep: equality exactly at U_{1,2}") {
  FamilySpec spec;
  spec.cap_n = 9;
  FamilyClause uni;
  uni.kind = FamilyClause::Kind::uniform;
  uni.r_min = 1;
  uni.r_max = 8;
  uni.n_min = 2;
  uni.n_max = 9;
  spec.clauses.push_back(uni);
  spec.source_text = write_family_spec(spec);

  const SweepSummary summary = sweep(spec, 2);
  CHECK(summary.violations.empty());
  CHECK(summary.u12_mismatches == 0);
  REQUIRE(summary.equality_ids.size() == 1);
  CHECK(summary.equality_ids[0] == "uniform_r1_n2");
  CHECK(summary.has_min_margin);
  CHECK(summary.min_margin == 0);
  CHECK(sweep_exit_code(summary) == 0);
}

TEST_CASE("sweep determinism across worker counts") {
  FamilySpec spec;
  spec.cap_n = 7;
  spec.cap_bases = 1000;
  FamilyClause uni;
  uni.kind = FamilyClause::Kind::uniform;
  uni.r_min = 1;
  uni.r_max = 3;
  uni.n_min = 2;
  uni.n_max = 6;
  spec.clauses.push_back(uni);
  FamilyClause g;
  g.kind = FamilyClause::Kind::graphic_builtin;
  g.name = "K4";
  spec.clauses.push_back(g);
  spec.dualize = true;
  spec.sum_pairs = true;
  spec.loops_upto_rank = true;
  spec.source_text = write_family_spec(spec);

  const std::string one = render_sweep_summary(sweep(spec, 1));
  const std::string four = render_sweep_summary(sweep(spec, 4));
  const std::string eight = render_sweep_summary(sweep(spec, 8));
  CHECK(one == four);
  CHECK(one == eight);
}

TEST_CASE("injected violation drives the exit contract") {
  FamilySpec spec;
  spec.cap_n = 4;
  FamilyClause uni;
  uni.kind = FamilyClause::Kind::uniform;
  uni.r_min = 1;
  uni.r_max = 1;
  uni.n_min = 2;
  uni.n_max = 3;
  spec.clauses.push_back(uni);
  spec.inject_fake_violation = true;
  spec.source_text = write_family_spec(spec);

  const SweepSummary summary = sweep(spec, 1);
  REQUIRE(summary.violations.size() == 1);
  CHECK(summary.violations[0].id == "injected.synthetic");
  CHECK(summary.injected);
  CHECK(sweep_exit_code(summary) == 2);

  const std::string text = render_sweep_summary(summary);
  CHECK(text.find("violations 1") != std::string::npos);
  CHECK(text.find("injected 1") != std::string::npos);
}

TEST_CASE("report rendering") {
  const Matroid u24 = Matroid::uniform(2, 4);
  const std::string text = render_mw_report(mw_check(u24), hypothesis_profile(u24), "deadbeef");
  CHECK(text.find("t20 8\n") != std::string::npos);
  CHECK(text.find("t02 8\n") != std::string::npos);
  CHECK(text.find("t11 6\n") != std::string::npos);
  CHECK(text.find("margin 4\n") != std::string::npos);
  CHECK(text.find("config_digest deadbeef\n") != std::string::npos);
  CHECK(text.find("version ") != std::string::npos);

  // identical inputs render identical bytes
  CHECK(render_mw_report(mw_check(u24), hypothesis_profile(u24), "deadbeef") == text);

  // keys come out sorted
  std::string prev;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const std::string key = line.substr(0, line.find(' '));
    CHECK(prev <= key);
    prev = key;
  }

  // a corrupted margin cannot render
  MWReport bad = mw_check(u24);
  bad.margin = 99;
  CHECK_THROWS_AS(render_mw_report(bad, hypothesis_profile(u24), "x"), EngineMismatch);
}
