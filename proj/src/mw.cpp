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

#include "mwlab/mw.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "mwlab/tutte.hpp"

namespace mwlab {

namespace {

std::string read_file_or_config_error(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Minimal '*' wildcard match on the filename component.
bool wildcard_match(const std::string& pattern, const std::string& name) {
  size_t p = 0, s = 0, star = std::string::npos, mark = 0;
  while (s < name.size()) {
    if (p < pattern.size() && (pattern[p] == name[s])) {
      ++p;
      ++s;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = s;
    } else if (star != std::string::npos) {
      p = star + 1;
      s = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::vector<std::string> expand_glob(const std::string& pattern) {
  namespace fs = std::filesystem;
  if (pattern.find('*') == std::string::npos) return {pattern};
  const fs::path p(pattern);
  const fs::path dir = p.parent_path().empty() ? fs::path(".") : p.parent_path();
  const std::string leaf = p.filename().string();
  std::vector<std::string> matches;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (!entry.is_regular_file()) continue;
    if (wildcard_match(leaf, entry.path().filename().string())) {
      matches.push_back(entry.path().string());
    }
  }
  if (ec) throw ConfigError("cannot list '" + dir.string() + "': " + ec.message());
  std::sort(matches.begin(), matches.end());
  return matches;
}

// Canonical edge-set encoding of a simple graph on v labeled vertices: one
// bit per unordered pair in lexicographic order, minimized over all vertex
// permutations.
std::uint64_t canonical_edge_mask(int v, std::uint64_t edge_mask,
                                  const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> perm(v);
  for (int i = 0; i < v; ++i) perm[i] = i;
  std::uint64_t best = ~std::uint64_t{0};
  // pair index lookup
  std::vector<std::vector<int>> index(v, std::vector<int>(v, -1));
  for (size_t k = 0; k < pairs.size(); ++k) {
    index[pairs[k].first][pairs[k].second] = static_cast<int>(k);
    index[pairs[k].second][pairs[k].first] = static_cast<int>(k);
  }
  do {
    std::uint64_t relabeled = 0;
    for (size_t k = 0; k < pairs.size(); ++k) {
      if (edge_mask & (std::uint64_t{1} << k)) {
        relabeled |= std::uint64_t{1} << index[perm[pairs[k].first]][perm[pairs[k].second]];
      }
    }
    best = std::min(best, relabeled);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool edge_mask_connected(int v, std::uint64_t edge_mask,
                         const std::vector<std::pair<int, int>>& pairs) {
  if (v <= 1) return true;
  std::vector<int> comp(v);
  for (int i = 0; i < v; ++i) comp[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  int parts = v;
  for (size_t k = 0; k < pairs.size(); ++k) {
    if (edge_mask & (std::uint64_t{1} << k)) {
      int a = find(pairs[k].first), b = find(pairs[k].second);
      if (a != b) {
        comp[a] = b;
        --parts;
      }
    }
  }
  return parts == 1;
}

struct InstanceResult {
  AuditReport report;
  std::string matroid_text;
};

}  // namespace

MWReport mw_check(const Matroid& m) {
  const TuttePolynomial t = tutte_delcon(m);

  MWReport report;
  report.n = m.n();
  report.r = m.rank();
  report.t20 = t.evaluate(2, 0);
  report.t02 = t.evaluate(0, 2);
  report.t11 = basis_count(m);

  if (t.evaluate(1, 1) != report.t11) {
    throw EngineMismatch("T(1,1) disagrees with the basis count");
  }
  const auto [loop_set, coloop_set] = m.loops_and_coloops();
  if (loop_set == 0) {
    if (nbc_count(m, identity_order(m.n())) != report.t20) {
      throw EngineMismatch("T(2,0) disagrees with the nbc-set count");
    }
  }
  if (tutte_delcon(m.dual()).evaluate(2, 0) != report.t02) {
    throw EngineMismatch("T(0,2) disagrees with the dual's T(2,0)");
  }

  report.margin = report.t20 + report.t02 - 2 * report.t11;
  report.equality = (report.margin == 0);
  report.u12_sum = m.is_u12_direct_sum();
  report.hypothesis_ok = (loop_set == 0 && coloop_set == 0);
  return report;
}

HypothesisProfile hypothesis_profile(const Matroid& m) {
  HypothesisProfile p;
  const auto [loop_set, coloop_set] = m.loops_and_coloops();
  p.loopless = (loop_set == 0);
  p.coloopless = (coloop_set == 0);
  p.loop_count = popcount(loop_set);

  const int r = m.rank();
  // the density result is stated for isthmus-free matroids; a coloop alone
  // forces T(0,2) = 0
  p.density_ok = p.coloopless && (r >= 4) && (m.n() >= density_threshold(r));
  if (r >= 1) {
    p.min_cocircuit_size = m.cocircuits().min_size();
    p.cocircuit_ok = (p.min_cocircuit_size >= r + 1);
  }
  p.loops_ok = p.coloopless && (p.loop_count >= r - 1);
  return p;
}

AuditReport audit(const Matroid& m) {
  AuditReport out;
  out.mw = mw_check(m);
  out.profile = hypothesis_profile(m);

  out.density.applicable = out.profile.density_ok;
  if (out.density.applicable) {
    out.density.conclusion_holds = (out.mw.t02 >= 2 * out.mw.t11);
    if (m.rank() >= 5) out.density.chain = check_density_chain(m.n(), m.rank());
  }
  out.cocircuit.applicable = out.profile.cocircuit_ok;
  if (out.cocircuit.applicable) {
    out.cocircuit.conclusion_holds = (out.mw.margin >= 0);
    out.cocircuit.chain = check_cocircuit_chain(m);
  }
  out.loops.applicable = out.profile.loops_ok;
  if (out.loops.applicable) {
    out.loops.conclusion_holds = (out.mw.margin >= 0);
    out.loops.chain = check_loops_chain(m);
  }
  return out;
}

std::vector<std::pair<int, std::vector<std::pair<int, int>>>> connected_graphs_upto(
    int max_vertices) {
  if (max_vertices < 1 || max_vertices > 6) {
    throw ConfigError("connected_graphs_upto supports 1..6 vertices");
  }
  std::vector<std::pair<int, std::vector<std::pair<int, int>>>> out;
  for (int v = 1; v <= max_vertices; ++v) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < v; ++i)
      for (int j = i + 1; j < v; ++j) pairs.emplace_back(i, j);
    const int pair_count = static_cast<int>(pairs.size());
    std::vector<std::pair<std::uint64_t, std::uint64_t>> reps;  // (edge count, mask)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count); ++mask) {
      if (!edge_mask_connected(v, mask, pairs)) continue;
      if (canonical_edge_mask(v, mask, pairs) != mask) continue;  // keep one per class
      reps.emplace_back(static_cast<std::uint64_t>(std::popcount(mask)), mask);
    }
    std::sort(reps.begin(), reps.end());
    for (const auto& [edges, mask] : reps) {
      std::vector<std::pair<int, int>> edge_list;
      for (int k = 0; k < pair_count; ++k) {
        if (mask & (std::uint64_t{1} << k)) edge_list.push_back(pairs[k]);
      }
      out.emplace_back(v, std::move(edge_list));
    }
  }
  return out;
}

std::pair<int, std::vector<std::pair<int, int>>> builtin_graph(const std::string& name) {
  auto complete = [](int v) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < v; ++i)
      for (int j = i + 1; j < v; ++j) e.emplace_back(i, j);
    return std::make_pair(v, e);
  };
  auto cycle = [](int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return std::make_pair(k, e);
  };
  auto path = [](int v) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < v; ++i) e.emplace_back(i, i + 1);
    return std::make_pair(v, e);
  };
  auto wheel = [](int rim) {
    // hub = 0, rim = 1..rim
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= rim; ++i) e.emplace_back(0, i);
    for (int i = 1; i <= rim; ++i) e.emplace_back(i, i == rim ? 1 : i + 1);
    return std::make_pair(rim + 1, e);
  };

  if (name.size() >= 2) {
    const char kind = name[0];
    const std::string num = name.substr(1);
    bool numeric = !num.empty() && num.find_first_not_of("0123456789") == std::string::npos;
    if (numeric) {
      const int k = std::stoi(num);
      if (kind == 'K' && k >= 2 && k <= 6) return complete(k);
      if (kind == 'C' && k >= 2 && k <= 9) return cycle(k);
      if (kind == 'W' && k >= 3 && k <= 6) return wheel(k);
      if (kind == 'P' && k >= 2 && k <= 6) return path(k);
    }
  }
  throw ConfigError("unknown builtin graph '" + name +
                    "' (supported: K2..K6, C2..C9, W3..W6, P2..P6)");
}

std::vector<Instance> expand_family(const FamilySpec& spec, long* skipped_by_caps) {
  long skipped = 0;
  std::vector<Instance> base;

  auto admit = [&](Instance inst, std::vector<Instance>& into) {
    if (inst.matroid.n() > spec.cap_n ||
        static_cast<long long>(inst.matroid.bases().size()) > spec.cap_bases) {
      ++skipped;
      return;
    }
    into.push_back(std::move(inst));
  };

  for (const FamilyClause& clause : spec.clauses) {
    switch (clause.kind) {
      case FamilyClause::Kind::uniform: {
        for (int r = clause.r_min; r <= clause.r_max; ++r) {
          for (int n = std::max(r, clause.n_min); n <= clause.n_max; ++n) {
            if (n > spec.cap_n) {
              ++skipped;
              continue;
            }
            admit({"uniform_r" + std::to_string(r) + "_n" + std::to_string(n),
                   Matroid::uniform(r, n)},
                  base);
          }
        }
        break;
      }
      case FamilyClause::Kind::graphic_builtin: {
        if (clause.name == "connected_upto_5") {
          int idx = 0;
          for (const auto& [v, edges] : connected_graphs_upto(5)) {
            admit({"conn5_" + std::to_string(idx) + "_v" + std::to_string(v) + "_e" +
                       std::to_string(edges.size()),
                   Matroid::graphic(v, edges)},
                  base);
            ++idx;
          }
        } else {
          const auto [v, edges] = builtin_graph(clause.name);
          admit({clause.name, Matroid::graphic(v, edges)}, base);
        }
        break;
      }
      case FamilyClause::Kind::graphic_file: {
        for (const std::string& path : expand_glob(clause.name)) {
          try {
            admit({"graphfile:" + path, parse_graph(read_file_or_config_error(path))}, base);
          } catch (const Error& e) {
            throw ConfigError("graphic_file " + path + ": " + e.what());
          }
        }
        break;
      }
      case FamilyClause::Kind::matroid_file: {
        for (const std::string& path : expand_glob(clause.name)) {
          try {
            admit({"file:" + path, parse_matroid(read_file_or_config_error(path))}, base);
          } catch (const Error& e) {
            throw ConfigError("matroid_file " + path + ": " + e.what());
          }
        }
        break;
      }
      case FamilyClause::Kind::u12_sums: {
        Matroid acc = Matroid::uniform(1, 2);
        for (int k = 1; k <= clause.count; ++k) {
          if (k > 1) {
            if (acc.n() + 2 > spec.cap_n) {
              skipped += clause.count - k + 1;
              break;
            }
            acc = direct_sum(acc, Matroid::uniform(1, 2));
          }
          admit({"u12sum_k" + std::to_string(k), acc}, base);
        }
        break;
      }
    }
  }

  std::vector<Instance> all = base;
  if (spec.dualize) {
    for (const Instance& inst : base) {
      admit({"dual." + inst.id, inst.matroid.dual()}, all);
    }
  }
  if (spec.sum_pairs) {
    for (size_t i = 0; i < base.size(); ++i) {
      for (size_t j = i; j < base.size(); ++j) {
        // Cheap pre-checks so caps really do exclude the work, not just the result.
        if (base[i].matroid.n() + base[j].matroid.n() > spec.cap_n) {
          ++skipped;
          continue;
        }
        const long long mm = static_cast<long long>(base[i].matroid.bases().size()) *
                             static_cast<long long>(base[j].matroid.bases().size());
        if (mm > spec.cap_bases) {
          ++skipped;
          continue;
        }
        all.push_back({"sum." + base[i].id + "+" + base[j].id,
                       direct_sum(base[i].matroid, base[j].matroid)});
      }
    }
  }
  const size_t loop_targets = spec.dualize ? base.size() * 2 : base.size();
  for (size_t i = 0; i < loop_targets && (spec.loops_upto_rank || spec.loops_fixed > 0); ++i) {
    const Instance inst = all[i];  // copy: push_back below may reallocate
    const int kmax = spec.loops_upto_rank ? inst.matroid.rank() : spec.loops_fixed;
    for (int k = 1; k <= kmax; ++k) {
      if (inst.matroid.n() + k > spec.cap_n) {
        ++skipped;
        continue;
      }
      all.push_back({"loops" + std::to_string(k) + "." + inst.id,
                     add_loops(inst.matroid, k)});
    }
  }

  if (skipped_by_caps) *skipped_by_caps = skipped;
  return all;
}

FamilySpec default_family_spec() {
  FamilySpec spec;
  spec.cap_n = FamilySpec::kDefaultGroundSetCapForSweep;
  spec.cap_bases = 100000;
  FamilyClause uni;
  uni.kind = FamilyClause::Kind::uniform;
  uni.r_min = 1;
  uni.r_max = 8;
  uni.n_min = 2;
  uni.n_max = 9;
  spec.clauses.push_back(uni);
  FamilyClause graphs;
  graphs.kind = FamilyClause::Kind::graphic_builtin;
  graphs.name = "connected_upto_5";
  spec.clauses.push_back(graphs);
  spec.dualize = true;
  spec.sum_pairs = true;
  spec.loops_upto_rank = true;
  spec.source_text = write_family_spec(spec);
  return spec;
}

SweepSummary sweep(const FamilySpec& spec, int jobs) {
  long skipped = 0;
  const std::vector<Instance> instances = expand_family(spec, &skipped);

  std::vector<InstanceResult> results(instances.size());
  const int workers = std::max(1, jobs);
  if (workers == 1 || instances.size() <= 1) {
    for (size_t i = 0; i < instances.size(); ++i) {
      results[i] = {audit(instances[i].matroid), write_matroid(instances[i].matroid)};
    }
  } else {
    std::atomic<size_t> next{0};
    auto work = [&]() {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= instances.size()) return;
        results[i] = {audit(instances[i].matroid), write_matroid(instances[i].matroid)};
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }

  // Merge strictly in instance order so the summary is independent of the
  // worker count.
  SweepSummary summary;
  summary.config_digest = digest(spec.source_text.empty() ? write_family_spec(spec)
                                                          : spec.source_text);
  summary.instances = static_cast<long>(instances.size());
  summary.skipped_by_caps = skipped;

  auto tally = [](TheoremTally& t, const TheoremAudit& a, const std::string& id) {
    if (!a.applicable) return;
    ++t.applicable;
    if (a.conclusion_holds) {
      ++t.conclusion_holds;
    } else {
      t.conclusion_fail_ids.push_back(id);
    }
    if (a.chain && a.chain->overall) ++t.all_steps_hold;
  };

  for (size_t i = 0; i < instances.size(); ++i) {
    const AuditReport& rep = results[i].report;
    if (rep.mw.hypothesis_ok) {
      ++summary.hypothesis_ok_instances;
      if (!summary.has_min_margin || rep.mw.margin < summary.min_margin) {
        summary.min_margin = rep.mw.margin;
        summary.has_min_margin = true;
      }
      if (rep.mw.margin < 0) {
        summary.violations.push_back({instances[i].id, rep.mw.margin, results[i].matroid_text});
      }
      if (rep.mw.equality) {
        ++summary.equality_cases;
        summary.equality_ids.push_back(instances[i].id);
      }
      if (rep.mw.equality != rep.mw.u12_sum) {
        ++summary.u12_mismatches;
        summary.u12_mismatch_ids.push_back(instances[i].id);
      }
    }
    tally(summary.density, rep.density, instances[i].id);
    tally(summary.cocircuit, rep.cocircuit, instances[i].id);
    tally(summary.loops, rep.loops, instances[i].id);
  }

  if (spec.inject_fake_violation) {
    summary.injected = true;
    summary.violations.push_back({"injected.synthetic", Int(-1), ""});
  }
  return summary;
}

int sweep_exit_code(const SweepSummary& summary) {
  if (!summary.violations.empty() || summary.u12_mismatches > 0) return 2;
  return 0;
}

}  // namespace mwlab
