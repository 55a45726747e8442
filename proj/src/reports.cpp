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

#include "mwlab/reports.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <utility>
#include <vector>

#include "mwlab/version.hpp"

namespace mwlab {

namespace {

class KeyedLines {
 public:
  void add(std::string key, std::string value) {
    lines_.emplace_back(std::move(key), std::move(value));
  }
  void add(std::string key, const Int& value) { add(std::move(key), value.str()); }
  void add(std::string key, long long value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "1" : "0")); }

  std::string render() const {
    std::vector<std::pair<std::string, std::string>> sorted = lines_;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::ostringstream os;
    for (const auto& [k, v] : sorted) os << k << " " << v << "\n";
    return os.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

std::string padded_index(size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04zu", i);
  return buf;
}

void add_chain_steps(KeyedLines& out, const std::string& prefix, const ChainReport& chain) {
  out.add(prefix + "name", chain.name);
  out.add(prefix + "overall", chain.overall);
  for (size_t i = 0; i < chain.steps.size(); ++i) {
    const ChainStep& s = chain.steps[i];
    std::ostringstream line;
    line << "holds " << (s.holds ? 1 : 0) << " exact " << (s.exact ? 1 : 0) << " lhs "
         << s.lhs_text << " rhs " << s.rhs_text << " :: " << s.label;
    out.add(prefix + "step_" + padded_index(i), line.str());
  }
}

void add_tally(KeyedLines& out, const std::string& prefix, const TheoremTally& tally) {
  out.add(prefix + "_applicable", static_cast<long long>(tally.applicable));
  out.add(prefix + "_conclusion_holds", static_cast<long long>(tally.conclusion_holds));
  out.add(prefix + "_all_steps_hold", static_cast<long long>(tally.all_steps_hold));
  for (size_t i = 0; i < tally.conclusion_fail_ids.size(); ++i) {
    out.add(prefix + "_conclusion_fail_" + padded_index(i), tally.conclusion_fail_ids[i]);
  }
}

}  // namespace

std::string render_mw_report(const MWReport& mw, const HypothesisProfile& profile,
                             std::string_view config_digest) {
  // The margin is recomputed here, independently of the value the checker
  // stored, so a stale or corrupted report cannot slip through rendering.
  const Int margin = mw.t20 + mw.t02 - 2 * mw.t11;
  if (margin != mw.margin) throw EngineMismatch("stored margin disagrees with t20+t02-2*t11");

  KeyedLines out;
  out.add("version", std::string(kVersion));
  out.add("config_digest", std::string(config_digest));
  out.add("n", static_cast<long long>(mw.n));
  out.add("r", static_cast<long long>(mw.r));
  out.add("t20", mw.t20);
  out.add("t02", mw.t02);
  out.add("t11", mw.t11);
  out.add("margin", margin);
  out.add("equality", mw.equality);
  out.add("u12_sum", mw.u12_sum);
  out.add("hypothesis_ok", mw.hypothesis_ok);
  out.add("loopless", profile.loopless);
  out.add("coloopless", profile.coloopless);
  out.add("loop_count", static_cast<long long>(profile.loop_count));
  out.add("density_ok", profile.density_ok);
  out.add("cocircuit_ok", profile.cocircuit_ok);
  out.add("loops_ok", profile.loops_ok);
  out.add("min_cocircuit_size", static_cast<long long>(profile.min_cocircuit_size));
  return out.render();
}

std::string render_sweep_summary(const SweepSummary& summary) {
  KeyedLines out;
  out.add("version", std::string(kVersion));
  out.add("config_digest", summary.config_digest);
  out.add("instances", static_cast<long long>(summary.instances));
  out.add("skipped_by_caps", static_cast<long long>(summary.skipped_by_caps));
  out.add("hypothesis_ok_instances", static_cast<long long>(summary.hypothesis_ok_instances));
  out.add("violations", static_cast<long long>(summary.violations.size()));
  for (size_t i = 0; i < summary.violations.size(); ++i) {
    const Violation& v = summary.violations[i];
    // reproduction data inline, newlines folded to ';' to stay line-oriented
    std::string repro = v.matroid_text.empty() ? "-" : v.matroid_text;
    for (char& c : repro) {
      if (c == '\n') c = ';';
    }
    out.add("violation_" + padded_index(i),
            v.id + " margin " + v.margin.str() + " repro " + repro);
  }
  out.add("equality_cases", static_cast<long long>(summary.equality_cases));
  for (size_t i = 0; i < summary.equality_ids.size(); ++i) {
    out.add("equality_" + padded_index(i), summary.equality_ids[i]);
  }
  out.add("u12_mismatches", static_cast<long long>(summary.u12_mismatches));
  for (size_t i = 0; i < summary.u12_mismatch_ids.size(); ++i) {
    out.add("u12_mismatch_" + padded_index(i), summary.u12_mismatch_ids[i]);
  }
  if (summary.has_min_margin) out.add("min_margin", summary.min_margin);
  add_tally(out, "density", summary.density);
  add_tally(out, "cocircuit", summary.cocircuit);
  add_tally(out, "loops", summary.loops);
  if (summary.injected) out.add("injected", true);
  return out.render();
}

std::string render_chain_report(const ChainReport& chain, std::string_view config_digest) {
  KeyedLines out;
  out.add("version", std::string(kVersion));
  out.add("config_digest", std::string(config_digest));
  add_chain_steps(out, "", chain);
  return out.render();
}

std::string render_tutte_grid(const TuttePolynomial& t, bool engines_agree,
                              std::string_view config_digest) {
  std::ostringstream os;
  os << "version " << kVersion << "\n";
  os << "config_digest " << config_digest << "\n";
  os << "n " << t.n << "\n";
  os << "r " << t.r << "\n";
  os << "engines_agree " << (engines_agree ? 1 : 0) << "\n";
  for (int i = 0; i <= t.r; ++i) {
    for (int j = 0; j <= t.n - t.r; ++j) {
      os << "t " << i << " " << j << " " << t.t[i][j].str() << "\n";
    }
  }
  return os.str();
}

}  // namespace mwlab
