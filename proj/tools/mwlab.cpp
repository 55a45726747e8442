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

// Command-line front door.  Exit codes: 0 = ran, nothing to report;
// 1 = usage / IO / config error; 2 = a reportable mathematical violation
// (inequality violation, engine mismatch, failed identity).

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mwlab/bounds.hpp"
#include "mwlab/catalog_io.hpp"
#include "mwlab/mw.hpp"
#include "mwlab/reports.hpp"
#include "mwlab/tutte.hpp"
#include "mwlab/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

int ground_set_cap() {
  if (const char* env = std::getenv("MWLAB_MAX_N")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw mwlab::ConfigError("MWLAB_MAX_N must be an integer, got '" + std::string(env) + "'");
    }
  }
  return mwlab::kDefaultGroundSetCap;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mwlab::SinkError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Matroid or graph input, decided by the header line.
mwlab::Matroid parse_input(const std::string& text) {
  if (text.rfind("GRAPH 1", 0) == 0) return mwlab::parse_graph(text);
  return mwlab::parse_matroid(text);
}

int cmd_check(const std::string& path, const std::string& out) {
  const std::string text = read_file(path);
  const mwlab::Matroid m = parse_input(text);
  if (m.n() > ground_set_cap()) {
    throw mwlab::GroundSetTooLarge("n=" + std::to_string(m.n()) + " exceeds cap " +
                                   std::to_string(ground_set_cap()) +
                                   " (override with MWLAB_MAX_N)");
  }
  const mwlab::MWReport mw = mwlab::mw_check(m);
  const mwlab::HypothesisProfile profile = mwlab::hypothesis_profile(m);
  mwlab::write_text(mwlab::render_mw_report(mw, profile, mwlab::digest(text)), out);
  return (mw.hypothesis_ok && mw.margin < 0) ? kExitViolation : kExitOk;
}

int cmd_tutte(const std::string& path, const std::vector<long long>& eval,
              const std::string& out) {
  const std::string text = read_file(path);
  const mwlab::Matroid m = parse_input(text);
  const mwlab::TuttePolynomial by_whitney =
      mwlab::tutte_from_whitney(mwlab::whitney_table(m, ground_set_cap()));
  const mwlab::TuttePolynomial by_delcon = mwlab::tutte_delcon(m);
  const bool agree = (by_whitney == by_delcon);
  if (!agree) {
    mwlab::write_text(mwlab::render_tutte_grid(by_delcon, false, mwlab::digest(text)), out);
    std::cerr << "mwlab: engine mismatch: deletion-contraction and subset-expansion"
                 " tables differ\n";
    return kExitViolation;
  }
  if (!eval.empty()) {
    mwlab::write_text(by_delcon.evaluate(eval[0], eval[1]).str() + "\n", out);
  } else {
    mwlab::write_text(mwlab::render_tutte_grid(by_delcon, true, mwlab::digest(text)), out);
  }
  return kExitOk;
}

int cmd_bounds_nr_table(int max_r, const std::string& out) {
  if (max_r < 1) throw mwlab::BadRange("--max-r must be >= 1");
  std::ostringstream os;
  os << "version " << mwlab::kVersion << "\n";
  os << "config_digest " << mwlab::digest("nr-table --max-r " + std::to_string(max_r)) << "\n";
  const auto& reference = mwlab::reference_nr_table();
  for (int r = 1; r <= max_r; ++r) {
    const long long oracle = mwlab::minimal_nr(r);
    os << "r=" << r;
    if (r <= 16) {
      os << " paper=" << reference[r - 1];
    } else {
      os << " paper=-";
    }
    os << " oracle=" << oracle;
    long long threshold = -1;
    if (r >= 4) {
      threshold = mwlab::density_threshold(r);
      os << " threshold=" << threshold;
    } else {
      os << " threshold=-";
    }
    if (r <= 16) {
      os << " agree=" << (oracle == reference[r - 1] ? "ok" : "MISMATCH");
    } else {
      os << " agree=-";
    }
    // minimal_nr <= threshold is checked and reported, never asserted.
    if (threshold >= 0) {
      os << " oracle_le_threshold=" << (oracle <= threshold ? "yes" : "NO");
    } else {
      os << " oracle_le_threshold=-";
    }
    os << "\n";
  }
  mwlab::write_text(os.str(), out);
  return kExitOk;  // disagreements are reported, not fatal
}

int cmd_bounds_identity(int max_r, const std::string& out) {
  if (max_r < 1) throw mwlab::BadRange("--max-r must be >= 1");
  std::ostringstream os;
  os << "version " << mwlab::kVersion << "\n";
  os << "config_digest " << mwlab::digest("identity --max-r " + std::to_string(max_r)) << "\n";
  bool all = true;
  for (int r = 1; r <= max_r; ++r) {
    const auto c = mwlab::check_binomial_identity(r);
    all = all && c.holds;
    os << "r=" << r << " sum=" << c.lhs.str() << " pow=" << c.rhs.str() << " "
       << (c.holds ? "ok" : "FAIL") << "\n";
  }
  mwlab::write_text(os.str(), out);
  return all ? kExitOk : kExitViolation;
}

int cmd_bounds_log_ineq(double single_x, int grid_points, const std::string& out) {
  std::ostringstream os;
  os << "version " << mwlab::kVersion << "\n";
  bool all_in_regime_hold = true;
  auto emit = [&](double x) {
    const auto c = mwlab::check_log_inequality(x);
    if (x >= 17.0 && !c.holds) all_in_regime_hold = false;
    os << "x=" << x << " lhs=" << c.lhs << " rhs=" << c.rhs << " "
       << (c.holds ? "ok" : "FAIL") << "\n";
  };
  if (single_x > 0) {
    os << "config_digest " << mwlab::digest("log-ineq --x " + std::to_string(single_x)) << "\n";
    emit(single_x);
  } else {
    if (grid_points < 1) throw mwlab::BadRange("--points must be >= 1");
    os << "config_digest " << mwlab::digest("log-ineq --points " + std::to_string(grid_points))
       << "\n";
    // geometric grid over [17, 1e6]
    const double lo = 17.0, hi = 1e6;
    for (int i = 0; i < grid_points; ++i) {
      const double t = grid_points == 1 ? 0.0 : static_cast<double>(i) / (grid_points - 1);
      emit(lo * std::pow(hi / lo, t));
    }
  }
  mwlab::write_text(os.str(), out);
  return all_in_regime_hold ? kExitOk : kExitViolation;
}

int cmd_bounds_chain(const std::string& kind, int n, int r, const std::string& path,
                     const std::string& out) {
  mwlab::ChainReport chain;
  std::string digest_input;
  if (kind == "density") {
    chain = mwlab::check_density_chain(n, r);
    digest_input = "chain density " + std::to_string(n) + " " + std::to_string(r);
  } else if (kind == "forward-diff") {
    chain = mwlab::check_forward_difference(n, r);
    digest_input = "chain forward-diff " + std::to_string(n) + " " + std::to_string(r);
  } else if (kind == "cocircuit" || kind == "loops") {
    if (path.empty()) throw mwlab::ConfigError("chain kind '" + kind + "' needs --input");
    const std::string text = read_file(path);
    const mwlab::Matroid m = parse_input(text);
    chain = (kind == "cocircuit") ? mwlab::check_cocircuit_chain(m)
                                  : mwlab::check_loops_chain(m);
    digest_input = text;
  } else {
    throw mwlab::ConfigError("unknown chain kind '" + kind +
                             "' (density|forward-diff|cocircuit|loops)");
  }
  mwlab::write_text(mwlab::render_chain_report(chain, mwlab::digest(digest_input)), out);
  return kExitOk;
}

int cmd_sweep(const std::string& config_path, int jobs, const std::string& out) {
  mwlab::FamilySpec spec;
  if (config_path.empty()) {
    spec = mwlab::default_family_spec();
  } else {
    spec = mwlab::parse_family_spec(read_file(config_path));
  }
  const mwlab::SweepSummary summary = mwlab::sweep(spec, jobs);
  mwlab::write_text(mwlab::render_sweep_summary(summary), out);
  return mwlab::sweep_exit_code(summary);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tutte-polynomial evaluations and sufficient-condition audits "
               "for the Merino-Welsh inequality"};
  app.require_subcommand(1);

  std::string input, out, config;
  std::vector<long long> eval;
  int jobs = 1;

  CLI::App* check = app.add_subcommand("check", "inequality report for one matroid or graph");
  check->add_option("input", input, "MATROID or GRAPH file")->required();
  check->add_option("--out", out, "write report to a file instead of stdout");

  CLI::App* tutte = app.add_subcommand("tutte", "coefficient table from both engines");
  tutte->add_option("input", input, "MATROID or GRAPH file")->required();
  tutte->add_option("--eval", eval, "evaluate at integer point x y")->expected(2);
  tutte->add_option("--out", out, "write report to a file instead of stdout");

  CLI::App* bounds = app.add_subcommand("bounds", "formula and proof-chain reports");
  bounds->require_subcommand(1);
  int max_r_nr = 16, max_r_id = 512, grid_points = 1000, chain_n = 0, chain_r = 0;
  double log_x = -1;
  std::string chain_kind, chain_input;
  CLI::App* nr = bounds->add_subcommand("nr-table", "least n with 2^(n-r) >= 2*C(n,r), by rank");
  nr->add_option("--max-r", max_r_nr, "last rank to print");
  nr->add_option("--out", out, "write report to a file instead of stdout");
  CLI::App* identity = bounds->add_subcommand("identity", "binomial identity sum = 2^(2r-2)");
  identity->add_option("--max-r", max_r_id, "last rank to check");
  identity->add_option("--out", out, "write report to a file instead of stdout");
  CLI::App* log_ineq = bounds->add_subcommand("log-ineq", "log-tower inequality report");
  log_ineq->add_option("--x", log_x, "single evaluation point (> 2)");
  log_ineq->add_option("--points", grid_points, "geometric grid size over [17, 1e6]");
  log_ineq->add_option("--out", out, "write report to a file instead of stdout");
  CLI::App* chain = bounds->add_subcommand("chain", "audit one proof chain");
  chain->add_option("kind", chain_kind, "density|forward-diff|cocircuit|loops")->required();
  chain->add_option("--n", chain_n, "size (density, forward-diff)");
  chain->add_option("--r", chain_r, "rank (density, forward-diff)");
  chain->add_option("--input", chain_input, "matroid/graph file (cocircuit, loops)");
  chain->add_option("--out", out, "write report to a file instead of stdout");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "audit a generated corpus");
  sweep_cmd->add_option("config", config, "SWEEP config file (built-in corpus when omitted)");
  sweep_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  sweep_cmd->add_option("--out", out, "write report to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(input, out);
    if (tutte->parsed()) return cmd_tutte(input, eval, out);
    if (bounds->parsed()) {
      if (nr->parsed()) return cmd_bounds_nr_table(max_r_nr, out);
      if (identity->parsed()) return cmd_bounds_identity(max_r_id, out);
      if (log_ineq->parsed()) return cmd_bounds_log_ineq(log_x, grid_points, out);
      if (chain->parsed()) return cmd_bounds_chain(chain_kind, chain_n, chain_r, chain_input, out);
    }
    if (sweep_cmd->parsed()) return cmd_sweep(config, jobs, out);
  } catch (const mwlab::EngineMismatch& e) {
    std::cerr << "mwlab: " << e.what() << "\n";
    return kExitViolation;
  } catch (const mwlab::Error& e) {
    std::cerr << "mwlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "mwlab: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
