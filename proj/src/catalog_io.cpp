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

#include "mwlab/catalog_io.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

namespace mwlab {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

long long parse_int(const std::string& tok, int line_no, const std::string& what) {
  try {
    size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw SyntaxError("expected integer for " + what + ", got '" + tok + "'", line_no);
  }
}

void expect_header(const std::vector<std::string>& lines, const std::string& magic) {
  if (lines.empty() || lines[0] != magic + " 1") {
    throw SyntaxError("expected header '" + magic + " 1'", 1);
  }
}

}  // namespace

Matroid parse_matroid(const std::string& text) {
  const auto lines = split_lines(text);
  expect_header(lines, "MATROID");
  if (lines.size() < 4) throw SyntaxError("truncated MATROID file", static_cast<int>(lines.size()));

  auto keyed_int = [&](int idx, const std::string& key) -> long long {
    const auto toks = split_ws(lines[idx]);
    if (toks.size() != 2 || toks[0] != key) {
      throw SyntaxError("expected '" + key + " <int>'", idx + 1);
    }
    return parse_int(toks[1], idx + 1, key);
  };
  const long long n = keyed_int(1, "n");
  const long long r = keyed_int(2, "r");
  const long long declared = keyed_int(3, "bases");
  if (n < 0 || n > 63) {
    throw ValidationError("ground set size " + std::to_string(n) +
                          " outside supported range 0..63");
  }

  if (static_cast<long long>(lines.size()) - 4 != declared) {
    throw CountMismatch("declared " + std::to_string(declared) + " bases but found " +
                        std::to_string(lines.size() - 4) + " basis lines");
  }

  std::vector<Mask> bases;
  bases.reserve(static_cast<size_t>(declared));
  for (size_t idx = 4; idx < lines.size(); ++idx) {
    const int line_no = static_cast<int>(idx) + 1;
    const auto toks = split_ws(lines[idx]);
    // an empty line is the empty basis; the cardinality check below ties it
    // to r = 0
    Mask b = 0;
    long long prev = -1;
    for (const auto& tok : toks) {
      const long long e = parse_int(tok, line_no, "element");
      if (e < 0 || e >= n) {
        throw SyntaxError("element " + std::to_string(e) + " outside 0.." +
                          std::to_string(n - 1), line_no);
      }
      if (e <= prev) throw SyntaxError("elements must be strictly increasing", line_no);
      prev = e;
      b |= mask_bit(static_cast<int>(e));
    }
    if (popcount(b) != r) {
      throw CountMismatch("basis on line " + std::to_string(line_no) + " has " +
                          std::to_string(popcount(b)) + " elements but r=" +
                          std::to_string(r));
    }
    bases.push_back(b);
  }

  try {
    return Matroid::from_bases(static_cast<int>(n), std::move(bases), "file");
  } catch (const ExchangeViolation& ex) {
    throw ValidationError(std::string("exchange axiom fails: ") + ex.what());
  } catch (const Error& ex) {
    throw ValidationError(ex.what());
  }
}

std::string write_matroid(const Matroid& m) {
  std::ostringstream os;
  os << "MATROID 1\n";
  os << "n " << m.n() << "\n";
  os << "r " << m.rank() << "\n";
  os << "bases " << m.bases().size() << "\n";
  for (Mask b : m.bases()) {
    bool first = true;
    for (int e = 0; e < m.n(); ++e) {
      if (b & mask_bit(e)) {
        if (!first) os << " ";
        os << e;
        first = false;
      }
    }
    os << "\n";
  }
  return os.str();
}

Matroid parse_graph(const std::string& text) {
  const auto lines = split_lines(text);
  expect_header(lines, "GRAPH");
  if (lines.size() < 2) throw SyntaxError("truncated GRAPH file", static_cast<int>(lines.size()));
  const auto toks = split_ws(lines[1]);
  if (toks.size() != 2 || toks[0] != "vertices") {
    throw SyntaxError("expected 'vertices <int>'", 2);
  }
  const long long v = parse_int(toks[1], 2, "vertices");
  if (v < 0) throw SyntaxError("vertex count must be non-negative", 2);

  std::vector<std::pair<int, int>> edges;
  for (size_t idx = 2; idx < lines.size(); ++idx) {
    const int line_no = static_cast<int>(idx) + 1;
    const auto ts = split_ws(lines[idx]);
    if (ts.size() != 2) throw SyntaxError("expected edge 'u v'", line_no);
    const long long a = parse_int(ts[0], line_no, "endpoint");
    const long long b = parse_int(ts[1], line_no, "endpoint");
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  return Matroid::graphic(static_cast<int>(v), edges);
}

std::string write_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  std::ostringstream os;
  os << "GRAPH 1\n";
  os << "vertices " << vertex_count << "\n";
  for (const auto& [u, v] : edges) os << u << " " << v << "\n";
  return os.str();
}

FamilySpec parse_family_spec(const std::string& text) {
  FamilySpec spec;
  spec.source_text = text;
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "SWEEP 1") {
    throw ConfigError("expected header 'SWEEP 1'");
  }
  for (size_t idx = 1; idx < lines.size(); ++idx) {
    const auto toks = split_ws(lines[idx]);
    if (toks.empty() || toks[0].starts_with("#")) continue;
    const std::string& key = toks[0];
    auto want = [&](size_t count) {
      if (toks.size() != count + 1) {
        throw ConfigError("clause '" + key + "' expects " + std::to_string(count) +
                          " arguments (line " + std::to_string(idx + 1) + ")");
      }
    };
    auto to_int = [&](const std::string& tok) -> long long {
      try {
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
      } catch (const std::exception&) {
        throw ConfigError("clause '" + key + "': expected integer, got '" + tok +
                          "' (line " + std::to_string(idx + 1) + ")");
      }
    };

    if (key == "uniform") {
      want(4);
      FamilyClause c;
      c.kind = FamilyClause::Kind::uniform;
      c.r_min = static_cast<int>(to_int(toks[1]));
      c.r_max = static_cast<int>(to_int(toks[2]));
      c.n_min = static_cast<int>(to_int(toks[3]));
      c.n_max = static_cast<int>(to_int(toks[4]));
      if (c.r_min < 0 || c.r_max < c.r_min || c.n_min < 0 || c.n_max < c.n_min) {
        throw ConfigError("uniform clause has an empty or negative range (line " +
                          std::to_string(idx + 1) + ")");
      }
      spec.clauses.push_back(c);
    } else if (key == "graphic_builtin") {
      want(1);
      FamilyClause c;
      c.kind = FamilyClause::Kind::graphic_builtin;
      c.name = toks[1];
      spec.clauses.push_back(c);
    } else if (key == "graphic_file") {
      want(1);
      FamilyClause c;
      c.kind = FamilyClause::Kind::graphic_file;
      c.name = toks[1];
      spec.clauses.push_back(c);
    } else if (key == "matroid_file") {
      want(1);
      FamilyClause c;
      c.kind = FamilyClause::Kind::matroid_file;
      c.name = toks[1];
      spec.clauses.push_back(c);
    } else if (key == "u12_sums") {
      want(1);
      FamilyClause c;
      c.kind = FamilyClause::Kind::u12_sums;
      c.count = static_cast<int>(to_int(toks[1]));
      if (c.count < 1) throw ConfigError("u12_sums expects a count >= 1");
      spec.clauses.push_back(c);
    } else if (key == "dualize") {
      want(1);
      spec.dualize = to_int(toks[1]) != 0;
    } else if (key == "sum_pairs") {
      want(1);
      spec.sum_pairs = to_int(toks[1]) != 0;
    } else if (key == "add_loops") {
      want(1);
      if (toks[1] == "upto_rank") {
        spec.loops_upto_rank = true;
        spec.loops_fixed = 0;
      } else {
        spec.loops_upto_rank = false;
        spec.loops_fixed = static_cast<int>(to_int(toks[1]));
        if (spec.loops_fixed < 0) throw ConfigError("add_loops count must be >= 0");
      }
    } else if (key == "cap_n") {
      want(1);
      spec.cap_n = static_cast<int>(to_int(toks[1]));
    } else if (key == "cap_bases") {
      want(1);
      spec.cap_bases = to_int(toks[1]);
    } else if (key == "debug_inject_violation") {
      want(1);
      spec.inject_fake_violation = to_int(toks[1]) != 0;
    } else {
      throw ConfigError("unknown clause '" + key + "' (line " + std::to_string(idx + 1) + ")");
    }
  }
  return spec;
}

std::string write_family_spec(const FamilySpec& spec) {
  std::ostringstream os;
  os << "SWEEP 1\n";
  os << "cap_n " << spec.cap_n << "\n";
  os << "cap_bases " << spec.cap_bases << "\n";
  for (const FamilyClause& c : spec.clauses) {
    switch (c.kind) {
      case FamilyClause::Kind::uniform:
        os << "uniform " << c.r_min << " " << c.r_max << " " << c.n_min << " "
           << c.n_max << "\n";
        break;
      case FamilyClause::Kind::graphic_builtin:
        os << "graphic_builtin " << c.name << "\n";
        break;
      case FamilyClause::Kind::graphic_file:
        os << "graphic_file " << c.name << "\n";
        break;
      case FamilyClause::Kind::matroid_file:
        os << "matroid_file " << c.name << "\n";
        break;
      case FamilyClause::Kind::u12_sums:
        os << "u12_sums " << c.count << "\n";
        break;
    }
  }
  os << "dualize " << (spec.dualize ? 1 : 0) << "\n";
  os << "sum_pairs " << (spec.sum_pairs ? 1 : 0) << "\n";
  if (spec.loops_upto_rank) {
    os << "add_loops upto_rank\n";
  } else {
    os << "add_loops " << spec.loops_fixed << "\n";
  }
  if (spec.inject_fake_violation) os << "debug_inject_violation 1\n";
  return os.str();
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!std::cout) throw SinkError("failed writing to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SinkError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw SinkError("failed writing to '" + path + "'");
}

std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace mwlab
