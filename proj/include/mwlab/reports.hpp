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

#ifndef MWLAB_REPORTS_HPP
#define MWLAB_REPORTS_HPP

#include <string>
#include <string_view>

#include "mwlab/bounds.hpp"
#include "mwlab/mw.hpp"
#include "mwlab/tutte.hpp"

namespace mwlab {

// Every renderer emits deterministic "key value" lines sorted by key, with
// exact integers in plain decimal.  Reports carry the artifact version and a
// digest of the configuration or input they were produced from.

std::string render_mw_report(const MWReport& mw, const HypothesisProfile& profile,
                             std::string_view config_digest);

std::string render_sweep_summary(const SweepSummary& summary);

std::string render_chain_report(const ChainReport& chain, std::string_view config_digest);

std::string render_tutte_grid(const TuttePolynomial& t, bool engines_agree,
                              std::string_view config_digest);

}  // namespace mwlab

#endif  // MWLAB_REPORTS_HPP
