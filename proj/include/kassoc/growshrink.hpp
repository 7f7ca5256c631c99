// Copyright 2026 The kassoc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KASSOC_GROWSHRINK_HPP_
#define KASSOC_GROWSHRINK_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "kassoc/node_set.hpp"
#include "kassoc/oracle.hpp"

namespace kassoc {

enum class GsMode { kModified, kClassic };

std::string_view to_string(GsMode m);
/// "modified" or "classic"; anything else raises InputError.
GsMode parse_gs_mode(std::string_view s);

enum class GsPhase { kGrow, kShrink };

struct GsStep {
  GsPhase phase = GsPhase::kGrow;
  NodeIndex candidate = 0;
  std::optional<NodeIndex> partner;  // pair clause only
  NodeSet given;
  bool independent = false;
  bool changed = false;  // candidate added (grow) or removed (shrink)
};

using GsTrace = std::vector<GsStep>;

struct GsOptions {
  GsMode mode = GsMode::kModified;
  /// Candidate scan order; empty means ascending index.
  std::vector<NodeIndex> order;
  /// Pair-clause queries whose conditioning set would exceed this size are
  /// skipped.
  std::optional<int> max_conditioning_size;
};

/// Grow phase. Single candidates are tried before pairs, each in scan order;
/// the first dependent candidate is added and the pass restarts.
NodeSet grow(const IndependenceOracle& o, NodeIndex t, NodeSet vars, const GsOptions& opts = {},
             GsTrace* trace = nullptr);

/// Shrink phase: drop any member independent of t given the rest, restarting
/// after each removal.
NodeSet shrink(const IndependenceOracle& o, NodeIndex t, NodeSet s, const GsOptions& opts = {},
               GsTrace* trace = nullptr);

struct MarkovBlanketResult {
  NodeSet blanket;
  NodeSet grown;
  GsTrace trace;
};

MarkovBlanketResult markov_blanket(const IndependenceOracle& o, NodeIndex t, NodeSet vars,
                                   const GsOptions& opts = {});

/// Re-asks every traced query; true when all answers match.
bool replay_trace(const IndependenceOracle& o, NodeIndex t, const GsTrace& trace);

}  // namespace kassoc

#endif  // KASSOC_GROWSHRINK_HPP_
