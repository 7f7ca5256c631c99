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

#include "kassoc/growshrink.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kassoc/error.hpp"

namespace kassoc {
namespace {

std::vector<NodeIndex> scan_order(const GsOptions& opts, NodeSet pool) {
  std::vector<NodeIndex> out;
  if (opts.order.empty()) return pool.to_vector();
  for (NodeIndex v : opts.order) {
    if (pool.contains(v)) out.push_back(v);
  }
  return out;
}

void validate_order(const IndependenceOracle& o, const GsOptions& opts) {
  if (opts.order.empty()) return;
  std::vector<NodeIndex> sorted = opts.order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    if (sorted[i] != i || i >= o.size()) throw std::invalid_argument("scan order must permute the variables");
  }
  if (static_cast<int>(sorted.size()) != o.size()) throw std::invalid_argument("scan order must permute the variables");
}

void record(GsTrace* trace, GsStep step) {
  if (trace != nullptr) trace->push_back(step);
}

}  // namespace

std::string_view to_string(GsMode m) { return m == GsMode::kModified ? "modified" : "classic"; }

GsMode parse_gs_mode(std::string_view s) {
  if (s == "modified") return GsMode::kModified;
  if (s == "classic") return GsMode::kClassic;
  throw InputError("unknown Markov blanket mode '" + std::string(s) + "' (expected modified or classic)");
}

NodeSet grow(const IndependenceOracle& o, NodeIndex t, NodeSet vars, const GsOptions& opts, GsTrace* trace) {
  if (!vars.contains(t)) throw std::invalid_argument("grow target must be one of the variables");
  validate_order(o, opts);
  NodeSet s;
  bool added = true;
  while (added) {
    added = false;
    const NodeSet rest = vars - s.with(t);
    const std::vector<NodeIndex> order = scan_order(opts, rest);
    for (NodeIndex x : order) {
      const bool ind = o.independent(t, x, s);
      record(trace, {GsPhase::kGrow, x, std::nullopt, s, ind, !ind});
      if (!ind) {
        s.insert(x);
        added = true;
        break;
      }
    }
    if (added || opts.mode == GsMode::kClassic) continue;
    if (opts.max_conditioning_size && s.size() + 1 > *opts.max_conditioning_size) continue;
    // Pair clause. A partner already in S would repeat the single test, so
    // partners range over the remaining candidates only.
    for (NodeIndex x : order) {
      for (NodeIndex z : order) {
        if (z == x) continue;
        const NodeSet given = s.with(z);
        const bool ind = o.independent(t, x, given);
        record(trace, {GsPhase::kGrow, x, z, given, ind, !ind});
        if (!ind) {
          s.insert(x);
          added = true;
          break;
        }
      }
      if (added) break;
    }
  }
  return s;
}

NodeSet shrink(const IndependenceOracle& o, NodeIndex t, NodeSet s, const GsOptions& opts, GsTrace* trace) {
  if (s.contains(t)) throw std::invalid_argument("shrink set must not contain the target");
  validate_order(o, opts);
  bool removed = true;
  while (removed) {
    removed = false;
    for (NodeIndex x : scan_order(opts, s)) {
      const NodeSet given = s.without(x);
      const bool ind = o.independent(t, x, given);
      record(trace, {GsPhase::kShrink, x, std::nullopt, given, ind, ind});
      if (ind) {
        s.erase(x);
        removed = true;
        break;
      }
    }
  }
  return s;
}

MarkovBlanketResult markov_blanket(const IndependenceOracle& o, NodeIndex t, NodeSet vars,
                                   const GsOptions& opts) {
  MarkovBlanketResult r;
  r.grown = grow(o, t, vars, opts, &r.trace);
  r.blanket = shrink(o, t, r.grown, opts, &r.trace);
  return r;
}

bool replay_trace(const IndependenceOracle& o, NodeIndex t, const GsTrace& trace) {
  return std::all_of(trace.begin(), trace.end(), [&](const GsStep& step) {
    return o.independent(t, step.candidate, step.given) == step.independent;
  });
}

}  // namespace kassoc
