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

#include "kassoc/sparsest_permutation.hpp"

#include <algorithm>
#include <stdexcept>

#include "kassoc/error.hpp"

namespace kassoc {

PermutationDag dag_from_permutation(const IndependenceOracle& o, const std::vector<NodeIndex>& order) {
  NodeSet seen;
  for (NodeIndex v : order) {
    if (v < 0 || v >= o.size() || seen.contains(v)) {
      throw std::invalid_argument("permutation repeats or names an unknown variable");
    }
    seen.insert(v);
  }
  PermutationDag d{order, {}};
  NodeSet prefix;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!o.independent(order[j], order[k], prefix.without(order[j]))) d.edges.push_back({order[j], order[k]});
    }
    prefix.insert(order[k]);
  }
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

SparsestResult sparsest_permutations(const IndependenceOracle& o, NodeSet vars) {
  if (vars.size() > kMaxPermutationVars) {
    throw PreconditionError("sparsest permutation search is limited to " + std::to_string(kMaxPermutationVars) +
                            " variables");
  }
  SparsestResult r;
  r.min_edges = -1;
  std::vector<NodeIndex> order = vars.to_vector();
  do {
    ++r.permutations;
    PermutationDag d = dag_from_permutation(o, order);
    if (r.min_edges < 0 || d.edge_count() < r.min_edges) {
      r.min_edges = d.edge_count();
      r.minimizers.clear();
    }
    if (d.edge_count() == r.min_edges) r.minimizers.push_back(std::move(d));
  } while (std::next_permutation(order.begin(), order.end()));
  if (r.min_edges < 0) r.min_edges = 0;
  return r;
}

}  // namespace kassoc
