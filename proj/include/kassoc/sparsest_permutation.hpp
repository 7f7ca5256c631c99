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

#ifndef KASSOC_SPARSEST_PERMUTATION_HPP_
#define KASSOC_SPARSEST_PERMUTATION_HPP_

#include <vector>

#include "kassoc/graph.hpp"
#include "kassoc/oracle.hpp"

namespace kassoc {

inline constexpr int kMaxPermutationVars = 8;

struct PermutationDag {
  std::vector<NodeIndex> order;
  std::vector<Edge> edges;  // sorted

  int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Edge order[j] -> order[k] (j < k) iff they are dependent given every
/// earlier node except order[j].
PermutationDag dag_from_permutation(const IndependenceOracle& o, const std::vector<NodeIndex>& order);

struct SparsestResult {
  int min_edges = 0;
  long long permutations = 0;
  std::vector<PermutationDag> minimizers;  // lexicographic in order
};

/// Exhaustive search over all orderings of `vars` (at most 8 of them).
SparsestResult sparsest_permutations(const IndependenceOracle& o, NodeSet vars);
inline SparsestResult sparsest_permutations(const IndependenceOracle& o) {
  return sparsest_permutations(o, o.variables());
}

}  // namespace kassoc

#endif  // KASSOC_SPARSEST_PERMUTATION_HPP_
