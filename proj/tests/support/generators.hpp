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

#ifndef KASSOC_TESTS_SUPPORT_GENERATORS_HPP_
#define KASSOC_TESTS_SUPPORT_GENERATORS_HPP_

// Hand-rolled generators for property tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "kassoc/distribution.hpp"
#include "kassoc/graph.hpp"
#include "kassoc/node_set.hpp"
#include "kassoc/rational.hpp"

namespace kassoc::testing {

/// Random DAG on n nodes: random hidden order, each forward pair an edge with
/// probability `density`.
inline Dag random_dag(std::mt19937_64& rng, int n, double density) {
  std::vector<NodeIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution edge(density);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (edge(rng)) edges.push_back({order[i], order[j]});
    }
  }
  return Dag(default_labels(n), edges);
}

inline Dag random_dag(std::mt19937_64& rng, int min_n, int max_n, double density) {
  std::uniform_int_distribution<int> size(min_n, max_n);
  return random_dag(rng, size(rng), density);
}

inline NodeSet random_subset(std::mt19937_64& rng, NodeSet pool, double p = 0.5) {
  std::bernoulli_distribution keep(p);
  NodeSet out;
  for (NodeIndex v : pool) {
    if (keep(rng)) out.insert(v);
  }
  return out;
}

inline NodeIndex random_member(std::mt19937_64& rng, NodeSet pool) {
  const auto items = pool.to_vector();
  return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)];
}

/// Binary CPTs with entries k/den, 0 < k < den, so the joint is strictly
/// positive. Generic draws are faithful with high probability but not
/// always; tests relying on faithfulness must not use these.
inline std::vector<Cpt> random_binary_cpts(std::mt19937_64& rng, const Dag& g, int den = 11) {
  std::uniform_int_distribution<int> num(1, den - 1);
  std::vector<Cpt> cpts;
  for (NodeIndex v = 0; v < g.size(); ++v) {
    const auto parents = g.parents_of(v).to_vector();
    std::vector<std::vector<Rational>> rows;
    for (int r = 0; r < (1 << parents.size()); ++r) {
      const Rational p1(num(rng), den);
      rows.push_back({1 - p1, p1});
    }
    cpts.emplace_back(v, parents, rows);
  }
  return cpts;
}

inline DiscreteJoint random_binary_joint(std::mt19937_64& rng, const Dag& g) {
  return joint_from_cpts(g, random_binary_cpts(rng, g));
}

}  // namespace kassoc::testing

#endif  // KASSOC_TESTS_SUPPORT_GENERATORS_HPP_
