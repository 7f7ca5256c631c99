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

#ifndef KASSOC_ORACLE_HPP_
#define KASSOC_ORACLE_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "kassoc/distribution.hpp"
#include "kassoc/g_test.hpp"
#include "kassoc/gaussian.hpp"
#include "kassoc/graph.hpp"
#include "kassoc/node_set.hpp"

namespace kassoc {

enum class Backend { kGraph, kDiscrete, kGaussian, kGTest };

std::string_view to_string(Backend b);

/// One conditional (in)dependence statement, as answered by an oracle.
struct CiStatement {
  NodeSet x;
  NodeSet y;
  NodeSet given;
  bool independent = false;

  friend bool operator==(const CiStatement&, const CiStatement&) = default;
};

/// Answers "is X independent of Y given S?" from one of four backends:
/// d-separation in a DAG, an exact discrete joint, an exact linear-Gaussian
/// system, or a G-test on a sample.
///
/// Copies share the backend, answer cache and query counter. Queries are
/// safe to issue concurrently.
class IndependenceOracle {
 public:
  static IndependenceOracle from_graph(Dag g);
  static IndependenceOracle from_joint(DiscreteJoint d);
  static IndependenceOracle from_gaussian(GaussianSystem sys);
  static IndependenceOracle from_samples(Dataset data, GTestConfig cfg = {});

  Backend backend() const;
  int size() const;
  NodeSet variables() const { return NodeSet::range(size()); }
  const std::vector<std::string>& labels() const;
  const std::string& label(NodeIndex v) const { return labels().at(v); }
  /// Throws InputError for an unknown label.
  NodeIndex index_of(std::string_view label) const;
  std::string format(NodeSet s) const;
  std::string format(const CiStatement& st) const;

  /// true = independent. Sets must be non-empty (x, y) and pairwise
  /// disjoint.
  bool independent(NodeSet xs, NodeSet ys, NodeSet given) const;
  bool independent(NodeIndex x, NodeIndex y, NodeSet given) const {
    return independent(NodeSet{x}, NodeSet{y}, given);
  }
  CiStatement statement(NodeIndex x, NodeIndex y, NodeSet given) const {
    return {NodeSet{x}, NodeSet{y}, given, independent(x, y, given)};
  }

  /// Number of queries answered so far (cache hits included).
  std::uint64_t query_count() const;

  /// Backend payloads; nullptr when the oracle has a different backend.
  const Dag* graph() const;
  const DiscreteJoint* joint() const;
  const GaussianSystem* gaussian() const;
  const RationalMatrix* covariance() const;
  const Dataset* dataset() const;

 private:
  struct State;
  explicit IndependenceOracle(std::shared_ptr<State> state) : state_(std::move(state)) {}

  std::shared_ptr<State> state_;
};

inline bool query(const IndependenceOracle& o, NodeIndex x, NodeIndex y, NodeSet s) {
  return o.independent(x, y, s);
}

}  // namespace kassoc

#endif  // KASSOC_ORACLE_HPP_
