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

#ifndef KASSOC_DISTRIBUTION_HPP_
#define KASSOC_DISTRIBUTION_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "kassoc/graph.hpp"
#include "kassoc/node_set.hpp"
#include "kassoc/rational.hpp"

namespace kassoc {

/// Conditional probability table P(child | parents).
///
/// rows[k] is the distribution of the child for the k-th parent assignment,
/// where assignments are enumerated in mixed radix over `parents` in the
/// given order with the last parent varying fastest.
class Cpt {
 public:
  /// Throws std::invalid_argument if rows are empty, ragged, contain a
  /// negative entry, or do not sum to exactly one.
  Cpt(NodeIndex child, std::vector<NodeIndex> parents, std::vector<std::vector<Rational>> rows);

  NodeIndex child() const { return child_; }
  const std::vector<NodeIndex>& parents() const { return parents_; }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  int child_cardinality() const { return static_cast<int>(rows_.front().size()); }

  friend bool operator==(const Cpt&, const Cpt&) = default;

 private:
  NodeIndex child_;
  std::vector<NodeIndex> parents_;
  std::vector<std::vector<Rational>> rows_;
};

inline constexpr std::size_t kMaxJointCells = std::size_t{1} << 20;

/// Dense joint probability table over finite-domain variables.
///
/// Cells are stored in mixed radix over the variables in index order, last
/// variable fastest. Entries are exact, non-negative and sum to one.
class DiscreteJoint {
 public:
  DiscreteJoint(std::vector<std::string> labels, std::vector<int> cardinalities,
                std::vector<Rational> table);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& cardinalities() const { return cards_; }
  const std::vector<Rational>& table() const { return table_; }
  NodeSet variables() const { return NodeSet::range(size()); }

  /// Throws InputError for an unknown label.
  NodeIndex index_of(std::string_view label) const;

  /// Probability of a full assignment (one value per variable).
  const Rational& probability(std::span<const int> assignment) const;

  /// Probability of the event {vars[i] = values[i]} for a partial
  /// assignment; `values` follows ascending index order of `vars`.
  Rational probability(NodeSet vars, std::span<const int> values) const;

  /// Table of the marginal over `vars` (ascending index order, last fastest).
  std::vector<Rational> marginal_table(NodeSet vars) const;

  friend bool operator==(const DiscreteJoint&, const DiscreteJoint&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<int> cards_;
  std::vector<Rational> table_;
};

/// Product of the CPTs over every full assignment. One CPT per node of g with
/// parents exactly g's parents (any order); std::invalid_argument otherwise.
DiscreteJoint joint_from_cpts(const Dag& g, std::span<const Cpt> cpts);

/// Marginal over `keep`; the result's variables are the kept ones in their
/// original relative order.
DiscreteJoint marginalize(const DiscreteJoint& d, NodeSet keep);

/// Exact test of xs ⊥ ys | s. Uses the division-free identity
/// P(x,y,s) P(s) = P(x,s) P(y,s), so zero-probability conditioning events
/// never divide and are trivially satisfied.
bool is_independent(const DiscreteJoint& d, NodeSet xs, NodeSet ys, NodeSet s);
inline bool is_independent(const DiscreteJoint& d, NodeIndex x, NodeIndex y, NodeSet s) {
  return is_independent(d, NodeSet{x}, NodeSet{y}, s);
}

/// P(v1, ..., vk) == P(v1) ... P(vk) for every assignment.
bool mutually_independent(const DiscreteJoint& d, NodeSet vars);

/// Rows are i.i.d. observations, one column per variable.
struct Dataset {
  using Values = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  std::vector<std::string> labels;
  std::vector<int> cardinalities;
  Values values;

  int variables() const { return static_cast<int>(labels.size()); }
  Eigen::Index rows() const { return values.rows(); }

  friend bool operator==(const Dataset& a, const Dataset& b) {
    return a.labels == b.labels && a.cardinalities == b.cardinalities && a.values == b.values;
  }
};

/// n i.i.d. draws, deterministic in `seed`. n must be positive.
Dataset sample(const DiscreteJoint& d, std::int64_t n, std::uint64_t seed);

}  // namespace kassoc

#endif  // KASSOC_DISTRIBUTION_HPP_
