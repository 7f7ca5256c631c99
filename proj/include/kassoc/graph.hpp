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

#ifndef KASSOC_GRAPH_HPP_
#define KASSOC_GRAPH_HPP_

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kassoc/node_set.hpp"

namespace kassoc {

struct Edge {
  NodeIndex parent = 0;
  NodeIndex child = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed acyclic graph over at most 32 labeled nodes. Node identity is the
/// dense index 0..n-1; labels are for display and file I/O. Immutable after
/// construction.
class Dag {
 public:
  Dag() = default;

  /// Throws std::invalid_argument on duplicate or empty labels, self-loops,
  /// duplicate edges, or a directed cycle; std::out_of_range on edge
  /// endpoints outside [0, n).
  Dag(std::vector<std::string> labels, std::vector<Edge> edges);

  /// Builds from "parent->child" strings. Malformed strings and unknown
  /// labels raise InputError.
  static Dag parse(std::vector<std::string> labels, std::span<const std::string> edges);

  int size() const { return static_cast<int>(labels_.size()); }
  NodeSet nodes() const { return NodeSet::range(size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(NodeIndex n) const;
  std::optional<NodeIndex> find(std::string_view label) const;
  /// Like find(), but an unknown label raises InputError.
  NodeIndex index_of(std::string_view label) const;

  NodeSet parents_of(NodeIndex n) const { return parents_.at(check(n)); }
  NodeSet children_of(NodeIndex n) const { return children_.at(check(n)); }
  bool has_edge(NodeIndex parent, NodeIndex child) const {
    return parents_of(child).contains(parent);
  }
  bool adjacent(NodeIndex a, NodeIndex b) const { return has_edge(a, b) || has_edge(b, a); }

  /// Edges sorted by (parent, child).
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<NodeIndex>& topological_order() const { return topo_; }

  /// "A->B"
  std::string edge_string(Edge e) const;
  std::string format(NodeSet s) const;

  friend bool operator==(const Dag&, const Dag&) = default;

 private:
  NodeIndex check(NodeIndex n) const;

  std::vector<std::string> labels_;
  std::vector<NodeSet> parents_;
  std::vector<NodeSet> children_;
  std::vector<Edge> edges_;
  std::vector<NodeIndex> topo_;
};

NodeSet parents(const Dag& g, NodeIndex x);
NodeSet children(const Dag& g, NodeIndex x);
/// Reflexive: x is its own ancestor.
NodeSet ancestors(const Dag& g, NodeIndex x);
/// Union of ancestors over a set (reflexive).
NodeSet ancestors(const Dag& g, NodeSet xs);
/// Reflexive: x is its own descendant.
NodeSet descendants(const Dag& g, NodeIndex x);
NodeSet non_descendants(const Dag& g, NodeIndex x);
/// Parents, children and spouses of x, excluding x.
NodeSet graph_markov_blanket(const Dag& g, NodeIndex x);

/// A sequence of distinct nodes with consecutive elements adjacent.
using Path = std::vector<NodeIndex>;

/// Throws std::invalid_argument when `path` is not a path of g or `position`
/// is an endpoint.
bool is_collider(const Dag& g, std::span<const NodeIndex> path, int position);

/// d-separation of two node sets given a third, by per-pair reachability.
/// Sets must be pairwise disjoint and xs, ys non-empty (std::invalid_argument).
bool d_separated(const Dag& g, NodeSet xs, NodeSet ys, NodeSet zs);
inline bool d_separated(const Dag& g, NodeIndex x, NodeIndex y, NodeSet zs) {
  return d_separated(g, NodeSet{x}, NodeSet{y}, zs);
}

inline constexpr int kBruteForceMaxNodes = 12;

/// Reference implementation: enumerates every simple path and applies the
/// definition clause by clause. Limited to kBruteForceMaxNodes nodes.
bool d_separated_bruteforce(const Dag& g, NodeSet xs, NodeSet ys, NodeSet zs);

/// All simple paths between x and y, in DFS order over ascending neighbours.
std::vector<Path> simple_paths(const Dag& g, NodeIndex x, NodeIndex y);

inline constexpr int kEnumerateMaxNodes = 5;

/// "A", "B", ... for small generated graphs.
std::vector<std::string> default_labels(int n);

/// Visits every labeled DAG on n nodes exactly once (n <= 5).
void for_each_dag(int n, const std::function<void(const Dag&)>& fn);
std::vector<Dag> enumerate_dags(int n);

}  // namespace kassoc

#endif  // KASSOC_GRAPH_HPP_
