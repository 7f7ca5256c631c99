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

#include "kassoc/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "kassoc/error.hpp"

namespace kassoc {

Dag::Dag(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)) {
  const int n = size();
  if (n > kMaxNodes) {
    throw std::invalid_argument("a Dag holds at most " + std::to_string(kMaxNodes) + " nodes");
  }
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw std::invalid_argument("empty node label");
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate node label '" + l + "'");
  }
  parents_.assign(n, NodeSet{});
  children_.assign(n, NodeSet{});
  for (const Edge& e : edges) {
    if (e.parent < 0 || e.parent >= n || e.child < 0 || e.child >= n) {
      throw std::out_of_range("edge endpoint outside the node range");
    }
    if (e.parent == e.child) throw std::invalid_argument("self-loop on '" + labels_[e.parent] + "'");
    if (parents_[e.child].contains(e.parent)) {
      throw std::invalid_argument("duplicate edge " + edge_string(e));
    }
    parents_[e.child].insert(e.parent);
    children_[e.parent].insert(e.child);
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);

  // Kahn's algorithm, always releasing the smallest ready index.
  std::vector<int> indegree(n);
  for (int i = 0; i < n; ++i) indegree[i] = parents_[i].size();
  NodeSet ready;
  for (int i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.insert(i);
  }
  while (!ready.empty()) {
    const NodeIndex v = ready.front();
    ready.erase(v);
    topo_.push_back(v);
    for (NodeIndex c : children_[v]) {
      if (--indegree[c] == 0) ready.insert(c);
    }
  }
  if (static_cast<int>(topo_.size()) != n) throw std::invalid_argument("edge set contains a directed cycle");
}

Dag Dag::parse(std::vector<std::string> labels, std::span<const std::string> edges) {
  std::vector<Edge> parsed;
  auto lookup = [&](std::string_view name, std::string_view edge) {
    const auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) {
      throw InputError("edge '" + std::string(edge) + "' names unknown node '" + std::string(name) + "'");
    }
    return static_cast<NodeIndex>(it - labels.begin());
  };
  for (const std::string& text : edges) {
    const auto arrow = text.find("->");
    if (arrow == std::string::npos || arrow == 0 || arrow + 2 >= text.size()) {
      throw InputError("malformed edge '" + text + "', expected \"parent->child\"");
    }
    parsed.push_back({lookup(std::string_view(text).substr(0, arrow), text),
                      lookup(std::string_view(text).substr(arrow + 2), text)});
  }
  try {
    return Dag(std::move(labels), std::move(parsed));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

NodeIndex Dag::check(NodeIndex n) const {
  if (n < 0 || n >= size()) throw std::out_of_range("unknown node index " + std::to_string(n));
  return n;
}

const std::string& Dag::label(NodeIndex n) const { return labels_[check(n)]; }

std::optional<NodeIndex> Dag::find(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<NodeIndex>(it - labels_.begin());
}

NodeIndex Dag::index_of(std::string_view label) const {
  if (auto n = find(label)) return *n;
  throw InputError("unknown node '" + std::string(label) + "'");
}

std::string Dag::edge_string(Edge e) const { return labels_[e.parent] + "->" + labels_[e.child]; }

std::string Dag::format(NodeSet s) const {
  std::string out = "{";
  for (NodeIndex n : s) {
    if (out.size() > 1) out += ",";
    out += label(n);
  }
  return out + "}";
}

NodeSet parents(const Dag& g, NodeIndex x) { return g.parents_of(x); }
NodeSet children(const Dag& g, NodeIndex x) { return g.children_of(x); }

NodeSet ancestors(const Dag& g, NodeSet xs) {
  NodeSet result = xs;
  NodeSet frontier = xs;
  while (!frontier.empty()) {
    NodeSet next;
    for (NodeIndex v : frontier) next |= g.parents_of(v);
    frontier = next - result;
    result |= next;
  }
  return result;
}

NodeSet ancestors(const Dag& g, NodeIndex x) {
  g.parents_of(x);
  return ancestors(g, NodeSet{x});
}

NodeSet descendants(const Dag& g, NodeIndex x) {
  NodeSet result{x};
  NodeSet frontier = g.children_of(x);
  while (!frontier.empty()) {
    const NodeIndex v = frontier.front();
    frontier.erase(v);
    if (result.contains(v)) continue;
    result.insert(v);
    frontier |= g.children_of(v) - result;
  }
  return result;
}

NodeSet non_descendants(const Dag& g, NodeIndex x) { return g.nodes() - descendants(g, x); }

NodeSet graph_markov_blanket(const Dag& g, NodeIndex x) {
  NodeSet mb = g.parents_of(x) | g.children_of(x);
  for (NodeIndex c : g.children_of(x)) mb |= g.parents_of(c);
  return mb.without(x);
}

bool is_collider(const Dag& g, std::span<const NodeIndex> path, int position) {
  if (path.size() < 2) throw std::invalid_argument("a path has at least two nodes");
  NodeSet seen;
  for (std::size_t i = 0; i < path.size(); ++i) {
    g.parents_of(path[i]);
    if (seen.contains(path[i])) throw std::invalid_argument("path repeats a node");
    seen.insert(path[i]);
    if (i > 0 && !g.adjacent(path[i - 1], path[i])) {
      throw std::invalid_argument("consecutive path nodes are not adjacent");
    }
  }
  if (position <= 0 || position >= static_cast<int>(path.size()) - 1) {
    throw std::invalid_argument("collider status is only defined for interior path positions");
  }
  const NodeIndex c = path[position];
  return g.has_edge(path[position - 1], c) && g.has_edge(path[position + 1], c);
}

namespace {

void check_query(const Dag& g, NodeSet xs, NodeSet ys, NodeSet zs) {
  if (!g.nodes().contains_all(xs | ys | zs)) throw std::out_of_range("query names a node outside the graph");
  if (xs.empty() || ys.empty()) throw std::invalid_argument("d-separation needs non-empty node sets");
  if (xs.intersects(ys) || xs.intersects(zs) || ys.intersects(zs)) {
    throw std::invalid_argument("d-separation sets must be pairwise disjoint");
  }
}

// Nodes reachable from x by an active trail given zs.
NodeSet reachable(const Dag& g, NodeIndex x, NodeSet zs, NodeSet anc_z) {
  enum Direction { kUp = 0, kDown = 1 };  // kUp: entered from a child
  NodeSet visited[2];
  NodeSet reached;
  std::deque<std::pair<NodeIndex, Direction>> queue{{x, kUp}};
  while (!queue.empty()) {
    const auto [v, dir] = queue.front();
    queue.pop_front();
    if (visited[dir].contains(v)) continue;
    visited[dir].insert(v);
    const bool observed = zs.contains(v);
    if (!observed) reached.insert(v);
    if (dir == kUp && !observed) {
      for (NodeIndex p : g.parents_of(v)) queue.emplace_back(p, kUp);
      for (NodeIndex c : g.children_of(v)) queue.emplace_back(c, kDown);
    } else if (dir == kDown) {
      if (!observed) {
        for (NodeIndex c : g.children_of(v)) queue.emplace_back(c, kDown);
      }
      if (anc_z.contains(v)) {
        for (NodeIndex p : g.parents_of(v)) queue.emplace_back(p, kUp);
      }
    }
  }
  return reached;
}

}  // namespace

bool d_separated(const Dag& g, NodeSet xs, NodeSet ys, NodeSet zs) {
  check_query(g, xs, ys, zs);
  const NodeSet anc_z = ancestors(g, zs);
  for (NodeIndex x : xs) {
    const NodeSet reached = reachable(g, x, zs, anc_z);
    for (NodeIndex y : ys) {
      if (reached.contains(y)) return false;
    }
  }
  return true;
}

std::vector<Path> simple_paths(const Dag& g, NodeIndex x, NodeIndex y) {
  std::vector<Path> out;
  Path current{x};
  NodeSet on_path{x};
  std::function<void(NodeIndex)> extend = [&](NodeIndex v) {
    if (v == y) {
      out.push_back(current);
      return;
    }
    const NodeSet next = (g.parents_of(v) | g.children_of(v)) - on_path;
    for (NodeIndex w : next) {
      current.push_back(w);
      on_path.insert(w);
      extend(w);
      on_path.erase(w);
      current.pop_back();
    }
  };
  extend(x);
  return out;
}

bool d_separated_bruteforce(const Dag& g, NodeSet xs, NodeSet ys, NodeSet zs) {
  if (g.size() > kBruteForceMaxNodes) {
    throw std::invalid_argument("brute-force d-separation is limited to " +
                                std::to_string(kBruteForceMaxNodes) + " nodes");
  }
  check_query(g, xs, ys, zs);
  // c is an ancestor of zs iff some member of zs is reachable from c along
  // directed edges (c itself included).
  auto is_ancestor_of_z = [&](NodeIndex c) {
    std::vector<NodeIndex> stack{c};
    NodeSet seen{c};
    while (!stack.empty()) {
      const NodeIndex v = stack.back();
      stack.pop_back();
      if (zs.contains(v)) return true;
      for (NodeIndex w : g.children_of(v)) {
        if (!seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    return false;
  };
  for (NodeIndex x : xs) {
    for (NodeIndex y : ys) {
      for (const Path& p : simple_paths(g, x, y)) {
        bool connecting = true;
        for (int i = 1; i + 1 < static_cast<int>(p.size()) && connecting; ++i) {
          if (is_collider(g, p, i)) {
            connecting = is_ancestor_of_z(p[i]);
          } else {
            connecting = !zs.contains(p[i]);
          }
        }
        if (connecting) return false;
      }
    }
  }
  return true;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('A' + i));
  return out;
}

void for_each_dag(int n, const std::function<void(const Dag&)>& fn) {
  if (n < 0 || n > kEnumerateMaxNodes) {
    throw std::invalid_argument("DAG enumeration is limited to " + std::to_string(kEnumerateMaxNodes) +
                                " nodes");
  }
  std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  const auto labels = default_labels(n);
  std::vector<int> state(pairs.size(), 0);  // 0 none, 1 a->b, 2 b->a
  while (true) {
    std::vector<NodeSet> parent_sets(n);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto [a, b] = pairs[i];
      if (state[i] == 1) edges.push_back({a, b});
      if (state[i] == 2) edges.push_back({b, a});
    }
    for (const Edge& e : edges) parent_sets[e.child].insert(e.parent);
    // Acyclic iff repeatedly stripping parentless nodes empties the graph.
    NodeSet remaining = NodeSet::range(n);
    bool progress = true;
    while (progress && !remaining.empty()) {
      progress = false;
      for (NodeIndex v : remaining) {
        if (!parent_sets[v].intersects(remaining)) {
          remaining.erase(v);
          progress = true;
        }
      }
    }
    if (remaining.empty()) fn(Dag(labels, edges));

    std::size_t i = 0;
    while (i < state.size() && state[i] == 2) state[i++] = 0;
    if (i == state.size()) break;
    ++state[i];
  }
}

std::vector<Dag> enumerate_dags(int n) {
  std::vector<Dag> out;
  for_each_dag(n, [&](const Dag& g) { out.push_back(g); });
  return out;
}

}  // namespace kassoc
