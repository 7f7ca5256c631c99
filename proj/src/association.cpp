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

#include "kassoc/association.hpp"

#include <stdexcept>

#include "kassoc/error.hpp"

namespace kassoc {
namespace {

void require_distinct(const IndependenceOracle& o, std::initializer_list<NodeIndex> nodes) {
  NodeSet seen;
  for (NodeIndex n : nodes) {
    if (n < 0 || n >= o.size()) throw std::out_of_range("unknown variable index");
    if (seen.contains(n)) throw std::invalid_argument("association arguments must be distinct");
    seen.insert(n);
  }
}

}  // namespace

std::string_view to_string(AssociationKind k) {
  switch (k) {
    case AssociationKind::kNone: return "none";
    case AssociationKind::kOne: return "one";
    case AssociationKind::kTwo: return "two";
    case AssociationKind::kStrictTwo: return "strict-two";
  }
  return "unknown";
}

AssociationReport is_1_associated(const IndependenceOracle& o, NodeIndex x, NodeIndex y,
                                  AssociationQueryBudget budget) {
  require_distinct(o, {x, y});
  AssociationReport r;
  r.target = x;
  r.partners = NodeSet{y};
  const NodeSet pool = o.variables() - NodeSet{x, y};
  const int cap = budget.resolve(o.size());
  r.exhaustive = cap >= pool.size();
  const bool all_dependent = for_each_subset(pool, cap, [&](NodeSet s) {
    if (!o.independent(x, y, s)) return true;
    r.witness = CiStatement{NodeSet{x}, NodeSet{y}, s, true};
    return false;
  });
  r.kind = all_dependent ? AssociationKind::kOne : AssociationKind::kNone;
  return r;
}

AssociationReport is_2_associated(const IndependenceOracle& o, NodeIndex x, NodeIndex y1, NodeIndex y2,
                                  AssociationQueryBudget budget) {
  require_distinct(o, {x, y1, y2});
  AssociationReport r;
  r.target = x;
  r.partners = NodeSet{y1, y2};
  const NodeSet pool = o.variables() - NodeSet{x, y1, y2};
  // Each clause conditions on S plus one fixed node.
  const int cap = budget.resolve(o.size()) - 1;
  r.exhaustive = cap >= pool.size();
  const std::array<std::array<NodeIndex, 3>, 3> clauses{{{x, y1, y2}, {x, y2, y1}, {y1, y2, x}}};
  const bool all_dependent = cap < 0 || for_each_subset(pool, cap, [&](NodeSet s) {
    for (const auto& [a, b, fixed] : clauses) {
      if (o.independent(a, b, s.with(fixed))) {
        r.witness = CiStatement{NodeSet{a}, NodeSet{b}, s.with(fixed), true};
        return false;
      }
    }
    return true;
  });
  r.kind = all_dependent ? AssociationKind::kTwo : AssociationKind::kNone;
  return r;
}

AssociationReport is_strictly_2_associated(const IndependenceOracle& o, NodeIndex x, NodeIndex y1,
                                           NodeIndex y2, AssociationQueryBudget budget,
                                           StrictReading reading) {
  AssociationReport r = is_2_associated(o, x, y1, y2, budget);
  if (!r.holds()) return r;
  for (NodeIndex y : {y1, y2}) {
    const AssociationReport one = is_1_associated(o, x, y, budget);
    r.exhaustive = r.exhaustive && one.exhaustive;
    if (one.holds()) r.one_associated.insert(y);
  }
  const bool strict = reading == StrictReading::kNeither ? r.one_associated.empty()
                                                         : r.one_associated.size() < 2;
  r.kind = strict ? AssociationKind::kStrictTwo : AssociationKind::kTwo;
  return r;
}

bool strictly_associated_le2(const IndependenceOracle& o, NodeIndex x, NodeSet partners,
                             AssociationQueryBudget budget) {
  if (partners.size() == 1) return is_1_associated(o, x, partners.front(), budget).holds();
  if (partners.size() == 2) {
    const auto v = partners.to_vector();
    return is_strictly_2_associated(o, x, v[0], v[1], budget).kind == AssociationKind::kStrictTwo;
  }
  throw std::invalid_argument("association partner sets hold one or two nodes");
}

bool joint_dependence_disjunction(const IndependenceOracle& o, NodeIndex a, NodeIndex b, NodeIndex c) {
  require_distinct(o, {a, b, c});
  return !o.independent(NodeSet{a}, NodeSet{b, c}, {}) || !o.independent(NodeSet{b}, NodeSet{a, c}, {}) ||
         !o.independent(NodeSet{c}, NodeSet{a, b}, {});
}

std::vector<UnfaithfulTriple> find_unfaithful_triples(const IndependenceOracle& o,
                                                      AssociationQueryBudget budget) {
  const DiscreteJoint* joint = o.joint();
  if (joint == nullptr) {
    throw UnsupportedBackend("unfaithful-triple search needs the exact discrete backend, not " +
                             std::string(to_string(o.backend())));
  }
  std::vector<UnfaithfulTriple> out;
  const int n = o.size();
  const int cap = budget.resolve(n) - 1;
  for (NodeIndex a = 0; a < n; ++a) {
    for (NodeIndex b = a + 1; b < n; ++b) {
      if (!o.independent(a, b, {})) continue;
      for (NodeIndex c = b + 1; c < n; ++c) {
        if (!o.independent(a, c, {}) || !o.independent(b, c, {})) continue;
        if (mutually_independent(*joint, NodeSet{a, b, c})) continue;
        UnfaithfulTriple t;
        t.nodes = {a, b, c};
        t.minimal = true;
        const NodeSet pool = o.variables() - NodeSet{a, b, c};
        const std::array<std::array<NodeIndex, 3>, 3> pairs{{{a, b, c}, {a, c, b}, {b, c, a}}};
        if (cap >= 0) {
          for_each_subset(pool, cap, [&](NodeSet s) {
            for (const auto& [p, q, third] : pairs) {
              if (o.independent(p, q, s.with(third))) {
                t.minimal = false;
                t.minimality_witness = CiStatement{NodeSet{p}, NodeSet{q}, s.with(third), true};
                return false;
              }
            }
            return true;
          });
        }
        out.push_back(t);
      }
    }
  }
  return out;
}

AssociationScan scan_associations(const IndependenceOracle& o, AssociationQueryBudget budget,
                                  std::optional<NodeIndex> target) {
  AssociationScan scan;
  const int n = o.size();
  if (target && (*target < 0 || *target >= n)) throw std::out_of_range("unknown target");
  for (NodeIndex x = 0; x < n; ++x) {
    for (NodeIndex y = 0; y < n; ++y) {
      if (x == y) continue;
      if (target ? x != *target : y < x) continue;
      scan.pairs.push_back(is_1_associated(o, x, y, budget));
    }
  }
  for (NodeIndex x = 0; x < n; ++x) {
    if (target && x != *target) continue;
    for (NodeIndex y1 = 0; y1 < n; ++y1) {
      for (NodeIndex y2 = y1 + 1; y2 < n; ++y2) {
        if (y1 == x || y2 == x) continue;
        scan.triples.push_back(is_strictly_2_associated(o, x, y1, y2, budget));
      }
    }
  }
  if (o.joint() != nullptr) scan.unfaithful = find_unfaithful_triples(o, budget);
  return scan;
}

}  // namespace kassoc
