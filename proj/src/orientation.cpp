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

#include "kassoc/orientation.hpp"

#include <stdexcept>
#include <string>

#include "kassoc/error.hpp"

namespace kassoc {
namespace {

NodePair ordered(NodeIndex a, NodeIndex b) { return a < b ? NodePair{a, b} : NodePair{b, a}; }

void check_shape(const IndependenceOracle& o, const OrientationQuery& q) {
  const NodeSet all = o.variables();
  if (!all.contains(q.center)) throw PreconditionError("orientation center is not a model variable");
  for (NodeSet side : {q.left, q.right}) {
    if (side.size() < 1 || side.size() > 2) throw PreconditionError("orientation sides hold one or two nodes");
    if (!all.contains_all(side)) throw PreconditionError("orientation side names an unknown variable");
    if (side.contains(q.center)) throw PreconditionError("orientation center lies in a side set");
  }
  if (q.left.intersects(q.right)) throw PreconditionError("orientation side sets overlap");
}

}  // namespace

std::string_view to_string(AdjacencyEvidence e) {
  switch (e) {
    case AdjacencyEvidence::kNone: return "none";
    case AdjacencyEvidence::kOneAssociation: return "one-association";
    case AdjacencyEvidence::kStrictTwo: return "strict-two";
  }
  return "unknown";
}

std::string_view to_string(OrientationOutcome o) {
  switch (o) {
    case OrientationOutcome::kCollider: return "collider";
    case OrientationOutcome::kNonCollider: return "non-collider";
    case OrientationOutcome::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

NonadjacencyReport check_nonadjacency(const IndependenceOracle& o, NodeIndex x, NodeIndex z,
                                      AssociationQueryBudget budget) {
  if (x == z) throw std::invalid_argument("check_nonadjacency needs two distinct nodes");
  NonadjacencyReport r{x, z, AdjacencyEvidence::kNone, std::nullopt};
  if (is_1_associated(o, x, z, budget).holds()) {
    r.evidence = AdjacencyEvidence::kOneAssociation;
    return r;
  }
  for (NodeIndex u : o.variables() - NodeSet{x, z}) {
    for (auto [a, b] : {NodePair{x, z}, NodePair{z, x}}) {
      if (strictly_associated_le2(o, a, NodeSet{b, u}, budget)) {
        r.evidence = AdjacencyEvidence::kStrictTwo;
        r.strict_witness = NodePair{a, u};
        return r;
      }
    }
  }
  return r;
}

DependenceFamily superset_dependence(const IndependenceOracle& o, NodeIndex x, NodeIndex z, NodeSet base,
                                     std::optional<NodeIndex> excluded, AssociationQueryBudget budget) {
  DependenceFamily f;
  f.x = x;
  f.z = z;
  f.base = base;
  f.exclude_center = excluded.has_value();
  NodeSet pool = o.variables() - NodeSet{x, z} - base;
  if (excluded) pool.erase(*excluded);
  const int cap = budget.resolve(o.size()) - base.size();
  f.exhaustive = cap >= pool.size();
  for_each_subset(pool, cap, [&](NodeSet extra) {
    const NodeSet s = base | extra;
    ++f.checked;
    if (!o.independent(x, z, s)) return true;
    f.holds = false;
    f.witness = CiStatement{NodeSet{x}, NodeSet{z}, s, true};
    return false;
  });
  return f;
}

DependenceFamily rule_i_family(const IndependenceOracle& o, NodeIndex center, NodeSet left, NodeSet right,
                               NodeIndex x, NodeIndex z, AssociationQueryBudget budget) {
  const NodeSet base = (left.without(x) | right.without(z)).with(center);
  return superset_dependence(o, x, z, base, std::nullopt, budget);
}

DependenceFamily rule_ii_family(const IndependenceOracle& o, NodeIndex center, NodeSet left, NodeSet right,
                                NodeIndex x, NodeIndex z, AssociationQueryBudget budget) {
  const NodeSet base = left.without(x) | right.without(z);
  return superset_dependence(o, x, z, base, center, budget);
}

OrientationVerdict orient(const IndependenceOracle& o, const OrientationQuery& q) {
  check_shape(o, q);
  for (NodeSet side : {q.left, q.right}) {
    if (!strictly_associated_le2(o, q.center, side, q.budget)) {
      throw PreconditionError(o.label(q.center) + " is not " + (side.size() == 1 ? "1-associated" : "strictly 2-associated") +
                              " to " + o.format(side));
    }
  }
  OrientationVerdict v;
  for (NodeIndex x : q.left) {
    for (NodeIndex z : q.right) {
      if (q.known_nonadjacent.contains(ordered(x, z))) continue;
      NonadjacencyReport adj = check_nonadjacency(o, x, z, q.budget);
      if (adj.nonadjacent()) continue;
      if (adj.evidence == AdjacencyEvidence::kStrictTwo && q.allow_ambiguous_shielding) {
        v.caveat = true;
        v.caveat_pairs.push_back(adj);
        continue;
      }
      throw PreconditionError(o.label(x) + " and " + o.label(z) + " may be adjacent (" +
                              std::string(to_string(adj.evidence)) + ")");
    }
  }

  v.rule_i = true;
  v.rule_ii = true;
  for (NodeIndex x : q.left) {
    for (NodeIndex z : q.right) {
      DependenceFamily fi = rule_i_family(o, q.center, q.left, q.right, x, z, q.budget);
      DependenceFamily fii = rule_ii_family(o, q.center, q.left, q.right, x, z, q.budget);
      if (!fi.holds) {
        v.rule_i = false;
        if (!v.blocked_pair) v.blocked_pair = NodePair{x, z};
      }
      v.rule_ii = v.rule_ii && fii.holds;
      v.rule_i_checks.push_back(std::move(fi));
      v.rule_ii_checks.push_back(std::move(fii));
    }
  }

  if (v.rule_i) {
    v.outcome = OrientationOutcome::kCollider;
    v.blocked_pair.reset();
    for (NodeIndex p : q.left | q.right) v.oriented.push_back(Edge{p, q.center});
  } else if (v.rule_ii) {
    v.outcome = OrientationOutcome::kNonCollider;
  } else {
    v.outcome = OrientationOutcome::kInconclusive;
    v.blocked_pair.reset();
    v.of_failure = !v.caveat;
  }
  return v;
}

bool detect_of_failure(const IndependenceOracle& o, const OrientationQuery& q) {
  OrientationQuery strict = q;
  strict.allow_ambiguous_shielding = false;
  const OrientationVerdict v = orient(o, strict);
  return !v.rule_i && !v.rule_ii;
}

IterativeOrientation orient_iteratively(const IndependenceOracle& o, OrientationQuery q) {
  check_shape(o, q);
  IterativeOrientation out;
  bool progress = true;
  while (progress) {
    progress = false;
    ++out.rounds;
    for (NodeIndex x : q.left) {
      for (NodeIndex z : q.right) {
        const NodePair key = ordered(x, z);
        if (q.known_nonadjacent.contains(key)) continue;
        const NonadjacencyReport adj = check_nonadjacency(o, x, z, q.budget);
        if (adj.evidence != AdjacencyEvidence::kStrictTwo) continue;
        const NodeIndex u = adj.strict_witness->second;
        OrientationQuery inner;
        inner.center = u;
        inner.left = NodeSet{x};
        inner.right = NodeSet{z};
        inner.budget = q.budget;
        inner.known_nonadjacent = q.known_nonadjacent;
        inner.known_nonadjacent.insert(key);
        try {
          OrientationVerdict iv = orient(o, inner);
          if (iv.outcome == OrientationOutcome::kCollider && !iv.caveat) {
            q.known_nonadjacent.insert(key);
            out.resolved.insert(key);
            out.inner.push_back(std::move(iv));
            progress = true;
          }
        } catch (const PreconditionError&) {
          // Inner triple not orientable (yet).
        }
      }
    }
  }
  q.allow_ambiguous_shielding = true;
  out.verdict = orient(o, q);
  return out;
}

}  // namespace kassoc
