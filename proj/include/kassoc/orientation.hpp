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

#ifndef KASSOC_ORIENTATION_HPP_
#define KASSOC_ORIENTATION_HPP_

#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "kassoc/association.hpp"
#include "kassoc/graph.hpp"
#include "kassoc/oracle.hpp"

namespace kassoc {

enum class AdjacencyEvidence {
  kNone,            // no association links the pair
  kOneAssociation,  // x and z are 1-associated
  kStrictTwo,       // x or z is strictly 2-associated to a pair holding the other
};

std::string_view to_string(AdjacencyEvidence e);

struct NonadjacencyReport {
  NodeIndex x = 0;
  NodeIndex z = 0;
  AdjacencyEvidence evidence = AdjacencyEvidence::kNone;
  /// For kStrictTwo: the node strictly 2-associated to the pair and the third
  /// node completing the pair, e.g. x s-2 {z, u} gives (x, u).
  std::optional<std::pair<NodeIndex, NodeIndex>> strict_witness;

  bool nonadjacent() const { return evidence == AdjacencyEvidence::kNone; }
};

/// Adjacency surrogate: x and z count as adjacent when they are
/// 1-associated, or when some u makes x s-2 {z, u} or z s-2 {x, u}. A strict
/// 2-association does not prove a shielded path, so a "true" answer here is
/// conservative and a kStrictTwo verdict is ambiguous.
NonadjacencyReport check_nonadjacency(const IndependenceOracle& o, NodeIndex x, NodeIndex z,
                                      AssociationQueryBudget budget = {});

using NodePair = std::pair<NodeIndex, NodeIndex>;  // stored with first < second

struct OrientationQuery {
  NodeIndex center = 0;
  NodeSet left;
  NodeSet right;
  AssociationQueryBudget budget;
  /// Proceed when a cross pair is only ambiguously adjacent (kStrictTwo);
  /// the verdict then carries a caveat.
  bool allow_ambiguous_shielding = false;
  /// Cross pairs already known to be non-adjacent, e.g. from a previous
  /// orientation of the inner triple.
  std::set<NodePair> known_nonadjacent;
};

enum class OrientationOutcome { kCollider, kNonCollider, kInconclusive };

std::string_view to_string(OrientationOutcome o);

/// Result of one "for every superset of `base`" dependence family.
struct DependenceFamily {
  NodeIndex x = 0;
  NodeIndex z = 0;
  NodeSet base;
  bool exclude_center = false;
  bool holds = true;
  int checked = 0;
  bool exhaustive = true;
  std::optional<CiStatement> witness;  // first independence, if any
};

struct OrientationVerdict {
  OrientationOutcome outcome = OrientationOutcome::kInconclusive;
  bool rule_i = false;
  bool rule_ii = false;
  std::vector<DependenceFamily> rule_i_checks;   // one per cross pair
  std::vector<DependenceFamily> rule_ii_checks;  // one per cross pair
  std::vector<Edge> oriented;                    // collider edges
  /// Non-collider: the first cross pair separated by a set holding the center.
  std::optional<NodePair> blocked_pair;
  /// Set when some cross pair was only ambiguously non-adjacent.
  bool caveat = false;
  std::vector<NonadjacencyReport> caveat_pairs;
  /// Neither rule fired on an unambiguous query: a detected failure of
  /// 2-orientation faithfulness.
  bool of_failure = false;
};

/// X ⊥̸ Z | S for every S ⊆ V \ {x, z} containing `base` (and, with
/// exclude_center, not containing `center`). The budget caps |S|.
DependenceFamily superset_dependence(const IndependenceOracle& o, NodeIndex x, NodeIndex z, NodeSet base,
                                     std::optional<NodeIndex> excluded, AssociationQueryBudget budget);

/// Rule i / rule ii families for one cross pair.
DependenceFamily rule_i_family(const IndependenceOracle& o, NodeIndex center, NodeSet left, NodeSet right,
                               NodeIndex x, NodeIndex z, AssociationQueryBudget budget);
DependenceFamily rule_ii_family(const IndependenceOracle& o, NodeIndex center, NodeSet left, NodeSet right,
                                NodeIndex x, NodeIndex z, AssociationQueryBudget budget);

/// Checks the query's premises and applies the orientation rule. Premise
/// failures raise PreconditionError.
OrientationVerdict orient(const IndependenceOracle& o, const OrientationQuery& q);

/// Neither rule fires on a premise-satisfying query with unambiguously
/// unshielded paths.
bool detect_of_failure(const IndependenceOracle& o, const OrientationQuery& q);

struct IterativeOrientation {
  OrientationVerdict verdict;
  std::set<NodePair> resolved;           // ambiguous pairs settled by an inner collider
  std::vector<OrientationVerdict> inner;  // inner verdicts, in resolution order
  int rounds = 0;
};

/// Repeatedly orients the inner triples (x, u, z) behind ambiguous cross
/// pairs; a collider x -> u <- z there explains the strict association and
/// marks (x, z) non-adjacent. Stops at a fixed point, then orients q.
IterativeOrientation orient_iteratively(const IndependenceOracle& o, OrientationQuery q);

}  // namespace kassoc

#endif  // KASSOC_ORIENTATION_HPP_
