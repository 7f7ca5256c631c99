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

#ifndef KASSOC_ASSOCIATION_HPP_
#define KASSOC_ASSOCIATION_HPP_

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "kassoc/node_set.hpp"
#include "kassoc/oracle.hpp"

namespace kassoc {

/// Caps the size of conditioning sets tried when checking a "for all S"
/// dependence pattern. Unset means every subset (|V| - 2 in practice).
struct AssociationQueryBudget {
  std::optional<int> max_conditioning_size;

  /// Effective cap for a model over n variables.
  int resolve(int n) const { return max_conditioning_size.value_or(n); }
};

enum class AssociationKind {
  kNone,
  kOne,
  kTwo,        // 2-associated, but 1-associated to a partner
  kStrictTwo,  // 2-associated and 1-associated to neither partner
};

std::string_view to_string(AssociationKind k);

/// Which partners must fail to be 1-associated for a strict 2-association.
enum class StrictReading {
  kNeither,   // neither partner (default)
  kNotBoth,   // at least one partner
};

struct AssociationReport {
  NodeIndex target = 0;
  NodeSet partners;
  AssociationKind kind = AssociationKind::kNone;
  /// For a failed pattern: the first independence found (smallest
  /// conditioning set, ties broken lexicographically).
  std::optional<CiStatement> witness;
  /// Partners the target is 1-associated to (strict checks only).
  NodeSet one_associated;
  /// False when the budget cut the enumeration short; a positive answer then
  /// only holds up to the budget.
  bool exhaustive = true;

  bool holds() const { return kind != AssociationKind::kNone; }
};

/// x ⊥̸ y | S for every S ⊆ V \ {x, y}.
AssociationReport is_1_associated(const IndependenceOracle& o, NodeIndex x, NodeIndex y,
                                  AssociationQueryBudget budget = {});

/// For every S ⊆ V \ {x, y1, y2}: x ⊥̸ y1 | S ∪ {y2}, x ⊥̸ y2 | S ∪ {y1} and
/// y1 ⊥̸ y2 | S ∪ {x}. The budget caps the full conditioning-set size.
AssociationReport is_2_associated(const IndependenceOracle& o, NodeIndex x, NodeIndex y1, NodeIndex y2,
                                  AssociationQueryBudget budget = {});

/// 2-associated and not 1-associated to the partners (kStrictTwo), merely
/// 2-associated (kTwo), or neither (kNone).
AssociationReport is_strictly_2_associated(const IndependenceOracle& o, NodeIndex x, NodeIndex y1,
                                           NodeIndex y2, AssociationQueryBudget budget = {},
                                           StrictReading reading = StrictReading::kNeither);

/// x is 1-associated to the single member of `partners`, or strictly
/// 2-associated to the pair. Any other size raises std::invalid_argument.
bool strictly_associated_le2(const IndependenceOracle& o, NodeIndex x, NodeSet partners,
                             AssociationQueryBudget budget = {});

struct UnfaithfulTriple {
  std::array<NodeIndex, 3> nodes{};
  bool minimal = false;
  /// Why the triple is not minimal: a pair made independent given the third
  /// node plus some S.
  std::optional<CiStatement> minimality_witness;
};

/// Every triple (ascending, lexicographic) of pairwise marginally independent
/// variables whose joint does not factorize. Needs the discrete backend;
/// others raise UnsupportedBackend.
std::vector<UnfaithfulTriple> find_unfaithful_triples(const IndependenceOracle& o,
                                                      AssociationQueryBudget budget = {});

/// a ⊥̸ {b, c} or b ⊥̸ {a, c} or c ⊥̸ {a, b}: the set-query reading of
/// "not mutually independent". Works on any backend.
bool joint_dependence_disjunction(const IndependenceOracle& o, NodeIndex a, NodeIndex b, NodeIndex c);

struct AssociationScan {
  std::vector<AssociationReport> pairs;     // x < y
  std::vector<AssociationReport> triples;   // target x, partners y1 < y2
  std::vector<UnfaithfulTriple> unfaithful; // discrete backend only
};

/// Runs every 1- and 2-association check, optionally restricted to one
/// target (pairs are then reported with that target first).
AssociationScan scan_associations(const IndependenceOracle& o, AssociationQueryBudget budget = {},
                                  std::optional<NodeIndex> target = std::nullopt);

}  // namespace kassoc

#endif  // KASSOC_ASSOCIATION_HPP_
