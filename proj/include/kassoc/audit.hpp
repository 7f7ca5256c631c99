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

#ifndef KASSOC_AUDIT_HPP_
#define KASSOC_AUDIT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kassoc/association.hpp"
#include "kassoc/graph.hpp"
#include "kassoc/oracle.hpp"

namespace kassoc {

inline constexpr int kExhaustiveAuditLimit = 6;

struct AuditWitness {
  std::string description;
  std::optional<CiStatement> statement;

  friend bool operator==(const AuditWitness&, const AuditWitness&) = default;
};

struct AssumptionCheck {
  std::string name;
  bool holds = true;
  /// Number of premise-satisfying instances examined.
  long checked = 0;
  std::optional<AuditWitness> witness;  // first violation

  friend bool operator==(const AssumptionCheck&, const AssumptionCheck&) = default;
};

struct AuditReport {
  int variables = 0;
  /// Set when the model was too large for exhaustive enumeration and
  /// conditioning sets were capped.
  bool partial = false;
  std::vector<AssumptionCheck> checks;

  /// Lookup by name ("CMC", "AF", "2-AF", "OF", "2-OF(i)", "2-OF(ii)",
  /// "Assumption1"); std::out_of_range if absent.
  const AssumptionCheck& get(std::string_view name) const;
  bool holds(std::string_view name) const { return get(name).holds; }

  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

struct AuditOptions {
  /// Conditioning-set cap used when the model exceeds kExhaustiveAuditLimit.
  int partial_budget = 2;
};

/// Checks every assumption of the model (g, o) by enumeration. g is the
/// ground truth; o answers the distribution's independencies.
AuditReport audit(const Dag& g, const IndependenceOracle& o, AuditOptions opts = {});

}  // namespace kassoc

#endif  // KASSOC_AUDIT_HPP_
