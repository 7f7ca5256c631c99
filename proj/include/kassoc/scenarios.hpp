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

#ifndef KASSOC_SCENARIOS_HPP_
#define KASSOC_SCENARIOS_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "kassoc/audit.hpp"
#include "kassoc/distribution.hpp"
#include "kassoc/gaussian.hpp"
#include "kassoc/graph.hpp"
#include "kassoc/oracle.hpp"
#include "kassoc/rational.hpp"

namespace kassoc {

enum class PayloadType { kDiscrete, kGaussian, kGraph };

std::string_view to_string(PayloadType t);

struct DiscretePayload {
  std::vector<int> cardinalities;
  std::vector<Cpt> cpts;  // one per node, ordered by child index

  friend bool operator==(const DiscretePayload&, const DiscretePayload&) = default;
};

struct GraphPayload {
  friend bool operator==(const GraphPayload&, const GraphPayload&) = default;
};

using Payload = std::variant<GraphPayload, DiscretePayload, GaussianSystem>;

/// Ground-truth graph plus a distribution that generates data from it.
class Scenario {
 public:
  /// Checks that the payload matches the graph: one CPT per node with the
  /// graph's parents (the joint is built to confirm it normalizes), or a
  /// coefficient pattern equal to the edge set. Mismatches raise
  /// std::invalid_argument.
  Scenario(std::string name, Dag dag, Payload payload, std::map<std::string, std::string> params = {});

  const std::string& name() const { return name_; }
  const Dag& dag() const { return dag_; }
  const Payload& payload() const { return payload_; }
  PayloadType type() const;
  const std::map<std::string, std::string>& params() const { return params_; }
  const std::vector<std::string>& labels() const { return dag_.labels(); }
  int size() const { return dag_.size(); }

  /// Exact joint for discrete payloads, nullopt otherwise.
  const std::optional<DiscreteJoint>& joint() const { return joint_; }

  /// Exact oracle for the payload (graph, discrete or Gaussian).
  IndependenceOracle oracle() const;

  /// Verified assumption report; filled by annotate().
  const std::optional<AuditReport>& annotations() const { return annotations_; }
  Scenario& annotate(AuditOptions opts = {});

  /// Compares name, graph, payload and params; annotations are derived data.
  friend bool operator==(const Scenario& a, const Scenario& b) {
    return a.name_ == b.name_ && a.dag_ == b.dag_ && a.payload_ == b.payload_ && a.params_ == b.params_;
  }

 private:
  std::string name_;
  Dag dag_;
  Payload payload_;
  std::map<std::string, std::string> params_;
  std::optional<DiscreteJoint> joint_;
  std::optional<AuditReport> annotations_;
};

// Generators. Every returned scenario is annotated.

/// X, Z fair coins; Y = X xor Z, flipped with probability p (0 <= p < 1/2).
Scenario noisy_xor(const Rational& p = Rational(1, 4));

/// X, Z fair coins, W ~ Bernoulli(p); Y = ((X xor Z) and W) flipped with
/// probability q. Needs 0 < p < 1 and 0 < q < 1/2.
Scenario xor_with_context(const Rational& p = Rational(1, 2), const Rational& q = Rational(1, 4));

/// Linear X -> Z -> Y plus X -> Y with weight -alpha * beta, unit noise.
Scenario cancelling_paths_3(const Rational& alpha = Rational(1), const Rational& beta = Rational(1));

/// Linear X -> Z -> W -> Y plus X -> Y with weight -a * b * c, unit noise.
Scenario cancelling_paths_4(const Rational& a = Rational(1), const Rational& b = Rational(1),
                            const Rational& c = Rational(1));

enum class BaselineKind { kChain, kFork, kCollider };

/// Faithful three-node controls over X, Y, Z. Roots are Bernoulli(1/3);
/// copies flip with probability `strength`; the collider is a noisy AND.
Scenario baseline(BaselineKind kind, const Rational& strength = Rational(1, 5));

/// X -> U -> Z <- W <- Y with noisy copies on the outer edges and a noisy
/// xor of U and W at Z.
Scenario xor_chain();

/// W -> Y -> X <- Z: Y a noisy copy of W, X a noisy xor of Y and Z.
Scenario xor_noncollider();

/// X -> Y -> Z where Y = (noisy copy of X, fresh coin) and Z copies only the
/// coin, so X and Z are independent despite the chain.
Scenario transitivity_failure();

/// Registry names usable as builtin:<name>.
std::vector<std::string> builtin_names();
/// Unknown names raise InputError.
Scenario builtin_scenario(std::string_view name);

// Scenario files.

nlohmann::json to_json(const Scenario& s);
/// Malformed documents raise InputError naming the offending field.
Scenario scenario_from_json(const nlohmann::json& j);
Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& s, const std::filesystem::path& path);
/// "builtin:<name>" or a file path.
Scenario resolve_scenario(std::string_view spec);

// Continuous sign-product data: X, Z ~ N(0, 1) and Y = sign(XZ) * E with
// E exponential of rate 1/sqrt(2).

struct ContinuousDataset {
  std::vector<std::string> labels;  // X, Y, Z
  Eigen::MatrixXd values;
};

ContinuousDataset sign_product_sampler(std::int64_t n, std::uint64_t seed);

/// Binary dataset with 1 for strictly positive values and 0 otherwise.
Dataset discretize_signs(const ContinuousDataset& data);

}  // namespace kassoc

#endif  // KASSOC_SCENARIOS_HPP_
