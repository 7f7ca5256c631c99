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

#include "kassoc/scenarios.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "kassoc/error.hpp"

namespace kassoc {
namespace {

using json = nlohmann::json;
using Row = std::vector<Rational>;

Cpt coin(NodeIndex child, const Rational& p_one) { return Cpt(child, {}, {Row{1 - p_one, p_one}}); }

Row bernoulli_row(bool one, const Rational& flip) { return one ? Row{flip, 1 - flip} : Row{1 - flip, flip}; }

Cpt noisy_copy(NodeIndex child, NodeIndex parent, const Rational& flip) {
  return Cpt(child, {parent}, {bernoulli_row(false, flip), bernoulli_row(true, flip)});
}

/// Binary child of binary parents: fn(parent values) flipped with `flip`.
Cpt noisy_function(NodeIndex child, std::vector<NodeIndex> parents, const Rational& flip,
                   const std::function<bool(const std::vector<int>&)>& fn) {
  const int k = static_cast<int>(parents.size());
  std::vector<Row> rows;
  for (int code = 0; code < (1 << k); ++code) {
    std::vector<int> vals(k);
    for (int i = 0; i < k; ++i) vals[i] = (code >> (k - 1 - i)) & 1;
    rows.push_back(bernoulli_row(fn(vals), flip));
  }
  return Cpt(child, std::move(parents), std::move(rows));
}

Dag make_dag(std::vector<std::string> labels, std::initializer_list<std::string> edges) {
  std::vector<std::string> e(edges);
  return Dag::parse(std::move(labels), e);
}

Scenario discrete(std::string name, Dag dag, std::vector<Cpt> cpts, std::vector<int> cards,
                  std::map<std::string, std::string> params) {
  std::sort(cpts.begin(), cpts.end(), [](const Cpt& a, const Cpt& b) { return a.child() < b.child(); });
  Scenario s(std::move(name), std::move(dag), DiscretePayload{std::move(cards), std::move(cpts)},
             std::move(params));
  s.annotate();
  return s;
}

void require_open_unit(const Rational& v, const char* what) {
  if (v <= 0 || v >= 1) throw std::invalid_argument(std::string(what) + " must lie strictly between 0 and 1");
}

// JSON field access with error messages that name the field.

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw InputError("scenario field '" + path + "' must be an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError("scenario field '" + (path.empty() ? key : path + "." + key) + "' is missing");
  return *it;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw InputError("scenario field '" + path + "' must be a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw InputError("scenario field '" + path + "' must be an array");
  return j;
}

Rational as_rational(const json& j, const std::string& path) {
  try {
    return parse_rational(as_string(j, path));
  } catch (const InputError& e) {
    throw InputError("scenario field '" + path + "': " + e.what());
  }
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

}  // namespace

std::string_view to_string(PayloadType t) {
  switch (t) {
    case PayloadType::kDiscrete: return "discrete";
    case PayloadType::kGaussian: return "gaussian";
    case PayloadType::kGraph: return "graph";
  }
  return "unknown";
}

Scenario::Scenario(std::string name, Dag dag, Payload payload, std::map<std::string, std::string> params)
    : name_(std::move(name)), dag_(std::move(dag)), payload_(std::move(payload)), params_(std::move(params)) {
  if (name_.empty()) throw std::invalid_argument("scenario name is empty");
  if (const auto* d = std::get_if<DiscretePayload>(&payload_)) {
    if (static_cast<int>(d->cardinalities.size()) != dag_.size()) {
      throw std::invalid_argument("one cardinality per node is required");
    }
    if (static_cast<int>(d->cpts.size()) != dag_.size()) throw std::invalid_argument("one CPT per node is required");
    for (int i = 0; i < dag_.size(); ++i) {
      if (d->cpts[i].child() != i) throw std::invalid_argument("CPTs must be ordered by child");
      if (d->cpts[i].child_cardinality() != d->cardinalities[i]) {
        throw std::invalid_argument("CPT for " + dag_.label(i) + " disagrees with its cardinality");
      }
    }
    DiscreteJoint j = joint_from_cpts(dag_, d->cpts);
    joint_ = DiscreteJoint(dag_.labels(), j.cardinalities(), j.table());
  } else if (const auto* g = std::get_if<GaussianSystem>(&payload_)) {
    if (g->labels() != dag_.labels() || g->dag().edges() != dag_.edges()) {
      throw std::invalid_argument("Gaussian coefficients do not match the scenario graph");
    }
  }
}

PayloadType Scenario::type() const {
  if (std::holds_alternative<DiscretePayload>(payload_)) return PayloadType::kDiscrete;
  if (std::holds_alternative<GaussianSystem>(payload_)) return PayloadType::kGaussian;
  return PayloadType::kGraph;
}

IndependenceOracle Scenario::oracle() const {
  if (joint_) return IndependenceOracle::from_joint(*joint_);
  if (const auto* g = std::get_if<GaussianSystem>(&payload_)) return IndependenceOracle::from_gaussian(*g);
  return IndependenceOracle::from_graph(dag_);
}

Scenario& Scenario::annotate(AuditOptions opts) {
  annotations_ = audit(dag_, oracle(), opts);
  return *this;
}

Scenario noisy_xor(const Rational& p) {
  if (p < 0 || p >= Rational(1, 2)) throw std::invalid_argument("noisy xor needs 0 <= p < 1/2");
  // X=0, Y=1, Z=2
  Dag g = make_dag({"X", "Y", "Z"}, {"X->Y", "Z->Y"});
  const Rational half(1, 2);
  std::vector<Cpt> cpts{coin(0, half), coin(2, half),
                        noisy_function(1, {0, 2}, p, [](const auto& v) { return (v[0] ^ v[1]) == 1; })};
  return discrete("example1", std::move(g), std::move(cpts), {2, 2, 2}, {{"p", to_string(p)}});
}

Scenario xor_with_context(const Rational& p, const Rational& q) {
  require_open_unit(p, "p");
  if (q <= 0 || q >= Rational(1, 2)) throw std::invalid_argument("q must lie strictly between 0 and 1/2");
  // W=0, X=1, Y=2, Z=3
  Dag g = make_dag({"W", "X", "Y", "Z"}, {"W->Y", "X->Y", "Z->Y"});
  const Rational half(1, 2);
  std::vector<Cpt> cpts{coin(0, p), coin(1, half), coin(3, half),
                        noisy_function(2, {0, 1, 3}, q, [](const auto& v) { return ((v[1] ^ v[2]) & v[0]) == 1; })};
  return discrete("example2", std::move(g), std::move(cpts), {2, 2, 2, 2},
                  {{"p", to_string(p)}, {"q", to_string(q)}});
}

Scenario cancelling_paths_3(const Rational& alpha, const Rational& beta) {
  if (alpha == 0 || beta == 0) throw std::invalid_argument("cancelling-path coefficients must be non-zero");
  const Rational gamma = alpha * beta;
  // X=0, Y=1, Z=2
  RationalMatrix b = RationalMatrix::Zero(3, 3);
  b(2, 0) = alpha;
  b(1, 2) = beta;
  b(1, 0) = -gamma;
  GaussianSystem sys({"X", "Y", "Z"}, b, RationalVector::Ones(3));
  Dag g = sys.dag();
  Scenario s("cancel3", std::move(g), std::move(sys),
             {{"alpha", to_string(alpha)}, {"beta", to_string(beta)}, {"gamma", to_string(gamma)}});
  s.annotate();
  return s;
}

Scenario cancelling_paths_4(const Rational& a, const Rational& b, const Rational& c) {
  if (a == 0 || b == 0 || c == 0) throw std::invalid_argument("cancelling-path coefficients must be non-zero");
  // W=0, X=1, Y=2, Z=3
  RationalMatrix m = RationalMatrix::Zero(4, 4);
  m(3, 1) = a;
  m(0, 3) = b;
  m(2, 0) = c;
  m(2, 1) = -(a * b * c);
  GaussianSystem sys({"W", "X", "Y", "Z"}, m, RationalVector::Ones(4));
  Dag g = sys.dag();
  Scenario s("cancel4", std::move(g), std::move(sys),
             {{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)}, {"d", to_string(Rational(-(a * b * c)))}});
  s.annotate();
  return s;
}

Scenario baseline(BaselineKind kind, const Rational& strength) {
  if (strength <= 0 || strength >= 1 || strength == Rational(1, 2)) {
    throw std::invalid_argument("baseline strength must avoid 0, 1/2 and 1");
  }
  const Rational prior(1, 3);
  std::map<std::string, std::string> params{{"prior", to_string(prior)}, {"strength", to_string(strength)}};
  // X=0, Y=1, Z=2
  switch (kind) {
    case BaselineKind::kChain:
      return discrete("chain", make_dag({"X", "Y", "Z"}, {"X->Y", "Y->Z"}),
                      {coin(0, prior), noisy_copy(1, 0, strength), noisy_copy(2, 1, strength)}, {2, 2, 2}, params);
    case BaselineKind::kFork:
      return discrete("fork", make_dag({"X", "Y", "Z"}, {"Y->X", "Y->Z"}),
                      {coin(1, prior), noisy_copy(0, 1, strength), noisy_copy(2, 1, strength)}, {2, 2, 2}, params);
    case BaselineKind::kCollider:
      return discrete("collider", make_dag({"X", "Y", "Z"}, {"X->Y", "Z->Y"}),
                      {coin(0, prior), coin(2, prior),
                       noisy_function(1, {0, 2}, strength, [](const auto& v) { return (v[0] & v[1]) == 1; })},
                      {2, 2, 2}, params);
  }
  throw std::invalid_argument("unknown baseline kind");
}

Scenario xor_chain() {
  const Rational half(1, 2), flip(1, 4);
  // U=0, W=1, X=2, Y=3, Z=4
  Dag g = make_dag({"U", "W", "X", "Y", "Z"}, {"X->U", "U->Z", "W->Z", "W->Y"});
  std::vector<Cpt> cpts{coin(2, half), noisy_copy(0, 2, flip), coin(1, half), noisy_copy(3, 1, flip),
                        noisy_function(4, {0, 1}, flip, [](const auto& v) { return (v[0] ^ v[1]) == 1; })};
  return discrete("xor-chain", std::move(g), std::move(cpts), {2, 2, 2, 2, 2},
                  {{"copy_flip", to_string(flip)}, {"xor_flip", to_string(flip)}});
}

Scenario xor_noncollider() {
  const Rational half(1, 2), copy_flip(1, 4), xor_flip(1, 4);
  // W=0, X=1, Y=2, Z=3
  Dag g = make_dag({"W", "X", "Y", "Z"}, {"W->Y", "Y->X", "Z->X"});
  std::vector<Cpt> cpts{coin(0, half), coin(3, half), noisy_copy(2, 0, copy_flip),
                        noisy_function(1, {2, 3}, xor_flip, [](const auto& v) { return (v[0] ^ v[1]) == 1; })};
  return discrete("noisy-copy", std::move(g), std::move(cpts), {2, 2, 2, 2},
                  {{"copy_flip", to_string(copy_flip)}, {"xor_flip", to_string(xor_flip)}});
}

Scenario transitivity_failure() {
  const Rational half(1, 2), flip(1, 4);
  // X=0, Y=1, Z=2. Y = 2 * copy(X) + coin.
  Dag g = make_dag({"X", "Y", "Z"}, {"X->Y", "Y->Z"});
  std::vector<Row> y_rows;
  for (int x = 0; x < 2; ++x) {
    const Rational p1 = x == 1 ? 1 - flip : flip;
    y_rows.push_back(Row{(1 - p1) * half, (1 - p1) * half, p1 * half, p1 * half});
  }
  std::vector<Row> z_rows;
  for (int y = 0; y < 4; ++y) z_rows.push_back(bernoulli_row((y & 1) == 1, flip));
  std::vector<Cpt> cpts{coin(0, half), Cpt(1, {0}, std::move(y_rows)), Cpt(2, {1}, std::move(z_rows))};
  return discrete("transitivity", std::move(g), std::move(cpts), {2, 4, 2}, {{"flip", to_string(flip)}});
}

std::vector<std::string> builtin_names() {
  return {"example1", "example2", "cancel3", "cancel4", "chain", "fork", "collider", "xor-chain", "noisy-copy", "transitivity"};
}

Scenario builtin_scenario(std::string_view name) {
  if (name == "example1") return noisy_xor();
  if (name == "example2") return xor_with_context();
  if (name == "cancel3") return cancelling_paths_3();
  if (name == "cancel4") return cancelling_paths_4();
  if (name == "chain") return baseline(BaselineKind::kChain);
  if (name == "fork") return baseline(BaselineKind::kFork);
  if (name == "collider") return baseline(BaselineKind::kCollider);
  if (name == "xor-chain") return xor_chain();
  if (name == "noisy-copy") return xor_noncollider();
  if (name == "transitivity") return transitivity_failure();
  throw InputError("unknown builtin scenario '" + std::string(name) + "'");
}

json to_json(const Scenario& s) {
  json j;
  j["name"] = s.name();
  j["nodes"] = s.labels();
  json edges = json::array();
  for (const Edge& e : s.dag().edges()) edges.push_back(s.dag().edge_string(e));
  j["edges"] = edges;
  json payload;
  payload["type"] = std::string(to_string(s.type()));
  if (const auto* d = std::get_if<DiscretePayload>(&s.payload())) {
    payload["cardinalities"] = d->cardinalities;
    json cpts = json::array();
    for (const Cpt& c : d->cpts) {
      json parents = json::array();
      for (NodeIndex p : c.parents()) parents.push_back(s.dag().label(p));
      json rows = json::array();
      for (const Row& r : c.rows()) {
        json row = json::array();
        for (const Rational& v : r) row.push_back(to_string(v));
        rows.push_back(row);
      }
      cpts.push_back({{"child", s.dag().label(c.child())}, {"parents", parents}, {"rows", rows}});
    }
    payload["cpts"] = cpts;
  } else if (const auto* g = std::get_if<GaussianSystem>(&s.payload())) {
    json coefs = json::array();
    for (const Edge& e : s.dag().edges()) {
      coefs.push_back({{"parent", s.dag().label(e.parent)},
                       {"child", s.dag().label(e.child)},
                       {"weight", to_string(g->coefficients()(e.child, e.parent))}});
    }
    json noise = json::array();
    for (int i = 0; i < g->size(); ++i) noise.push_back(to_string(g->noise()(i)));
    payload["coefficients"] = coefs;
    payload["noise"] = noise;
  }
  j["payload"] = payload;
  j["params"] = s.params();
  return j;
}

Scenario scenario_from_json(const json& j) {
  if (!j.is_object()) throw InputError("scenario document must be a JSON object");
  const std::string name = as_string(field(j, "name", ""), "name");

  std::vector<std::string> labels;
  const json& nodes = as_array(field(j, "nodes", ""), "nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) labels.push_back(as_string(nodes[i], at("nodes", i)));
  std::vector<std::string> edge_strings;
  const json& edges = as_array(field(j, "edges", ""), "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) edge_strings.push_back(as_string(edges[i], at("edges", i)));

  Dag dag;
  try {
    dag = Dag::parse(labels, edge_strings);
  } catch (const InputError& e) {
    throw InputError(std::string("scenario field 'edges': ") + e.what());
  } catch (const std::exception& e) {
    throw InputError(std::string("scenario fields 'nodes'/'edges': ") + e.what());
  }
  auto node = [&](const json& v, const std::string& path) {
    try {
      return dag.index_of(as_string(v, path));
    } catch (const InputError& e) {
      throw InputError("scenario field '" + path + "': " + e.what());
    }
  };

  std::map<std::string, std::string> params;
  if (auto it = j.find("params"); it != j.end()) {
    if (!it->is_object()) throw InputError("scenario field 'params' must be an object");
    for (const auto& [k, v] : it->items()) params[k] = as_string(v, "params." + k);
  }

  const json& payload = field(j, "payload", "");
  const std::string type = as_string(field(payload, "type", "payload"), "payload.type");
  try {
    if (type == "graph") return Scenario(name, std::move(dag), GraphPayload{}, std::move(params));
    if (type == "discrete") {
      DiscretePayload d;
      const json& cards = as_array(field(payload, "cardinalities", "payload"), "payload.cardinalities");
      for (std::size_t i = 0; i < cards.size(); ++i) {
        if (!cards[i].is_number_integer() || cards[i].get<int>() < 1) {
          throw InputError("scenario field '" + at("payload.cardinalities", i) + "' must be a positive integer");
        }
        d.cardinalities.push_back(cards[i].get<int>());
      }
      const json& cpts = as_array(field(payload, "cpts", "payload"), "payload.cpts");
      for (std::size_t i = 0; i < cpts.size(); ++i) {
        const std::string path = at("payload.cpts", i);
        const NodeIndex child = node(field(cpts[i], "child", path), path + ".child");
        std::vector<NodeIndex> parents;
        const json& pj = as_array(field(cpts[i], "parents", path), path + ".parents");
        for (std::size_t k = 0; k < pj.size(); ++k) parents.push_back(node(pj[k], at(path + ".parents", k)));
        std::vector<Row> rows;
        const json& rj = as_array(field(cpts[i], "rows", path), path + ".rows");
        for (std::size_t r = 0; r < rj.size(); ++r) {
          const std::string rpath = at(path + ".rows", r);
          Row row;
          for (std::size_t c = 0; c < as_array(rj[r], rpath).size(); ++c) row.push_back(as_rational(rj[r][c], at(rpath, c)));
          rows.push_back(std::move(row));
        }
        try {
          d.cpts.emplace_back(child, std::move(parents), std::move(rows));
        } catch (const std::invalid_argument& e) {
          throw InputError("scenario field '" + path + "': " + e.what());
        }
      }
      std::sort(d.cpts.begin(), d.cpts.end(), [](const Cpt& a, const Cpt& b) { return a.child() < b.child(); });
      return Scenario(name, std::move(dag), std::move(d), std::move(params));
    }
    if (type == "gaussian") {
      const int n = dag.size();
      RationalMatrix b = RationalMatrix::Zero(n, n);
      const json& coefs = as_array(field(payload, "coefficients", "payload"), "payload.coefficients");
      for (std::size_t i = 0; i < coefs.size(); ++i) {
        const std::string path = at("payload.coefficients", i);
        const NodeIndex parent = node(field(coefs[i], "parent", path), path + ".parent");
        const NodeIndex child = node(field(coefs[i], "child", path), path + ".child");
        b(child, parent) = as_rational(field(coefs[i], "weight", path), path + ".weight");
      }
      const json& noise = as_array(field(payload, "noise", "payload"), "payload.noise");
      if (static_cast<int>(noise.size()) != n) throw InputError("scenario field 'payload.noise' needs one entry per node");
      RationalVector d(n);
      for (int i = 0; i < n; ++i) d(i) = as_rational(noise[i], at("payload.noise", i));
      try {
        GaussianSystem sys(labels, b, d);
        return Scenario(name, std::move(dag), std::move(sys), std::move(params));
      } catch (const std::invalid_argument& e) {
        throw InputError(std::string("scenario field 'payload.coefficients': ") + e.what());
      }
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("scenario field 'payload': ") + e.what());
  }
  throw InputError("scenario field 'payload.type' must be discrete, gaussian or graph (got '" + type + "')");
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read scenario file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("scenario file " + path.string() + " is not valid JSON: " + e.what());
  }
  return scenario_from_json(j);
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write scenario file " + path.string());
  out << to_json(s).dump(2) << '\n';
}

Scenario resolve_scenario(std::string_view spec) {
  constexpr std::string_view kPrefix = "builtin:";
  if (spec.starts_with(kPrefix)) return builtin_scenario(spec.substr(kPrefix.size()));
  Scenario s = load_scenario(std::filesystem::path(spec));
  if (s.size() <= kExhaustiveAuditLimit) s.annotate();
  return s;
}

ContinuousDataset sign_product_sampler(std::int64_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample size must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::exponential_distribution<double> noise(1.0 / std::sqrt(2.0));
  ContinuousDataset out{{"X", "Y", "Z"}, Eigen::MatrixXd(n, 3)};
  for (std::int64_t i = 0; i < n; ++i) {
    const double x = normal(rng);
    const double z = normal(rng);
    const double e = noise(rng);
    const double sign = (x * z > 0) - (x * z < 0);
    out.values(i, 0) = x;
    out.values(i, 1) = sign * e;
    out.values(i, 2) = z;
  }
  return out;
}

Dataset discretize_signs(const ContinuousDataset& data) {
  Dataset out;
  out.labels = data.labels;
  out.cardinalities.assign(data.labels.size(), 2);
  out.values = (data.values.array() > 0.0).cast<int>();
  return out;
}

}  // namespace kassoc
