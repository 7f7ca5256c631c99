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

#include "kassoc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <variant>

#include "kassoc/error.hpp"

namespace kassoc {
namespace {

struct GaussianPayload {
  GaussianSystem system;
  RationalMatrix covariance;
};

struct SamplePayload {
  Dataset data;
  GTestConfig cfg;
};

struct QueryKey {
  std::uint32_t a, b, given;
  friend bool operator==(const QueryKey&, const QueryKey&) = default;
};

struct QueryKeyHash {
  std::size_t operator()(const QueryKey& k) const {
    std::uint64_t h = (std::uint64_t{k.a} << 32) ^ k.b;
    h ^= std::uint64_t{k.given} * 0x9e3779b97f4a7c15ULL;
    return std::hash<std::uint64_t>{}(h);
  }
};

}  // namespace

struct IndependenceOracle::State {
  std::variant<Dag, DiscreteJoint, GaussianPayload, SamplePayload> payload;
  std::vector<std::string> labels;
  std::atomic<std::uint64_t> queries{0};
  std::mutex cache_mutex;
  std::unordered_map<QueryKey, bool, QueryKeyHash> cache;
};

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::kGraph: return "graph";
    case Backend::kDiscrete: return "discrete";
    case Backend::kGaussian: return "gaussian";
    case Backend::kGTest: return "gtest";
  }
  return "unknown";
}

IndependenceOracle IndependenceOracle::from_graph(Dag g) {
  auto s = std::make_shared<State>();
  s->labels = g.labels();
  s->payload = std::move(g);
  return IndependenceOracle(std::move(s));
}

IndependenceOracle IndependenceOracle::from_joint(DiscreteJoint d) {
  auto s = std::make_shared<State>();
  s->labels = d.labels();
  s->payload = std::move(d);
  return IndependenceOracle(std::move(s));
}

IndependenceOracle IndependenceOracle::from_gaussian(GaussianSystem sys) {
  auto s = std::make_shared<State>();
  s->labels = sys.labels();
  RationalMatrix cov = covariance_of(sys);
  s->payload = GaussianPayload{std::move(sys), std::move(cov)};
  return IndependenceOracle(std::move(s));
}

IndependenceOracle IndependenceOracle::from_samples(Dataset data, GTestConfig cfg) {
  if (!(cfg.alpha > 0 && cfg.alpha < 1)) throw std::invalid_argument("alpha must lie in (0, 1)");
  if (data.rows() == 0) throw std::invalid_argument("G-test oracle needs a non-empty dataset");
  auto s = std::make_shared<State>();
  s->labels = data.labels;
  s->payload = SamplePayload{std::move(data), cfg};
  return IndependenceOracle(std::move(s));
}

Backend IndependenceOracle::backend() const {
  return static_cast<Backend>(state_->payload.index());
}

int IndependenceOracle::size() const { return static_cast<int>(state_->labels.size()); }

const std::vector<std::string>& IndependenceOracle::labels() const { return state_->labels; }

NodeIndex IndependenceOracle::index_of(std::string_view label) const {
  const auto& ls = state_->labels;
  const auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) throw InputError("unknown variable '" + std::string(label) + "'");
  return static_cast<NodeIndex>(it - ls.begin());
}

std::string IndependenceOracle::format(NodeSet s) const {
  std::string out = "{";
  for (NodeIndex v : s) {
    if (out.size() > 1) out += ",";
    out += label(v);
  }
  return out + "}";
}

std::string IndependenceOracle::format(const CiStatement& st) const {
  return format(st.x) + (st.independent ? " _||_ " : " _/||_ ") + format(st.y) + " | " + format(st.given);
}

bool IndependenceOracle::independent(NodeSet xs, NodeSet ys, NodeSet given) const {
  if (!variables().contains_all(xs | ys | given)) throw std::out_of_range("query names an unknown variable");
  if (xs.empty() || ys.empty()) throw std::invalid_argument("independence query needs non-empty sets");
  if (xs.intersects(ys) || xs.intersects(given) || ys.intersects(given)) {
    throw std::invalid_argument("independence query sets must be pairwise disjoint");
  }
  state_->queries.fetch_add(1, std::memory_order_relaxed);
  // Every backend is symmetric in (xs, ys).
  const QueryKey key{std::min(xs.bits(), ys.bits()), std::max(xs.bits(), ys.bits()), given.bits()};
  {
    std::lock_guard lock(state_->cache_mutex);
    if (auto it = state_->cache.find(key); it != state_->cache.end()) return it->second;
  }
  const bool answer = std::visit(
      [&](const auto& p) -> bool {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, Dag>) {
          return d_separated(p, xs, ys, given);
        } else if constexpr (std::is_same_v<P, DiscreteJoint>) {
          return is_independent(p, xs, ys, given);
        } else if constexpr (std::is_same_v<P, GaussianPayload>) {
          // Jointly Gaussian: the sets are independent iff every cross pair is.
          for (NodeIndex x : xs) {
            for (NodeIndex y : ys) {
              if (!partial_correlation_zero(p.covariance, x, y, given)) return false;
            }
          }
          return true;
        } else {
          return g_test(p.data, xs, ys, given, p.cfg).independent;
        }
      },
      state_->payload);
  std::lock_guard lock(state_->cache_mutex);
  state_->cache.emplace(key, answer);
  return answer;
}

std::uint64_t IndependenceOracle::query_count() const { return state_->queries.load(); }

const Dag* IndependenceOracle::graph() const { return std::get_if<Dag>(&state_->payload); }

const DiscreteJoint* IndependenceOracle::joint() const {
  return std::get_if<DiscreteJoint>(&state_->payload);
}

const GaussianSystem* IndependenceOracle::gaussian() const {
  const auto* p = std::get_if<GaussianPayload>(&state_->payload);
  return p ? &p->system : nullptr;
}

const RationalMatrix* IndependenceOracle::covariance() const {
  const auto* p = std::get_if<GaussianPayload>(&state_->payload);
  return p ? &p->covariance : nullptr;
}

const Dataset* IndependenceOracle::dataset() const {
  const auto* p = std::get_if<SamplePayload>(&state_->payload);
  return p ? &p->data : nullptr;
}

}  // namespace kassoc
