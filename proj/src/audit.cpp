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

#include "kassoc/audit.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "kassoc/orientation.hpp"

namespace kassoc {
namespace {

class StrictCache {
 public:
  StrictCache(const IndependenceOracle& o, AssociationQueryBudget b) : o_(o), budget_(b) {}

  bool operator()(NodeIndex y, NodeSet partners) {
    const auto key = std::make_pair(y, partners.bits());
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(key, strictly_associated_le2(o_, y, partners, budget_)).first;
    return it->second;
  }

 private:
  const IndependenceOracle& o_;
  AssociationQueryBudget budget_;
  std::map<std::pair<NodeIndex, std::uint32_t>, bool> memo_;
};

AssumptionCheck named(std::string name) {
  AssumptionCheck c;
  c.name = std::move(name);
  return c;
}

void fail(AssumptionCheck& c, std::string description, std::optional<CiStatement> st = std::nullopt) {
  if (!c.holds) return;
  c.holds = false;
  c.witness = AuditWitness{std::move(description), std::move(st)};
}

AssumptionCheck check_cmc(const Dag& g, const IndependenceOracle& o, bool partial, int cap) {
  AssumptionCheck c = named("CMC");
  const int n = g.size();
  if (partial) {
    for (NodeIndex x = 0; x < n && c.holds; ++x) {
      for (NodeIndex y = x + 1; y < n && c.holds; ++y) {
        for_each_subset(g.nodes() - NodeSet{x, y}, cap, [&](NodeSet s) {
          if (!d_separated(g, x, y, s)) return true;
          ++c.checked;
          if (o.independent(x, y, s)) return true;
          fail(c, "d-separation without independence", CiStatement{NodeSet{x}, NodeSet{y}, s, false});
          return false;
        });
      }
    }
    return c;
  }
  // Every assignment of nodes to {unused, A, B, S}.
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 4;
  for (long code = 0; code < total && c.holds; ++code) {
    NodeSet a, b, s;
    long rest = code;
    for (NodeIndex v = 0; v < n; ++v, rest /= 4) {
      switch (rest % 4) {
        case 1: a.insert(v); break;
        case 2: b.insert(v); break;
        case 3: s.insert(v); break;
        default: break;
      }
    }
    if (a.empty() || b.empty() || a.front() > b.front()) continue;
    if (!d_separated(g, a, b, s)) continue;
    ++c.checked;
    if (!o.independent(a, b, s)) fail(c, "d-separation without independence", CiStatement{a, b, s, false});
  }
  return c;
}

AssumptionCheck check_af(const Dag& g, const IndependenceOracle& o, AssociationQueryBudget budget) {
  AssumptionCheck c = named("AF");
  for (const Edge& e : g.edges()) {
    ++c.checked;
    const AssociationReport r = is_1_associated(o, e.parent, e.child, budget);
    if (!r.holds()) fail(c, "edge " + g.edge_string(e) + " is separable", r.witness);
  }
  return c;
}

AssumptionCheck check_two_af(const Dag& g, StrictCache& strict) {
  AssumptionCheck c = named("2-AF");
  for (const Edge& e : g.edges()) {
    for (auto [x, y] : {std::pair{e.parent, e.child}, std::pair{e.child, e.parent}}) {
      ++c.checked;
      if (strict(x, NodeSet{y})) continue;
      bool found = false;
      for (NodeIndex u : graph_markov_blanket(g, x).without(y)) {
        if (strict(x, NodeSet{y, u})) {
          found = true;
          break;
        }
      }
      if (!found) {
        fail(c, g.label(x) + " is neither 1-associated to " + g.label(y) +
                    " nor strictly 2-associated to a blanket pair holding it");
      }
    }
  }
  return c;
}

AssumptionCheck check_of(const Dag& g, const IndependenceOracle& o, AssociationQueryBudget budget) {
  AssumptionCheck c = named("OF");
  const int n = g.size();
  for (NodeIndex y = 0; y < n; ++y) {
    for (NodeIndex x = 0; x < n; ++x) {
      for (NodeIndex z = x + 1; z < n; ++z) {
        if (x == y || z == y || !g.adjacent(x, y) || !g.adjacent(z, y) || g.adjacent(x, z)) continue;
        ++c.checked;
        const bool collider = g.has_edge(x, y) && g.has_edge(z, y);
        const DependenceFamily f = collider ? superset_dependence(o, x, z, NodeSet{y}, std::nullopt, budget)
                                            : superset_dependence(o, x, z, NodeSet{}, y, budget);
        if (!f.holds) {
          fail(c, std::string(collider ? "collider " : "non-collider ") + g.label(x) + "-" + g.label(y) + "-" +
                      g.label(z) + " lacks its dependence pattern",
               f.witness);
        }
      }
    }
  }
  return c;
}

struct TwoOfChecks {
  AssumptionCheck cond_i = named("2-OF(i)");
  AssumptionCheck cond_ii = named("2-OF(ii)");
  AssumptionCheck assumption1 = named("Assumption1");
};

std::string describe(const Dag& g, NodeSet left, NodeIndex y, NodeSet right) {
  return g.format(left) + " / " + g.label(y) + " / " + g.format(right);
}

TwoOfChecks check_two_of(const Dag& g, const IndependenceOracle& o, AssociationQueryBudget budget,
                         StrictCache& strict) {
  TwoOfChecks out;
  const int n = g.size();
  std::vector<NodeSet> sides;
  for (NodeIndex a = 0; a < n; ++a) {
    sides.push_back(NodeSet{a});
    for (NodeIndex b = a + 1; b < n; ++b) sides.push_back(NodeSet{a, b});
  }
  for (NodeIndex y = 0; y < n; ++y) {
    for (NodeSet left : sides) {
      if (left.contains(y) || !strict(y, left)) continue;
      for (NodeSet right : sides) {
        if (right.contains(y) || right.intersects(left) || right.front() < left.front()) continue;
        if (!strict(y, right)) continue;
        bool cross_adjacent = false;
        for (NodeIndex x : left) {
          for (NodeIndex z : right) cross_adjacent = cross_adjacent || g.adjacent(x, z);
        }
        const NodeSet pa = g.parents_of(y);
        const bool collider = pa.contains_all(left) && pa.contains_all(right);

        auto family_holds = [&](bool rule_i, std::optional<CiStatement>* witness) {
          for (NodeIndex x : left) {
            for (NodeIndex z : right) {
              DependenceFamily f = rule_i ? rule_i_family(o, y, left, right, x, z, budget)
                                          : rule_ii_family(o, y, left, right, x, z, budget);
              if (!f.holds) {
                *witness = f.witness;
                return false;
              }
            }
          }
          return true;
        };

        std::optional<CiStatement> w;
        if (collider) {
          ++out.assumption1.checked;
          if (!family_holds(true, &w)) {
            fail(out.assumption1, "collider " + describe(g, left, y, right) + " lacks rule i dependence", w);
            if (!cross_adjacent) {
              ++out.cond_i.checked;
              fail(out.cond_i, "collider " + describe(g, left, y, right) + " lacks rule i dependence", w);
            }
          } else if (!cross_adjacent) {
            ++out.cond_i.checked;
          }
        } else if (!cross_adjacent) {
          ++out.cond_ii.checked;
          if (!family_holds(false, &w)) {
            fail(out.cond_ii, "non-collider " + describe(g, left, y, right) + " lacks rule ii dependence", w);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

const AssumptionCheck& AuditReport::get(std::string_view name) const {
  for (const AssumptionCheck& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no audit check named " + std::string(name));
}

AuditReport audit(const Dag& g, const IndependenceOracle& o, AuditOptions opts) {
  if (g.labels() != o.labels()) throw std::invalid_argument("audit graph and oracle disagree on variables");
  AuditReport r;
  r.variables = g.size();
  r.partial = g.size() > kExhaustiveAuditLimit;
  const AssociationQueryBudget budget =
      r.partial ? AssociationQueryBudget{opts.partial_budget} : AssociationQueryBudget{};
  StrictCache strict(o, budget);
  r.checks.push_back(check_cmc(g, o, r.partial, budget.resolve(g.size())));
  r.checks.push_back(check_af(g, o, budget));
  r.checks.push_back(check_two_af(g, strict));
  r.checks.push_back(check_of(g, o, budget));
  TwoOfChecks two = check_two_of(g, o, budget, strict);
  r.checks.push_back(std::move(two.cond_i));
  r.checks.push_back(std::move(two.cond_ii));
  r.checks.push_back(std::move(two.assumption1));
  return r;
}

}  // namespace kassoc
