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

#include "kassoc/distribution.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "kassoc/error.hpp"

namespace kassoc {
namespace {

// Table over an ordered variable list, last variable fastest.
struct Table {
  std::vector<NodeIndex> vars;
  std::vector<int> cards;
  std::vector<Rational> p;

  std::size_t cells() const {
    std::size_t n = 1;
    for (int c : cards) n *= static_cast<std::size_t>(c);
    return n;
  }

  void decode(std::size_t index, std::vector<int>& out) const {
    out.resize(cards.size());
    for (std::size_t i = cards.size(); i-- > 0;) {
      out[i] = static_cast<int>(index % cards[i]);
      index /= cards[i];
    }
  }

  Table project(NodeSet keep) const {
    Table out;
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (keep.contains(vars[i])) {
        out.vars.push_back(vars[i]);
        out.cards.push_back(cards[i]);
        positions.push_back(i);
      }
    }
    out.p.assign(out.cells(), Rational(0));
    std::vector<int> a;
    for (std::size_t idx = 0; idx < p.size(); ++idx) {
      if (p[idx] == 0) continue;
      decode(idx, a);
      std::size_t target = 0;
      for (std::size_t k = 0; k < positions.size(); ++k) target = target * out.cards[k] + a[positions[k]];
      out.p[target] += p[idx];
    }
    return out;
  }

  // Index in this table of the assignment `a` restricted to this table's
  // variables, where `a` is given over `source_vars`.
  std::size_t index_from(const std::vector<NodeIndex>& source_vars, const std::vector<int>& a) const {
    std::size_t target = 0;
    std::size_t j = 0;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      while (source_vars[j] != vars[k]) ++j;
      target = target * cards[k] + a[j];
    }
    return target;
  }
};

Table full_table(const DiscreteJoint& d) {
  Table t;
  t.vars = d.variables().to_vector();
  t.cards = d.cardinalities();
  t.p = d.table();
  return t;
}

void check_vars(const DiscreteJoint& d, NodeSet s) {
  if (!d.variables().contains_all(s)) throw std::out_of_range("unknown variable index in query");
}

}  // namespace

Cpt::Cpt(NodeIndex child, std::vector<NodeIndex> parents, std::vector<std::vector<Rational>> rows)
    : child_(child), parents_(std::move(parents)), rows_(std::move(rows)) {
  if (rows_.empty() || rows_.front().empty()) throw std::invalid_argument("CPT has no rows");
  const std::size_t width = rows_.front().size();
  for (const auto& row : rows_) {
    if (row.size() != width) throw std::invalid_argument("CPT rows have different lengths");
    Rational total(0);
    for (const Rational& v : row) {
      if (v < 0) throw std::invalid_argument("negative probability in CPT");
      total += v;
    }
    if (total != 1) throw std::invalid_argument("CPT row does not sum to 1");
  }
}

DiscreteJoint::DiscreteJoint(std::vector<std::string> labels, std::vector<int> cardinalities,
                             std::vector<Rational> table)
    : labels_(std::move(labels)), cards_(std::move(cardinalities)), table_(std::move(table)) {
  if (labels_.size() != cards_.size()) throw std::invalid_argument("one cardinality per variable");
  if (labels_.size() > static_cast<std::size_t>(kMaxNodes)) throw std::invalid_argument("too many variables");
  std::size_t cells = 1;
  for (int c : cards_) {
    if (c < 1) throw std::invalid_argument("cardinality must be positive");
    cells *= static_cast<std::size_t>(c);
    if (cells > kMaxJointCells) throw std::invalid_argument("joint table exceeds 2^20 cells");
  }
  if (table_.size() != cells) throw std::invalid_argument("table size does not match cardinalities");
  Rational total(0);
  for (const Rational& v : table_) {
    if (v < 0) throw std::invalid_argument("negative probability in joint table");
    total += v;
  }
  if (total != 1) throw std::invalid_argument("joint table does not sum to 1");
}

NodeIndex DiscreteJoint::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("unknown variable '" + std::string(label) + "'");
  return static_cast<NodeIndex>(it - labels_.begin());
}

const Rational& DiscreteJoint::probability(std::span<const int> assignment) const {
  if (assignment.size() != cards_.size()) throw std::invalid_argument("assignment needs one value per variable");
  std::size_t index = 0;
  for (std::size_t i = 0; i < cards_.size(); ++i) {
    if (assignment[i] < 0 || assignment[i] >= cards_[i]) throw std::out_of_range("value outside the domain");
    index = index * cards_[i] + assignment[i];
  }
  return table_[index];
}

Rational DiscreteJoint::probability(NodeSet vars, std::span<const int> values) const {
  check_vars(*this, vars);
  if (static_cast<int>(values.size()) != vars.size()) throw std::invalid_argument("one value per variable");
  const Table t = full_table(*this).project(vars);
  std::size_t index = 0;
  for (std::size_t k = 0; k < t.vars.size(); ++k) {
    if (values[k] < 0 || values[k] >= t.cards[k]) throw std::out_of_range("value outside the domain");
    index = index * t.cards[k] + values[k];
  }
  return t.p[index];
}

std::vector<Rational> DiscreteJoint::marginal_table(NodeSet vars) const {
  check_vars(*this, vars);
  return full_table(*this).project(vars).p;
}

DiscreteJoint joint_from_cpts(const Dag& g, std::span<const Cpt> cpts) {
  const int n = g.size();
  std::vector<const Cpt*> by_child(n, nullptr);
  for (const Cpt& c : cpts) {
    if (c.child() < 0 || c.child() >= n) throw std::invalid_argument("CPT for a node outside the graph");
    if (by_child[c.child()] != nullptr) {
      throw std::invalid_argument("more than one CPT for '" + g.label(c.child()) + "'");
    }
    by_child[c.child()] = &c;
  }
  std::vector<int> cards(n);
  for (int v = 0; v < n; ++v) {
    if (by_child[v] == nullptr) throw std::invalid_argument("missing CPT for '" + g.label(v) + "'");
    cards[v] = by_child[v]->child_cardinality();
  }
  for (int v = 0; v < n; ++v) {
    const Cpt& c = *by_child[v];
    const std::vector<NodeIndex>& ps = c.parents();
    if (NodeSet::of(ps) != g.parents_of(v) || static_cast<int>(ps.size()) != g.parents_of(v).size()) {
      throw std::invalid_argument("CPT parents of '" + g.label(v) + "' do not match the graph");
    }
    std::size_t rows = 1;
    for (NodeIndex p : ps) rows *= static_cast<std::size_t>(cards[p]);
    if (c.rows().size() != rows) {
      throw std::invalid_argument("CPT for '" + g.label(v) + "' needs " + std::to_string(rows) + " rows");
    }
  }

  Table t;
  t.vars = g.nodes().to_vector();
  t.cards = cards;
  const std::size_t cells = t.cells();
  if (cells > kMaxJointCells) throw std::invalid_argument("joint table exceeds 2^20 cells");
  t.p.assign(cells, Rational(1));
  std::vector<int> a;
  for (std::size_t idx = 0; idx < cells; ++idx) {
    t.decode(idx, a);
    for (int v = 0; v < n && t.p[idx] != 0; ++v) {
      const Cpt& c = *by_child[v];
      std::size_t row = 0;
      for (NodeIndex p : c.parents()) row = row * cards[p] + a[p];
      t.p[idx] *= c.rows()[row][a[v]];
    }
  }
  return DiscreteJoint(g.labels(), cards, std::move(t.p));
}

DiscreteJoint marginalize(const DiscreteJoint& d, NodeSet keep) {
  check_vars(d, keep);
  Table t = full_table(d).project(keep);
  std::vector<std::string> labels;
  for (NodeIndex v : t.vars) labels.push_back(d.labels()[v]);
  return DiscreteJoint(std::move(labels), std::move(t.cards), std::move(t.p));
}

bool is_independent(const DiscreteJoint& d, NodeSet xs, NodeSet ys, NodeSet s) {
  check_vars(d, xs | ys | s);
  if (xs.empty() || ys.empty()) throw std::invalid_argument("independence query needs non-empty sets");
  if (xs.intersects(ys) || xs.intersects(s) || ys.intersects(s)) {
    throw std::invalid_argument("independence query sets must be disjoint");
  }
  const Table u = full_table(d).project(xs | ys | s);
  const Table ps = u.project(s);
  const Table pxs = u.project(xs | s);
  const Table pys = u.project(ys | s);
  std::vector<int> a;
  for (std::size_t idx = 0; idx < u.p.size(); ++idx) {
    u.decode(idx, a);
    const Rational lhs = u.p[idx] * ps.p[ps.index_from(u.vars, a)];
    const Rational rhs = pxs.p[pxs.index_from(u.vars, a)] * pys.p[pys.index_from(u.vars, a)];
    if (lhs != rhs) return false;
  }
  return true;
}

bool mutually_independent(const DiscreteJoint& d, NodeSet vars) {
  check_vars(d, vars);
  const Table u = full_table(d).project(vars);
  std::vector<Table> singles;
  for (NodeIndex v : vars) singles.push_back(u.project(NodeSet{v}));
  std::vector<int> a;
  for (std::size_t idx = 0; idx < u.p.size(); ++idx) {
    u.decode(idx, a);
    Rational product(1);
    for (std::size_t k = 0; k < singles.size(); ++k) product *= singles[k].p[a[k]];
    if (product != u.p[idx]) return false;
  }
  return true;
}

Dataset sample(const DiscreteJoint& d, std::int64_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample size must be positive");
  const auto& table = d.table();

  // Exact inverse-CDF sampling on the common denominator when it fits in 63
  // bits; otherwise fall back to a double-precision CDF.
  Integer common(1);
  for (const Rational& p : table) common = boost::multiprecision::lcm(common, denominator(p));
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> draws(static_cast<std::size_t>(n));
  if (common <= std::numeric_limits<std::int64_t>::max()) {
    std::vector<std::uint64_t> cumulative;
    std::uint64_t running = 0;
    for (const Rational& p : table) {
      running += static_cast<std::uint64_t>(Integer(numerator(p) * (common / denominator(p))));
      cumulative.push_back(running);
    }
    std::uniform_int_distribution<std::uint64_t> pick(0, running - 1);
    for (auto& draw : draws) {
      draw = std::upper_bound(cumulative.begin(), cumulative.end(), pick(rng)) - cumulative.begin();
    }
  } else {
    std::vector<double> cumulative;
    double running = 0;
    for (const Rational& p : table) cumulative.push_back(running += to_double(p));
    std::uniform_real_distribution<double> pick(0.0, running);
    for (auto& draw : draws) {
      draw = std::min<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), pick(rng)) -
                                       cumulative.begin(),
                                   table.size() - 1);
    }
  }

  Dataset out{d.labels(), d.cardinalities(), Dataset::Values(n, d.size())};
  Table layout;
  layout.cards = d.cardinalities();
  std::vector<int> a;
  for (std::int64_t r = 0; r < n; ++r) {
    layout.decode(draws[static_cast<std::size_t>(r)], a);
    for (int c = 0; c < d.size(); ++c) out.values(r, c) = a[c];
  }
  return out;
}

}  // namespace kassoc
