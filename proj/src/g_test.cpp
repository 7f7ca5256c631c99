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

#include "kassoc/g_test.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

namespace kassoc {
namespace {

struct Compound {
  std::vector<NodeIndex> vars;
  std::vector<int> cards;
  long long states = 1;

  Compound(const Dataset& data, NodeSet set) {
    for (NodeIndex v : set) {
      vars.push_back(v);
      cards.push_back(data.cardinalities[v]);
      states *= data.cardinalities[v];
    }
  }

  long long encode(const Dataset& data, Eigen::Index row) const {
    long long code = 0;
    for (std::size_t k = 0; k < vars.size(); ++k) code = code * cards[k] + data.values(row, vars[k]);
    return code;
  }
};

}  // namespace

double chi_squared_critical_value(int df, double alpha) {
  if (df <= 0) return 0.0;
  const boost::math::chi_squared dist(df);
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

GTestResult g_test(const Dataset& data, NodeSet xs, NodeSet ys, NodeSet s, const GTestConfig& cfg) {
  if (!(cfg.alpha > 0 && cfg.alpha < 1)) throw std::invalid_argument("alpha must lie in (0, 1)");
  if (data.rows() == 0) throw std::invalid_argument("G-test needs a non-empty dataset");
  if (!NodeSet::range(data.variables()).contains_all(xs | ys | s)) {
    throw std::out_of_range("G-test query names an unknown variable");
  }
  if (xs.empty() || ys.empty() || xs.intersects(ys) || xs.intersects(s) || ys.intersects(s)) {
    throw std::invalid_argument("G-test needs non-empty, pairwise disjoint sets");
  }
  const Compound cx(data, xs);
  const Compound cy(data, ys);
  const Compound cs(data, s);
  const long long cells = cx.states * cy.states;
  std::vector<double> counts(static_cast<std::size_t>(cells * cs.states), 0.0);
  for (Eigen::Index r = 0; r < data.rows(); ++r) {
    const long long k = cs.encode(data, r) * cells + cx.encode(data, r) * cy.states + cy.encode(data, r);
    counts[static_cast<std::size_t>(k)] += 1.0;
  }

  GTestResult result;
  std::vector<double> row(cx.states), col(cy.states);
  for (long long stratum = 0; stratum < cs.states; ++stratum) {
    const double* c = counts.data() + stratum * cells;
    std::fill(row.begin(), row.end(), 0.0);
    std::fill(col.begin(), col.end(), 0.0);
    double total = 0;
    for (long long i = 0; i < cx.states; ++i) {
      for (long long j = 0; j < cy.states; ++j) {
        row[i] += c[i * cy.states + j];
        col[j] += c[i * cy.states + j];
        total += c[i * cy.states + j];
      }
    }
    if (cfg.drop_empty_strata) {
      if (total == 0) continue;
      const auto nonzero = [](const std::vector<double>& v) {
        return static_cast<int>(std::count_if(v.begin(), v.end(), [](double x) { return x > 0; }));
      };
      result.df += std::max(0, nonzero(row) - 1) * std::max(0, nonzero(col) - 1);
    } else {
      result.df += static_cast<int>((cx.states - 1) * (cy.states - 1));
    }
    if (total == 0) continue;
    for (long long i = 0; i < cx.states; ++i) {
      for (long long j = 0; j < cy.states; ++j) {
        const double observed = c[i * cy.states + j];
        if (observed == 0) continue;
        const double expected = row[i] * col[j] / total;
        result.statistic += 2.0 * observed * std::log(observed / expected);
      }
    }
  }
  result.critical_value = chi_squared_critical_value(result.df, cfg.alpha);
  result.independent = result.df == 0 || result.statistic < result.critical_value;
  return result;
}

}  // namespace kassoc
