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

#include "kassoc/gaussian.hpp"

#include <stdexcept>

#include "kassoc/error.hpp"

namespace kassoc {
namespace {

Dag structure_of(const std::vector<std::string>& labels, const RationalMatrix& b) {
  std::vector<Edge> edges;
  for (Eigen::Index child = 0; child < b.rows(); ++child) {
    for (Eigen::Index parent = 0; parent < b.cols(); ++parent) {
      if (b(child, parent) != 0) {
        edges.push_back({static_cast<NodeIndex>(parent), static_cast<NodeIndex>(child)});
      }
    }
  }
  return Dag(labels, std::move(edges));
}

}  // namespace

GaussianSystem::GaussianSystem(std::vector<std::string> labels, RationalMatrix coefficients,
                               RationalVector noise)
    : labels_(std::move(labels)), coefficients_(std::move(coefficients)), noise_(std::move(noise)) {
  const auto n = static_cast<Eigen::Index>(labels_.size());
  if (coefficients_.rows() != n || coefficients_.cols() != n || noise_.size() != n) {
    throw std::invalid_argument("coefficient matrix and noise vector must match the node count");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (noise_(i) <= 0) throw std::invalid_argument("noise variances must be positive");
    if (coefficients_(i, i) != 0) throw std::invalid_argument("self-loop coefficient on '" + labels_[i] + "'");
  }
  dag_ = structure_of(labels_, coefficients_);
}

RationalMatrix covariance_of(const GaussianSystem& sys) {
  const Eigen::Index n = sys.size();
  const RationalMatrix i_minus_b = RationalMatrix::Identity(n, n) - sys.coefficients();
  // Acyclicity makes I - B a permuted unit-triangular matrix, never singular.
  const RationalMatrix a = *exact_inverse(i_minus_b);
  return a * sys.noise().asDiagonal() * a.transpose();
}

Rational partial_covariance_precision(const RationalMatrix& cov, NodeIndex x, NodeIndex y, NodeSet s) {
  const auto n = static_cast<NodeIndex>(cov.rows());
  if (x < 0 || x >= n || y < 0 || y >= n || !NodeSet::range(n).contains_all(s)) {
    throw std::out_of_range("partial correlation query outside the covariance matrix");
  }
  if (x == y || s.contains(x) || s.contains(y)) {
    throw std::invalid_argument("partial correlation needs distinct x, y outside the conditioning set");
  }
  std::vector<NodeIndex> idx{x, y};
  for (NodeIndex v : s) idx.push_back(v);
  const auto inv = exact_inverse(submatrix(cov, idx));
  if (!inv) throw PreconditionError("covariance restricted to the query is singular");
  return -(*inv)(0, 1);
}

bool partial_correlation_zero(const RationalMatrix& cov, NodeIndex x, NodeIndex y, NodeSet s) {
  return partial_covariance_precision(cov, x, y, s) == 0;
}

}  // namespace kassoc
