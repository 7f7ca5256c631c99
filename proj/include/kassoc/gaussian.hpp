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

#ifndef KASSOC_GAUSSIAN_HPP_
#define KASSOC_GAUSSIAN_HPP_

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "kassoc/graph.hpp"
#include "kassoc/node_set.hpp"
#include "kassoc/rational.hpp"

namespace kassoc {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Exact Gauss-Jordan inverse. Returns nullopt for a singular matrix.
/// Pivots on the first non-zero entry, which is exact for field scalars.
template <typename Derived>
std::optional<typename Derived::PlainObject> exact_inverse(const Eigen::MatrixBase<Derived>& m) {
  using Plain = typename Derived::PlainObject;
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  Plain work = m;
  Plain inv = Plain::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && work(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      work.row(pivot).swap(work.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Scalar scale = Scalar(1) / work(col, col);
    work.row(col) *= scale;
    inv.row(col) *= scale;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || work(r, col) == Scalar(0)) continue;
      const Scalar factor = work(r, col);
      work.row(r) -= factor * work.row(col);
      inv.row(r) -= factor * inv.row(col);
    }
  }
  return inv;
}

/// Exact determinant by fraction-based elimination.
template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  typename Derived::PlainObject work = m;
  const Eigen::Index n = work.rows();
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && work(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      work.row(pivot).swap(work.row(col));
      det = -det;
    }
    det *= work(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (work(r, col) == Scalar(0)) continue;
      const Scalar factor = work(r, col) / work(col, col);
      work.row(r) -= factor * work.row(col);
    }
  }
  return det;
}

/// Rows/columns of `m` selected by `idx`, in the given order.
template <typename Derived>
typename Derived::PlainObject submatrix(const Eigen::MatrixBase<Derived>& m,
                                        const std::vector<NodeIndex>& idx) {
  typename Derived::PlainObject out(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r) {
    for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = m(idx[r], idx[c]);
  }
  return out;
}

/// Linear structural equation model X = B X + e with independent noise.
/// coefficients(i, j) is the weight of parent j in the equation of child i.
class GaussianSystem {
 public:
  /// Throws std::invalid_argument on shape mismatch, non-positive noise
  /// variance, a non-zero diagonal, or a cyclic coefficient pattern.
  GaussianSystem(std::vector<std::string> labels, RationalMatrix coefficients, RationalVector noise);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const RationalMatrix& coefficients() const { return coefficients_; }
  const RationalVector& noise() const { return noise_; }
  /// Graph of the non-zero coefficients.
  const Dag& dag() const { return dag_; }

  friend bool operator==(const GaussianSystem& a, const GaussianSystem& b) {
    return a.labels_ == b.labels_ && a.coefficients_ == b.coefficients_ && a.noise_ == b.noise_;
  }

 private:
  std::vector<std::string> labels_;
  RationalMatrix coefficients_;
  RationalVector noise_;
  Dag dag_;
};

/// Exact covariance (I - B)^-1 D (I - B)^-T.
RationalMatrix covariance_of(const GaussianSystem& sys);

/// True iff the (x, y) entry of the inverse of cov restricted to
/// {x, y} ∪ s is exactly zero. A singular restriction raises
/// PreconditionError.
bool partial_correlation_zero(const RationalMatrix& cov, NodeIndex x, NodeIndex y, NodeSet s);

/// Negated (x, y) entry of the inverse of cov restricted to {x, y} ∪ s;
/// proportional to the partial correlation of x and y given s.
Rational partial_covariance_precision(const RationalMatrix& cov, NodeIndex x, NodeIndex y, NodeSet s);

}  // namespace kassoc

#endif  // KASSOC_GAUSSIAN_HPP_
