#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "sphlap2/precision.hpp"

namespace sphlap2 {

/// Scattered sample locations with SPH weights and optional field values.
/// Coincident locations are allowed.
class PointSet {
 public:
  /// positions is N x d. weights must be strictly positive; values, when
  /// present, must have length N.
  PointSet(Eigen::MatrixXd positions, Eigen::VectorXd weights,
           std::optional<Eigen::VectorXd> values = std::nullopt);

  /// Unit SPH weights.
  explicit PointSet(Eigen::MatrixXd positions);
  static PointSet with_values(Eigen::MatrixXd positions, Eigen::VectorXd values);

  [[nodiscard]] Eigen::Index size() const noexcept { return positions_.rows(); }
  [[nodiscard]] int dimension() const noexcept { return static_cast<int>(positions_.cols()); }
  [[nodiscard]] const Eigen::MatrixXd& positions() const noexcept { return positions_; }
  [[nodiscard]] const Eigen::VectorXd& weights() const noexcept { return weights_; }
  [[nodiscard]] bool has_values() const noexcept { return values_.has_value(); }
  [[nodiscard]] const std::optional<Eigen::VectorXd>& values() const noexcept { return values_; }

  /// Points at the given indices, in that order.
  [[nodiscard]] PointSet subset(std::span<const Eigen::Index> indices) const;

 private:
  Eigen::MatrixXd positions_;
  Eigen::VectorXd weights_;
  std::optional<Eigen::VectorXd> values_;
};

/// Symmetric N x N matrix Q[n,m] = v_n Q*(|s_n - s_m|) v_m.
///
/// Stored dense when assembled with epsilon = 0, otherwise as a sparse
/// matrix holding both triangles.
class PrecisionMatrix {
 public:
  explicit PrecisionMatrix(Eigen::MatrixXd dense);
  PrecisionMatrix(Eigen::SparseMatrix<double> sparse, double epsilon);

  [[nodiscard]] Eigen::Index order() const noexcept;
  [[nodiscard]] double epsilon() const noexcept { return epsilon_; }
  [[nodiscard]] bool is_sparse() const noexcept {
    return std::holds_alternative<Eigen::SparseMatrix<double>>(storage_);
  }

  [[nodiscard]] double coeff(Eigen::Index n, Eigen::Index m) const;
  [[nodiscard]] Eigen::Index nonzeros() const;
  [[nodiscard]] Eigen::MatrixXd to_dense() const;
  /// Nonzero entries in column-major order, both triangles.
  [[nodiscard]] std::vector<Eigen::Triplet<double>> triplets() const;
  /// y = Q x
  [[nodiscard]] Eigen::VectorXd multiply(const Eigen::VectorXd& x) const;

 private:
  std::variant<Eigen::MatrixXd, Eigen::SparseMatrix<double>> storage_;
  double epsilon_ = 0.0;
};

/// Builds Q for the point set. Off-diagonal entries with
/// |Q*(r)| < epsilon Q*(0) are dropped (the threshold is relative, so it is
/// unit-free and independent of the weights). epsilon = 0 gives the dense
/// matrix.
///
/// Truncation can destroy positive definiteness. A truncated matrix is not
/// re-certified here; run cholesky_check on it when that matters.
PrecisionMatrix assemble(const PrecisionFunction& pf, const PointSet& points, double epsilon = 0.0);

/// 1/2 x^T Q x.
double energy(const PrecisionMatrix& q, const Eigen::VectorXd& x);

enum class Interaction { Strict, Weak, Independent };

/// Classifies the coupling of n and m against an absolute threshold:
/// Independent if Q[n,m] == 0, Weak if 0 < |Q[n,m]| < epsilon, else Strict.
Interaction interaction_class(const PrecisionMatrix& q, Eigen::Index n, Eigen::Index m,
                              double epsilon);

struct CholeskyReport {
  bool positive_definite = false;
  /// 0-based index of the first non-positive pivot when factorization fails.
  std::optional<Eigen::Index> failed_pivot;
};

constexpr Eigen::Index kMaxDenseCheckOrder = 2000;

/// Attempts a dense Cholesky factorization. Sparse matrices
/// are densified first. Throws TooLargeForDenseCheck above 2000 x 2000.
CholeskyReport cholesky_check(const PrecisionMatrix& q);

}  // namespace sphlap2
