#include "sphlap2/matrix.hpp"

#include <cmath>
#include <string>

#include "sphlap2/error.hpp"

namespace sphlap2 {

PointSet::PointSet(Eigen::MatrixXd positions, Eigen::VectorXd weights,
                   std::optional<Eigen::VectorXd> values)
    : positions_(std::move(positions)), weights_(std::move(weights)), values_(std::move(values)) {
  if (weights_.size() != positions_.rows()) {
    throw Error(ErrorCode::LengthMismatch, "one weight per point required");
  }
  if (values_ && values_->size() != positions_.rows()) {
    throw Error(ErrorCode::LengthMismatch, "one value per point required");
  }
  for (Eigen::Index i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      throw Error(ErrorCode::NonPositiveWeight,
                  "SPH weight of point " + std::to_string(i) + " must be finite and > 0");
    }
  }
  if (!positions_.allFinite()) {
    throw Error(ErrorCode::NonFiniteArgument, "point coordinates must be finite");
  }
}

PointSet::PointSet(Eigen::MatrixXd positions)
    : PointSet(positions, Eigen::VectorXd::Ones(positions.rows())) {}

PointSet PointSet::with_values(Eigen::MatrixXd positions, Eigen::VectorXd values) {
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(positions.rows());
  return {std::move(positions), std::move(ones), std::move(values)};
}

PointSet PointSet::subset(std::span<const Eigen::Index> indices) const {
  const auto n = static_cast<Eigen::Index>(indices.size());
  Eigen::MatrixXd pos(n, positions_.cols());
  Eigen::VectorXd w(n);
  std::optional<Eigen::VectorXd> vals;
  if (values_) vals = Eigen::VectorXd(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index src = indices[static_cast<std::size_t>(i)];
    if (src < 0 || src >= size()) {
      throw Error(ErrorCode::IndexOutOfRange, "subset index out of range");
    }
    pos.row(i) = positions_.row(src);
    w[i] = weights_[src];
    if (vals) (*vals)[i] = (*values_)[src];
  }
  return {std::move(pos), std::move(w), std::move(vals)};
}

PrecisionMatrix::PrecisionMatrix(Eigen::MatrixXd dense) : storage_(std::move(dense)) {}

PrecisionMatrix::PrecisionMatrix(Eigen::SparseMatrix<double> sparse, double epsilon)
    : storage_(std::move(sparse)), epsilon_(epsilon) {}

Eigen::Index PrecisionMatrix::order() const noexcept {
  return std::visit([](const auto& m) { return m.rows(); }, storage_);
}

double PrecisionMatrix::coeff(Eigen::Index n, Eigen::Index m) const {
  if (n < 0 || m < 0 || n >= order() || m >= order()) {
    throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
  }
  return std::visit([&](const auto& q) { return q.coeff(n, m); }, storage_);
}

Eigen::Index PrecisionMatrix::nonzeros() const {
  if (const auto* s = std::get_if<Eigen::SparseMatrix<double>>(&storage_)) {
    return s->nonZeros();
  }
  const auto& d = std::get<Eigen::MatrixXd>(storage_);
  return (d.array() != 0.0).count();
}

Eigen::MatrixXd PrecisionMatrix::to_dense() const {
  if (const auto* s = std::get_if<Eigen::SparseMatrix<double>>(&storage_)) {
    return Eigen::MatrixXd(*s);
  }
  return std::get<Eigen::MatrixXd>(storage_);
}

std::vector<Eigen::Triplet<double>> PrecisionMatrix::triplets() const {
  std::vector<Eigen::Triplet<double>> out;
  if (const auto* s = std::get_if<Eigen::SparseMatrix<double>>(&storage_)) {
    out.reserve(static_cast<std::size_t>(s->nonZeros()));
    for (Eigen::Index col = 0; col < s->outerSize(); ++col) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(*s, col); it; ++it) {
        out.emplace_back(it.row(), it.col(), it.value());
      }
    }
    return out;
  }
  const auto& d = std::get<Eigen::MatrixXd>(storage_);
  for (Eigen::Index col = 0; col < d.cols(); ++col) {
    for (Eigen::Index row = 0; row < d.rows(); ++row) {
      if (d(row, col) != 0.0) out.emplace_back(row, col, d(row, col));
    }
  }
  return out;
}

Eigen::VectorXd PrecisionMatrix::multiply(const Eigen::VectorXd& x) const {
  return std::visit([&](const auto& q) -> Eigen::VectorXd { return q * x; }, storage_);
}

PrecisionMatrix assemble(const PrecisionFunction& pf, const PointSet& points, double epsilon) {
  if (points.dimension() != pf.dimension()) {
    throw Error(ErrorCode::DimensionMismatch,
                "point set has dimension " + std::to_string(points.dimension()) +
                    ", precision function has " + std::to_string(pf.dimension()));
  }
  if (!(epsilon >= 0.0)) {
    throw Error(ErrorCode::NegativeEpsilon, "epsilon must be >= 0");
  }
  const Eigen::Index n = points.size();
  const auto& pos = points.positions();
  const auto& v = points.weights();
  const double q0 = pf.value_at_zero();

  if (epsilon == 0.0) {
    Eigen::MatrixXd q(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      q(i, i) = q0 * (v[i] * v[i]);
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const double r = (pos.row(i) - pos.row(j)).norm();
        q(i, j) = pf.value(r) * (v[i] * v[j]);
        q(j, i) = q(i, j);
      }
    }
    return PrecisionMatrix(std::move(q));
  }

  const double cutoff = pf.decay_radius(epsilon);
  const double cutoff2 = cutoff * cutoff;
  std::vector<Eigen::Triplet<double>> entries;
  for (Eigen::Index i = 0; i < n; ++i) {
    entries.emplace_back(i, i, q0 * (v[i] * v[i]));
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double r2 = (pos.row(i) - pos.row(j)).squaredNorm();
      if (r2 > cutoff2) continue;
      const double qstar = pf.value(std::sqrt(r2));
      if (std::abs(qstar) < epsilon * q0) continue;
      const double entry = qstar * (v[i] * v[j]);
      entries.emplace_back(i, j, entry);
      entries.emplace_back(j, i, entry);
    }
  }
  Eigen::SparseMatrix<double> q(n, n);
  q.setFromTriplets(entries.begin(), entries.end());
  return {std::move(q), epsilon};
}

double energy(const PrecisionMatrix& q, const Eigen::VectorXd& x) {
  if (x.size() != q.order()) {
    throw Error(ErrorCode::LengthMismatch, "state vector length " + std::to_string(x.size()) +
                                               " does not match matrix order " +
                                               std::to_string(q.order()));
  }
  return 0.5 * x.dot(q.multiply(x));
}

Interaction interaction_class(const PrecisionMatrix& q, Eigen::Index n, Eigen::Index m,
                              double epsilon) {
  const double entry = q.coeff(n, m);
  if (entry == 0.0) return Interaction::Independent;
  if (std::abs(entry) < epsilon) return Interaction::Weak;
  return Interaction::Strict;
}

CholeskyReport cholesky_check(const PrecisionMatrix& q) {
  const Eigen::Index n = q.order();
  if (n > kMaxDenseCheckOrder) {
    throw Error(ErrorCode::TooLargeForDenseCheck,
                "dense Cholesky check limited to order " + std::to_string(kMaxDenseCheckOrder));
  }
  if (n == 0) return {true, std::nullopt};
  // Right-looking Cholesky on the lower triangle, stopping at the first
  // pivot that is not strictly positive.
  Eigen::MatrixXd a = q.to_dense();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double pivot = a(j, j);
    if (!(pivot > 0.0)) return {false, j};
    const double root = std::sqrt(pivot);
    const Eigen::Index rest = n - j - 1;
    if (rest == 0) break;
    a.col(j).tail(rest) /= root;
    a.bottomRightCorner(rest, rest).selfadjointView<Eigen::Lower>().rankUpdate(a.col(j).tail(rest), -1.0);
  }
  return {true, std::nullopt};
}

}  // namespace sphlap2
