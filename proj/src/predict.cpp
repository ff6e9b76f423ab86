#include "sphlap2/predict.hpp"

#include <string>

#include "sphlap2/error.hpp"

namespace sphlap2 {

namespace {

void require_compatible(const PrecisionFunction& pf, const PointSet& points, Eigen::Index target_dim) {
  if (!points.has_values()) {
    throw Error(ErrorCode::MissingValues, "prediction needs sampled values");
  }
  if (points.dimension() != pf.dimension() || target_dim != pf.dimension()) {
    throw Error(ErrorCode::DimensionMismatch,
                "points, targets and precision function must share dimension " +
                    std::to_string(pf.dimension()));
  }
}

Prediction predict_unchecked(const PrecisionFunction& pf, const PointSet& points,
                             const Eigen::VectorXd& target, double q0) {
  const auto& pos = points.positions();
  const auto& x = *points.values();
  double mean = 0.0;
  for (Eigen::Index n = 0; n < points.size(); ++n) {
    const double r = (target.transpose() - pos.row(n)).norm();
    mean -= pf.value(r) / q0 * x[n];
  }
  return {target, mean, 1.0 / q0};
}

}  // namespace

Prediction predict(const PrecisionFunction& pf, const PointSet& points, const Eigen::VectorXd& target) {
  require_compatible(pf, points, target.size());
  return predict_unchecked(pf, points, target, pf.value_at_zero());
}

std::vector<Prediction> predict_batch(const PrecisionFunction& pf, const PointSet& points,
                                      const Eigen::MatrixXd& targets) {
  std::vector<Prediction> out;
  if (targets.rows() == 0) return out;
  require_compatible(pf, points, targets.cols());
  const double q0 = pf.value_at_zero();
  out.reserve(static_cast<std::size_t>(targets.rows()));
  for (Eigen::Index i = 0; i < targets.rows(); ++i) {
    out.push_back(predict_unchecked(pf, points, targets.row(i).transpose(), q0));
  }
  return out;
}

}  // namespace sphlap2
