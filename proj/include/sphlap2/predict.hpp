#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sphlap2/matrix.hpp"

namespace sphlap2 {

struct Prediction {
  Eigen::VectorXd location;
  double mean = 0.0;
  double variance = 0.0;
};

/// Single-point conditional distribution at target given the sampled values:
///   mean     = -sum_n Q*(|target - s_n|) / Q*(0) x_n
///   variance = 1 / Q*(0)
///
/// This is the GMRF full conditional, not an interpolator: predicting at a
/// lone sample location returns minus its value. SPH weights are ignored
/// (unit weights). Throws MissingValues if the point set carries no values
/// and DimensionMismatch on dimension disagreement.
Prediction predict(const PrecisionFunction& pf, const PointSet& points, const Eigen::VectorXd& target);

/// predict() for each row of targets (M x d).
std::vector<Prediction> predict_batch(const PrecisionFunction& pf, const PointSet& points,
                                      const Eigen::MatrixXd& targets);

}  // namespace sphlap2
