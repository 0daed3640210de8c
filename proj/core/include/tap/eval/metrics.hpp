#pragma once

#include <Eigen/Dense>

namespace tap::eval {

/// 100 * |sum(pred) - sum(actual)| / max(sum(actual), 1). The floor of 1
/// keeps zero-activity weeks finite.
double ape(const Eigen::VectorXd& pred, const Eigen::VectorXd& actual);

/// sqrt(mean squared daily difference).
double rmse(const Eigen::VectorXd& pred, const Eigen::VectorXd& actual);

/// (100/T) * sum |p-a| / ((p+a)/2), a 0/0 term counting as 0. Range [0, 200].
double smape(const Eigen::VectorXd& pred, const Eigen::VectorXd& actual);

/// 100 * (baseline - model) / baseline. Throws when baseline <= 0.
double relative_improvement(double baseline_score, double model_score);

}  // namespace tap::eval
