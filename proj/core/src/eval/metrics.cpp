#include "tap/eval/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace tap::eval {

namespace {
void check_lengths(const Eigen::VectorXd& pred, const Eigen::VectorXd& actual) {
    if (pred.size() != actual.size() || pred.size() == 0) {
        throw std::invalid_argument("metric inputs must be equal-length and non-empty");
    }
}
}  // namespace

double ape(const Eigen::VectorXd& pred, const Eigen::VectorXd& actual) {
    check_lengths(pred, actual);
    const double denom = std::max(actual.sum(), 1.0);
    return 100.0 * std::abs(pred.sum() - actual.sum()) / denom;
}

double rmse(const Eigen::VectorXd& pred, const Eigen::VectorXd& actual) {
    check_lengths(pred, actual);
    return std::sqrt((pred - actual).squaredNorm() / static_cast<double>(pred.size()));
}

double smape(const Eigen::VectorXd& pred, const Eigen::VectorXd& actual) {
    check_lengths(pred, actual);
    double total = 0.0;
    for (Eigen::Index i = 0; i < pred.size(); ++i) {
        const double p = pred[i], a = actual[i];
        if (p < 0.0 || a < 0.0) throw std::invalid_argument("smape inputs must be non-negative");
        const double denom = (p + a) / 2.0;
        if (denom > 0.0) total += std::abs(p - a) / denom;
    }
    return 100.0 * total / static_cast<double>(pred.size());
}

double relative_improvement(double baseline_score, double model_score) {
    if (baseline_score <= 0.0) {
        throw std::invalid_argument("relative_improvement: baseline must be positive");
    }
    return 100.0 * (baseline_score - model_score) / baseline_score;
}

}  // namespace tap::eval
