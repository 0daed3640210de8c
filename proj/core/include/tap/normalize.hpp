// Per-feature min-max scaling fit on training rows only.
#pragma once

#include <Eigen/Dense>
#include <vector>

namespace tap {

/// Affine map per feature column: train min -> 0, train max -> 1. Constant
/// features map to 0.0 and invert back to their constant. Values outside the
/// fitted range are mapped affinely as-is (no clamping on the input side).
class Normalizer {
public:
    Normalizer() = default;

    /// Fits per-column (min, max) on `train` (rows = days, cols = features).
    static Normalizer fit(const Eigen::MatrixXd& train);

    Eigen::MatrixXd apply(const Eigen::MatrixXd& x) const;
    Eigen::MatrixXd invert(const Eigen::MatrixXd& x) const;

    double apply_one(double v, std::size_t feature) const;
    double invert_one(double v, std::size_t feature) const;

    std::size_t features() const { return min_.size(); }
    const std::vector<double>& mins() const { return min_; }
    const std::vector<double>& maxs() const { return max_; }

    /// Rebuilds a fitted normalizer from stored bounds.
    static Normalizer from_bounds(std::vector<double> mins, std::vector<double> maxs);

private:
    std::vector<double> min_;
    std::vector<double> max_;
};

}  // namespace tap
