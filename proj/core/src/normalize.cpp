#include "tap/normalize.hpp"

#include <stdexcept>

namespace tap {

Normalizer Normalizer::fit(const Eigen::MatrixXd& train) {
    if (train.rows() == 0) throw std::invalid_argument("cannot fit normalizer on empty matrix");
    Normalizer n;
    n.min_.resize(static_cast<std::size_t>(train.cols()));
    n.max_.resize(static_cast<std::size_t>(train.cols()));
    for (Eigen::Index c = 0; c < train.cols(); ++c) {
        n.min_[static_cast<std::size_t>(c)] = train.col(c).minCoeff();
        n.max_[static_cast<std::size_t>(c)] = train.col(c).maxCoeff();
    }
    return n;
}

Normalizer Normalizer::from_bounds(std::vector<double> mins, std::vector<double> maxs) {
    if (mins.size() != maxs.size()) throw std::invalid_argument("normalizer bounds size mismatch");
    Normalizer n;
    n.min_ = std::move(mins);
    n.max_ = std::move(maxs);
    return n;
}

double Normalizer::apply_one(double v, std::size_t f) const {
    const double span = max_[f] - min_[f];
    return span == 0.0 ? 0.0 : (v - min_[f]) / span;
}

double Normalizer::invert_one(double v, std::size_t f) const {
    return v * (max_[f] - min_[f]) + min_[f];
}

Eigen::MatrixXd Normalizer::apply(const Eigen::MatrixXd& x) const {
    if (static_cast<std::size_t>(x.cols()) != min_.size()) {
        throw std::invalid_argument("normalizer fitted on " + std::to_string(min_.size()) +
                                    " features, applied to " + std::to_string(x.cols()));
    }
    Eigen::MatrixXd out(x.rows(), x.cols());
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
        const auto f = static_cast<std::size_t>(c);
        for (Eigen::Index r = 0; r < x.rows(); ++r) out(r, c) = apply_one(x(r, c), f);
    }
    return out;
}

Eigen::MatrixXd Normalizer::invert(const Eigen::MatrixXd& x) const {
    if (static_cast<std::size_t>(x.cols()) != min_.size()) {
        throw std::invalid_argument("normalizer feature count mismatch on invert");
    }
    Eigen::MatrixXd out(x.rows(), x.cols());
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
        const auto f = static_cast<std::size_t>(c);
        for (Eigen::Index r = 0; r < x.rows(); ++r) out(r, c) = invert_one(x(r, c), f);
    }
    return out;
}

}  // namespace tap
