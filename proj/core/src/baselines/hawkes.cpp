#include "tap/baselines/hawkes.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "tap/baselines/simplex.hpp"

namespace tap::baselines {

std::vector<double> hawkes_intensities(const HawkesModel& m, const std::vector<double>& counts) {
    std::vector<double> lambda(counts.size());
    const double decay = std::exp(-m.beta);
    double s = 0.0;  // sum_{k>=1} e^{-beta k} N_{t-k}
    for (std::size_t t = 0; t < counts.size(); ++t) {
        lambda[t] = m.mu + m.alpha * s;
        s = decay * (s + counts[t]);
    }
    return lambda;
}

double hawkes_loglik(const HawkesModel& m, const std::vector<double>& counts) {
    const std::vector<double> lambda = hawkes_intensities(m, counts);
    double ll = 0.0;
    for (std::size_t t = 0; t < counts.size(); ++t) {
        const double l = lambda[t];
        if (counts[t] > 0.0) {
            if (l <= 0.0) return -std::numeric_limits<double>::infinity();
            ll += counts[t] * std::log(l);
        }
        ll -= l;
    }
    return ll;
}

HawkesModel hawkes_fit(const std::vector<double>& counts) {
    if (counts.size() < 14) throw std::invalid_argument("hawkes_fit: need at least 14 days");
    for (double v : counts) {
        if (v < 0.0 || !std::isfinite(v)) {
            throw std::invalid_argument("hawkes_fit: counts must be finite and non-negative");
        }
    }
    double mean = 0.0;
    for (double v : counts) mean += v;
    mean /= static_cast<double>(counts.size());
    if (mean == 0.0) {
        HawkesModel degenerate{0.0, 0.0, 1.0, 0.0};
        return degenerate;
    }

    const auto objective = [&](const Eigen::VectorXd& x) {
        const HawkesModel probe{std::exp(x[0]), std::exp(x[1]), std::exp(x[2]), 0.0};
        const double ll = hawkes_loglik(probe, counts);
        return std::isfinite(ll) ? -ll : std::numeric_limits<double>::infinity();
    };

    Eigen::VectorXd x0(3);
    x0 << std::log(mean * 0.5), std::log(0.5), 0.0;
    SimplexOptions opts;
    opts.max_iter = 1500;
    const SimplexResult fit = nelder_mead(objective, x0, opts);

    HawkesModel model{std::exp(fit.x[0]), std::exp(fit.x[1]), std::exp(fit.x[2]), -fit.fx};
    if (model.branching_ratio() >= 1.0) {
        model.alpha = 0.99 * std::expm1(model.beta);
        model.log_likelihood = hawkes_loglik(model, counts);
    }
    return model;
}

Eigen::VectorXd hawkes_forecast(const HawkesModel& m, const std::vector<double>& history,
                                int horizon) {
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    const double decay = std::exp(-m.beta);
    double s = 0.0;
    for (double v : history) s = decay * (s + v);

    Eigen::VectorXd out(horizon);
    for (int h = 0; h < horizon; ++h) {
        const double expected = m.mu + m.alpha * s;
        out[h] = expected;
        s = decay * (s + expected);
    }
    return out;
}

std::vector<double> hawkes_simulate(const HawkesModel& m, std::int64_t days, Rng& rng) {
    std::vector<double> counts(static_cast<std::size_t>(days));
    const double decay = std::exp(-m.beta);
    double s = 0.0;
    for (std::size_t t = 0; t < counts.size(); ++t) {
        const double lambda = m.mu + m.alpha * s;
        counts[t] = static_cast<double>(rng.poisson(lambda));
        s = decay * (s + counts[t]);
    }
    return counts;
}

}  // namespace tap::baselines
