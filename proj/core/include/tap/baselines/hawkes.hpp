#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "tap/rng.hpp"

namespace tap::baselines {

/// Discrete-day self-exciting count model: counts are Poisson with intensity
/// lambda_t = mu + alpha * sum_{k>=1} e^{-beta k} N_{t-k}.
struct HawkesModel {
    double mu = 0.0;
    double alpha = 0.0;
    double beta = 1.0;
    double log_likelihood = 0.0;  // at the fitted parameters, up to the N! term

    /// Expected offspring per event: alpha e^{-beta} / (1 - e^{-beta}).
    double branching_ratio() const { return alpha / std::expm1(beta); }
};

/// Day-t intensities for a count series (index 0 uses an empty history).
std::vector<double> hawkes_intensities(const HawkesModel& m, const std::vector<double>& counts);

/// Poisson log-likelihood of `counts` under `m`, dropping the constant
/// log(N_t!) term.
double hawkes_loglik(const HawkesModel& m, const std::vector<double>& counts);

/// Maximizes the likelihood by simplex search over (log mu, log alpha,
/// log beta) from mu = mean/2, alpha = 0.5, beta = 1. A fit with branching
/// ratio >= 1 is projected back to 0.99. All-zero input returns the
/// degenerate (0, 0, 1) model. Needs >= 14 days.
HawkesModel hawkes_fit(const std::vector<double>& counts);

/// Expected-count recursion over `horizon` days: actual counts feed the
/// excitation sum for history days, previously computed expectations for
/// forecast days.
Eigen::VectorXd hawkes_forecast(const HawkesModel& m, const std::vector<double>& history,
                                int horizon = 7);

/// Draws a count path from the model (for recovery tests).
std::vector<double> hawkes_simulate(const HawkesModel& m, std::int64_t days, Rng& rng);

}  // namespace tap::baselines
