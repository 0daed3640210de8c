// Derivative-free Nelder-Mead minimizer used by the ARIMA and Hawkes fits.
#pragma once

#include <Eigen/Dense>
#include <functional>

namespace tap::baselines {

struct SimplexOptions {
    int max_iter = 800;
    double f_tol = 1e-10;  // stop when the simplex's f-spread falls below this
    double step = 0.25;    // initial per-coordinate displacement
};

struct SimplexResult {
    Eigen::VectorXd x;
    double fx = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Standard reflect/expand/contract/shrink iteration (alpha 1, gamma 2,
/// rho 0.5, sigma 0.5). `f` may return +inf to reject a region. The result is
/// the best vertex seen, so its value never exceeds f(x0).
SimplexResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                          const Eigen::VectorXd& x0, const SimplexOptions& opts = {});

}  // namespace tap::baselines
