#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace tap::baselines {

struct ArimaOrder {
    int p = 0;
    int d = 0;
    int q = 0;

    auto operator<=>(const ArimaOrder&) const = default;
};

struct ArimaModel {
    ArimaOrder order;
    Eigen::VectorXd phi;    // p AR coefficients
    Eigen::VectorXd theta;  // q MA coefficients
    double intercept = 0.0;  // only fit when d == 0
    double sigma2 = 0.0;     // CSS / effective sample size
    double val_rmse = 0.0;   // validation score that won the grid
    bool fallback_persistent = false;  // every grid candidate was discarded
};

/// Conditional-sum-of-squares fit of one (p, d, q) candidate. Returns nothing
/// when the optimizer produces non-finite parameters or an explosive AR part
/// (companion-matrix spectral radius >= 1).
std::optional<ArimaModel> arima_css_fit(const std::vector<double>& y, ArimaOrder order);

/// Grid search p in [0,7], d in [0,2], q in [0,2]: each surviving candidate is
/// fit on `train` and scored by RMSE of its 7-day forecast against
/// `validation_week`; the lowest wins (ties to the lexicographically smaller
/// order). If all 72 candidates are discarded the returned model has
/// fallback_persistent set and forecasts repeat trailing history.
ArimaModel arima_fit(const std::vector<double>& train,
                     const std::vector<double>& validation_week, int jobs = 1);

/// Recursive mean forecast: future innovations zero, differencing inverted,
/// clamped at 0. `history` must hold at least p + d observations.
Eigen::VectorXd arima_forecast(const ArimaModel& model, const std::vector<double>& history,
                               int horizon = 7);

}  // namespace tap::baselines
