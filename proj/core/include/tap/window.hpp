// Sliding-window sample extraction for sequence models.
#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "tap/calendar.hpp"

namespace tap {

/// One supervised sample: m consecutive days of features and the n target
/// days that immediately follow them.
struct WindowSample {
    Eigen::MatrixXd inputs;  // m x F
    Eigen::VectorXd target;  // n
    std::string topic;
    DayIndex end;  // last input day
};

/// Cuts stride-1 windows out of a feature matrix (rows = days, cols = F) and
/// its aligned target series. Row r of `features` and element r of `targets`
/// describe day `start + r`. Sample i reads feature rows [i, i+m) and target
/// rows [i+m, i+m+n); with L rows this yields exactly L - m - n + 1 samples.
/// Throws std::invalid_argument("insufficient history ...") when L < m + n.
std::vector<WindowSample> window_samples(const Eigen::MatrixXd& features,
                                         const std::vector<double>& targets,
                                         const std::string& topic, DayIndex start, int lookback,
                                         int horizon, int stride = 1);

}  // namespace tap
