#pragma once

#include <Eigen/Dense>

#include "tap/series.hpp"

namespace tap::baselines {

/// Repeats the 7 observed days immediately preceding week_start, verbatim.
/// Throws std::invalid_argument when the history does not cover them.
Eigen::VectorXd persistent_forecast(const DailySeries& history, DayIndex week_start);

}  // namespace tap::baselines
