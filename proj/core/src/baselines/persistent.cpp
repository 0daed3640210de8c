#include "tap/baselines/persistent.hpp"

#include <stdexcept>

namespace tap::baselines {

Eigen::VectorXd persistent_forecast(const DailySeries& history, DayIndex week_start) {
    if (!history.covers(week_start - 7) || !history.covers(week_start - 1)) {
        throw std::invalid_argument("persistent forecast needs the 7 days before day " +
                                    std::to_string(week_start.ordinal));
    }
    Eigen::VectorXd week(7);
    for (int i = 0; i < 7; ++i) week[i] = history.at(week_start - 7 + i);
    return week;
}

}  // namespace tap::baselines
