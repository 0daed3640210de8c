#include <doctest.h>

#include <stdexcept>

#include "tap/baselines/persistent.hpp"

using namespace tap;
using namespace tap::baselines;

namespace {
DailySeries series(DayIndex start, std::initializer_list<double> vals) {
    DailySeries s;
    s.key = {"platform", "shares", "t"};
    s.start = start;
    s.values = vals;
    return s;
}
}  // namespace

TEST_CASE("persistent repeats the trailing week bit-exactly") {
    const DailySeries h =
        series(DayIndex{10}, {5, 0, 3.25, 7, 1e9, 0.1, 2, 8, 9, 10});
    // week starts at day 20; trailing week is days 13..19
    const Eigen::VectorXd fc = persistent_forecast(h, DayIndex{20});
    REQUIRE(fc.size() == 7);
    const double expect[7] = {7, 1e9, 0.1, 2, 8, 9, 10};
    for (int i = 0; i < 7; ++i) CHECK(fc[i] == expect[i]);  // identical, not approximate
}

TEST_CASE("history ending exactly at the cut works, one day short does not") {
    const DailySeries h = series(DayIndex{0}, {1, 2, 3, 4, 5, 6, 7});
    const Eigen::VectorXd fc = persistent_forecast(h, DayIndex{7});
    for (int i = 0; i < 7; ++i) CHECK(fc[i] == i + 1);

    CHECK_THROWS_AS(persistent_forecast(h, DayIndex{8}), std::invalid_argument);
    CHECK_THROWS_AS(persistent_forecast(h, DayIndex{6}), std::invalid_argument);
    CHECK_THROWS_AS(persistent_forecast(series(DayIndex{0}, {1, 2, 3}), DayIndex{7}),
                    std::invalid_argument);
}
