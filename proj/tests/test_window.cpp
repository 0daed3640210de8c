#include <doctest.h>

#include <stdexcept>

#include "tap/window.hpp"

using namespace tap;

namespace {

Eigen::MatrixXd ramp(int rows, int cols) {
    Eigen::MatrixXd m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = 10.0 * r + c;
    return m;
}

}  // namespace

TEST_CASE("window count is L - m - n + 1") {
    const auto f = ramp(10, 2);
    std::vector<double> t(10);
    for (int i = 0; i < 10; ++i) t[static_cast<std::size_t>(i)] = i;

    CHECK(window_samples(f, t, "x", DayIndex{0}, 3, 2).size() == 6);
    CHECK(window_samples(f, t, "x", DayIndex{0}, 9, 1).size() == 1);
    CHECK(window_samples(f, t, "x", DayIndex{0}, 1, 1).size() == 9);
}

TEST_CASE("window contents are exact slices") {
    const auto f = ramp(8, 2);
    std::vector<double> t{100, 101, 102, 103, 104, 105, 106, 107};
    const auto samples = window_samples(f, t, "greece", DayIndex{20}, 3, 2);
    REQUIRE(samples.size() == 4);

    const WindowSample& first = samples[0];
    CHECK(first.inputs == f.middleRows(0, 3));
    CHECK(first.target.size() == 2);
    CHECK(first.target[0] == 103);
    CHECK(first.target[1] == 104);
    CHECK(first.topic == "greece");
    CHECK(first.end.ordinal == 22);  // start 20 + last input row 2

    const WindowSample& last = samples[3];
    CHECK(last.inputs == f.middleRows(3, 3));
    CHECK(last.target[0] == 106);
    CHECK(last.target[1] == 107);
    CHECK(last.end.ordinal == 25);
}

TEST_CASE("stride skips windows deterministically") {
    const auto f = ramp(10, 1);
    std::vector<double> t(10, 1.0);
    const auto samples = window_samples(f, t, "x", DayIndex{0}, 2, 1, 3);
    REQUIRE(samples.size() == 3);  // window starts 0, 3, 6
    CHECK(samples[0].end.ordinal == 1);
    CHECK(samples[1].end.ordinal == 4);
    CHECK(samples[2].end.ordinal == 7);
}

TEST_CASE("insufficient history throws") {
    const auto f = ramp(5, 1);
    std::vector<double> t(5, 0.0);
    CHECK_THROWS_WITH_AS(window_samples(f, t, "x", DayIndex{0}, 5, 1),
                         doctest::Contains("insufficient history"), std::invalid_argument);
    CHECK_NOTHROW(window_samples(f, t, "x", DayIndex{0}, 4, 1));
}

TEST_CASE("feature rows and targets must agree in length") {
    const auto f = ramp(6, 1);
    std::vector<double> t(5, 0.0);
    CHECK_THROWS_AS(window_samples(f, t, "x", DayIndex{0}, 2, 1), std::invalid_argument);
}
