#include <doctest.h>

#include <stdexcept>

#include "tap/eval/metrics.hpp"

using namespace tap::eval;

namespace {
Eigen::VectorXd vec(std::initializer_list<double> vals) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(vals.size()));
    Eigen::Index i = 0;
    for (double x : vals) v[i++] = x;
    return v;
}
}  // namespace

TEST_CASE("ape compares weekly sums") {
    CHECK(ape(vec({10, 20, 30}), vec({20, 20, 20})) == doctest::Approx(0.0));
    CHECK(ape(vec({11, 22, 77}), vec({10, 20, 70})) == doctest::Approx(10.0));
    CHECK(ape(vec({90, 0, 0}), vec({100, 0, 0})) == doctest::Approx(10.0));
}

TEST_CASE("ape denominator floors at 1 for zero-activity weeks") {
    CHECK(ape(vec({3, 4}), vec({0, 0})) == doctest::Approx(700.0));
    CHECK(ape(vec({0, 0}), vec({0, 0})) == doctest::Approx(0.0));
    // a sub-1 actual sum also floors rather than exploding
    CHECK(ape(vec({0.5, 0.0}), vec({0.1, 0.1})) == doctest::Approx(30.0));
}

TEST_CASE("rmse") {
    CHECK(rmse(vec({1, 2, 3}), vec({1, 2, 3})) == doctest::Approx(0.0));
    CHECK(rmse(vec({3, 0, 0, 0}), vec({0, 3, 0, 0})) == doctest::Approx(std::sqrt(4.5)));
    CHECK(rmse(vec({5}), vec({2})) == doctest::Approx(3.0));
}

TEST_CASE("smape uses the symmetric mean denominator") {
    CHECK(smape(vec({1, 2}), vec({1, 2})) == doctest::Approx(0.0));
    // |3-1|/2 = 1 per element -> 100
    CHECK(smape(vec({3, 3}), vec({1, 1})) == doctest::Approx(100.0));
    // disjoint support saturates at 200
    CHECK(smape(vec({0, 0}), vec({4, 9})) == doctest::Approx(200.0));
    CHECK(smape(vec({7, 2}), vec({0, 0})) == doctest::Approx(200.0));
}

TEST_CASE("smape 0/0 terms count as zero") {
    CHECK(smape(vec({0, 0, 0}), vec({0, 0, 0})) == doctest::Approx(0.0));
    // one matching zero day, one saturated day: (0 + 2) / 2 * 100
    CHECK(smape(vec({0, 5}), vec({0, 0})) == doctest::Approx(100.0));
}

TEST_CASE("smape rejects negative values") {
    CHECK_THROWS_AS(smape(vec({-1, 2}), vec({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(smape(vec({1, 2}), vec({1, -2})), std::invalid_argument);
}

TEST_CASE("metric length validation") {
    CHECK_THROWS_AS(ape(vec({1}), vec({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(rmse(vec({}), vec({})), std::invalid_argument);
    CHECK_THROWS_AS(smape(vec({1, 2, 3}), vec({1})), std::invalid_argument);
}

TEST_CASE("relative improvement reproduces the reference numbers") {
    // 124.76 -> 89.88 and 26911.77 -> 22472.26, both to within 0.05 points
    CHECK(std::abs(relative_improvement(124.76, 89.88) - 27.96) < 0.05);
    CHECK(std::abs(relative_improvement(26911.77, 22472.26) - 16.50) < 0.05);

    CHECK(relative_improvement(100.0, 50.0) == doctest::Approx(50.0));
    CHECK(relative_improvement(50.0, 100.0) == doctest::Approx(-100.0));  // degradation
    CHECK_THROWS_AS(relative_improvement(0.0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(relative_improvement(-5.0, 10.0), std::invalid_argument);
}
