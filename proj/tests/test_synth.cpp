#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "tap/data/synth.hpp"

using namespace tap;
using namespace tap::data;

namespace {

std::vector<double> values_of(const Dataset& ds, const SeriesKey& key) {
    return ds.at(key).values;
}

// Pearson correlation of x[t - lag] against y[t].
double lagged_corr(const std::vector<double>& x, const std::vector<double>& y, int lag) {
    const std::size_t n = y.size() - static_cast<std::size_t>(lag);
    double mx = 0, my = 0;
    for (std::size_t t = 0; t < n; ++t) {
        mx += x[t];
        my += y[t + static_cast<std::size_t>(lag)];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const double dx = x[t] - mx;
        const double dy = y[t + static_cast<std::size_t>(lag)] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    return sxy / std::sqrt(sxx * syy);
}

ScenarioSpec base_spec() {
    ScenarioSpec spec;
    spec.topics = 3;
    spec.days = 200;
    spec.seed = 11;
    spec.drivers[0] = {SourceGroup::Reddit, 1, 5.0};
    spec.drivers[1] = {SourceGroup::NewsGdelt, 2, 4.0};
    return spec;
}

}  // namespace

TEST_CASE("generation is deterministic per seed") {
    const SynthResult a = synth_generate(base_spec());
    const SynthResult b = synth_generate(base_spec());
    REQUIRE(a.dataset.series.size() == b.dataset.series.size());
    for (const auto& [key, s] : a.dataset.series) CHECK(b.dataset.at(key).values == s.values);

    ScenarioSpec other = base_spec();
    other.seed = 12;
    const SynthResult c = synth_generate(other);
    bool any_difference = false;
    for (const auto& [key, s] : a.dataset.series) {
        if (c.dataset.at(key).values != s.values) any_difference = true;
    }
    CHECK(any_difference);
}

TEST_CASE("dataset covers the full catalog for every topic") {
    const SynthResult r = synth_generate(base_spec());
    CHECK(r.dataset.topics == std::vector<std::string>{"topic_00", "topic_01", "topic_02"});
    CHECK(r.dataset.range.length() == 200);
    CHECK(r.dataset.warnings.empty());
    for (const std::string& topic : r.dataset.topics) {
        for (const SeriesKey& key : r.dataset.logical_series(topic)) CHECK(r.dataset.has(key));
    }
    for (const auto& [key, s] : r.dataset.series) {
        for (double v : s.values) {
            CHECK(v >= 0.0);
            CHECK(v == std::floor(v));  // counts
        }
    }
}

TEST_CASE("planted driver shows up as a lagged correlation") {
    const SynthResult r = synth_generate(base_spec());
    REQUIRE(r.drivers.size() == 2);

    for (const PlantedDriver& d : r.drivers) {
        const auto driver = values_of(r.dataset, d.driver);
        const auto target = values_of(r.dataset, r.dataset.target_key(d.topic));
        const double planted = lagged_corr(driver, target, d.lag);
        CHECK(planted > 0.6);
    }

    // the undriven topic correlates with nothing
    const auto reddit0 = values_of(r.dataset, {"reddit", "posts", "topic_00"});
    const auto undriven = values_of(r.dataset, r.dataset.target_key("topic_02"));
    CHECK(std::abs(lagged_corr(reddit0, undriven, 1)) < 0.3);
}

TEST_CASE("driver series mapping per group") {
    CHECK(driver_series(SourceGroup::Reddit, "t").str() == "reddit/posts@t");
    CHECK(driver_series(SourceGroup::NewsGdelt, "t").str() == "news/articles@t");
    CHECK(driver_series(SourceGroup::Acled, "t").str() == "acled/type_protests");
    CHECK_THROWS_AS(driver_series(SourceGroup::EndogenousOnly, "t"), std::invalid_argument);
}

TEST_CASE("undriven topics follow a persistent process") {
    ScenarioSpec spec;
    spec.topics = 1;
    spec.days = 300;
    spec.seed = 3;  // no drivers: pure AR(1)
    const SynthResult r = synth_generate(spec);
    const auto y = values_of(r.dataset, r.dataset.target_key("topic_00"));
    CHECK(lagged_corr(y, y, 1) > 0.5);  // phi = 0.8 less rounding noise
}

TEST_CASE("invalid scenarios are rejected") {
    ScenarioSpec s = base_spec();
    s.topics = 0;
    CHECK_THROWS_AS(synth_generate(s), std::invalid_argument);

    s = base_spec();
    s.days = 30;
    CHECK_THROWS_AS(synth_generate(s), std::invalid_argument);

    s = base_spec();
    s.drivers[7] = {SourceGroup::Reddit, 1, 5.0};  // topic index out of range
    CHECK_THROWS_AS(synth_generate(s), std::invalid_argument);

    s = base_spec();
    s.drivers[0].lag = 0;
    CHECK_THROWS_AS(synth_generate(s), std::invalid_argument);
}
