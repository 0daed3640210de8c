// Seeded scenario generator with planted exogenous drivers. Driven topics are
// deterministic functions of a known source series (plus noise), which gives
// selection tests a ground-truth answer to check against.
#pragma once

#include <map>

#include "tap/data/dataset.hpp"

namespace tap::data {

struct DriverSpec {
    SourceGroup group = SourceGroup::Reddit;
    int lag = 1;
    double gain = 5.0;
};

struct ScenarioSpec {
    std::int64_t topics = 4;
    std::int64_t days = 300;
    std::map<std::int64_t, DriverSpec> drivers;  // topic index -> planted driver
    double noise_sigma = 1.0;
    double base_rate = 20.0;  // intercept of driven topics
    double ar_mean = 50.0;    // undriven topics: AR(1) level,
    double ar_phi = 0.8;      // persistence,
    double ar_sigma = 6.0;    // innovation sd
    std::uint64_t seed = 0;
    std::string platform = "synth";
    std::string epoch = "2019-01-01";
};

struct PlantedDriver {
    std::string topic;
    SourceGroup group;
    int lag;
    double gain;
    SeriesKey driver;  // the series the topic was derived from
};

struct SynthResult {
    Dataset dataset;
    std::vector<PlantedDriver> drivers;
};

/// Which series a driver of `group` plants into for `topic` (per-topic series
/// for news/Reddit, one shared ACLED series).
SeriesKey driver_series(SourceGroup group, const std::string& topic);

/// Deterministic per seed: two calls with equal specs produce byte-identical
/// datasets. Throws std::invalid_argument for topics < 1, days < 90, lag < 1,
/// non-finite gain, or a driver on a topic index that does not exist.
SynthResult synth_generate(const ScenarioSpec& spec);

}  // namespace tap::data
