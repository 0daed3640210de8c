#include "tap/data/synth.hpp"

#include <cmath>
#include <stdexcept>

#include "tap/rng.hpp"

namespace tap::data {

namespace {

std::string topic_name(std::int64_t i) {
    std::string n = std::to_string(i);
    if (n.size() < 2) n.insert(0, "0");
    return "topic_" + n;
}

Rng series_rng(std::uint64_t seed, const SeriesKey& key) {
    return Rng(derive_seed(seed, {hash_str(key.str())}));
}

std::vector<double> poisson_series(Rng& rng, std::int64_t days, double rate) {
    std::vector<double> v(static_cast<std::size_t>(days));
    for (double& x : v) x = static_cast<double>(rng.poisson(rate));
    return v;
}

// Discrete self-exciting counts: Poisson draws around a base rate plus an
// exponentially decaying echo of recent activity.
std::vector<double> self_exciting_series(Rng& rng, std::int64_t days, double mu, double alpha,
                                         double beta) {
    std::vector<double> v(static_cast<std::size_t>(days));
    for (std::int64_t t = 0; t < days; ++t) {
        double lambda = mu;
        for (std::int64_t k = 1; k <= t && k <= 30; ++k) {
            lambda += alpha * std::exp(-beta * static_cast<double>(k)) *
                      v[static_cast<std::size_t>(t - k)];
        }
        v[static_cast<std::size_t>(t)] = static_cast<double>(rng.poisson(lambda));
    }
    return v;
}

std::vector<double> ar1_series(Rng& rng, std::int64_t days, double mean, double phi,
                               double sigma) {
    std::vector<double> v(static_cast<std::size_t>(days));
    double state = mean;
    for (std::int64_t t = 0; t < days; ++t) {
        state = mean * (1.0 - phi) + phi * state + sigma * rng.normal();
        v[static_cast<std::size_t>(t)] = std::round(std::max(0.0, state));
    }
    return v;
}

}  // namespace

SeriesKey driver_series(SourceGroup group, const std::string& topic) {
    switch (group) {
        case SourceGroup::NewsGdelt: return {"news", "articles", topic};
        case SourceGroup::Reddit: return {"reddit", "posts", topic};
        case SourceGroup::Acled: return {"acled", "type_protests", ""};
        case SourceGroup::EndogenousOnly: break;
    }
    throw std::invalid_argument("cannot plant an endogenous driver");
}

SynthResult synth_generate(const ScenarioSpec& spec) {
    if (spec.topics < 1) throw std::invalid_argument("scenario needs at least 1 topic");
    if (spec.days < 90) {
        throw std::invalid_argument("scenario needs at least 90 days, got " +
                                    std::to_string(spec.days));
    }
    for (const auto& [idx, d] : spec.drivers) {
        if (idx < 0 || idx >= spec.topics) {
            throw std::invalid_argument("driver on unknown topic index " + std::to_string(idx));
        }
        if (d.lag < 1) throw std::invalid_argument("driver lag must be >= 1");
        if (!std::isfinite(d.gain)) throw std::invalid_argument("driver gain must be finite");
        if (d.group == SourceGroup::EndogenousOnly) {
            throw std::invalid_argument("cannot plant an endogenous driver");
        }
    }

    SynthResult out{Dataset{Calendar(spec.epoch)}, {}};
    Dataset& ds = out.dataset;
    ds.platform = spec.platform;
    ds.range = {DayIndex{0}, DayIndex{spec.days - 1}};
    for (std::int64_t i = 0; i < spec.topics; ++i) ds.topics.push_back(topic_name(i));
    ds.enabled_groups.assign(kAllGroups.begin(), kAllGroups.end());

    const auto put = [&](const SeriesKey& key, std::vector<double> values) {
        ds.series.emplace(key, DailySeries{key, ds.range.first, std::move(values)});
    };

    // Exogenous catalog series first; the platform target may reference them.
    for (const CatalogEntry& e : feature_catalog()) {
        if (e.group == SourceGroup::EndogenousOnly) continue;
        const std::vector<std::string> topics =
            e.per_topic ? ds.topics : std::vector<std::string>{""};
        for (const std::string& topic : topics) {
            const SeriesKey key{e.source, e.feature, topic};
            Rng rng = series_rng(spec.seed, key);
            const double rate = e.per_topic ? rng.uniform(3.0, 8.0) : rng.uniform(1.0, 10.0);
            if (e.source == "acled" && e.feature.rfind("type_", 0) == 0) {
                put(key, self_exciting_series(rng, spec.days, rate, 0.3, 1.0));
            } else {
                put(key, poisson_series(rng, spec.days, rate));
            }
        }
    }

    for (std::int64_t i = 0; i < spec.topics; ++i) {
        const std::string topic = topic_name(i);
        {
            const SeriesKey key{kPlatformSource, "new_users", topic};
            Rng rng = series_rng(spec.seed, key);
            put(key, poisson_series(rng, spec.days, rng.uniform(5.0, 15.0)));
        }

        const SeriesKey target = ds.target_key(topic);
        Rng rng = series_rng(spec.seed, target);
        const auto it = spec.drivers.find(i);
        if (it == spec.drivers.end()) {
            put(target, ar1_series(rng, spec.days, spec.ar_mean, spec.ar_phi, spec.ar_sigma));
            continue;
        }

        const DriverSpec& d = it->second;
        const SeriesKey src = driver_series(d.group, topic);
        const DailySeries& x = ds.at(src);
        std::vector<double> y(static_cast<std::size_t>(spec.days));
        for (std::int64_t t = 0; t < spec.days; ++t) {
            const double lagged =
                t >= d.lag ? x.values[static_cast<std::size_t>(t - d.lag)] : 0.0;
            y[static_cast<std::size_t>(t)] = std::round(std::max(
                0.0, spec.base_rate + d.gain * lagged + spec.noise_sigma * rng.normal()));
        }
        put(target, std::move(y));
        out.drivers.push_back({topic, d.group, d.lag, d.gain, src});
    }
    return out;
}

}  // namespace tap::data
