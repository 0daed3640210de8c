#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tap/calendar.hpp"
#include "tap/data/catalog.hpp"
#include "tap/series.hpp"

namespace tap::data {

/// Read access to aligned daily values. Forecasting code goes through this
/// interface so tests can substitute instrumented or feedback-aware sources.
class SeriesSource {
public:
    virtual ~SeriesSource() = default;
    virtual double value(const SeriesKey& key, DayIndex day) const = 0;
    virtual bool has(const SeriesKey& key) const = 0;
};

struct Dataset : SeriesSource {
    Calendar cal;
    DayRange range{};
    std::string platform;
    std::vector<std::string> topics;  // defines the one-hot order
    std::string target_feature = kDefaultTargetFeature;
    std::map<SeriesKey, DailySeries> series;
    std::vector<SourceGroup> enabled_groups;  // after any degradation
    std::vector<std::string> warnings;

    explicit Dataset(Calendar calendar) : cal(std::move(calendar)) {}

    const DailySeries& at(const SeriesKey& key) const;  // throws naming the triple
    double value(const SeriesKey& key, DayIndex day) const override;
    bool has(const SeriesKey& key) const override;

    bool group_enabled(SourceGroup g) const;

    /// The series forecast for `topic` (platform target feature).
    SeriesKey target_key(const std::string& topic) const;

    /// Keys visible to models for one topic: the target role first, then every
    /// enabled catalog entry (per-topic entries bound to the topic). 36 when
    /// all groups are present.
    std::vector<SeriesKey> logical_series(const std::string& topic) const;
};

/// Pass-through source that logs every read. Lets tests prove which
/// (series, day) pairs a forecast actually touched.
class RecordingSource : public SeriesSource {
public:
    explicit RecordingSource(const SeriesSource& base) : base_(base) {}

    double value(const SeriesKey& key, DayIndex day) const override {
        accesses_.push_back({key, day});
        return base_.value(key, day);
    }
    bool has(const SeriesKey& key) const override { return base_.has(key); }

    struct Access {
        SeriesKey key;
        DayIndex day;
    };
    const std::vector<Access>& accesses() const { return accesses_; }
    void clear() { accesses_.clear(); }

private:
    const SeriesSource& base_;
    mutable std::vector<Access> accesses_;
};

/// Reads manifest.json plus every *.csv in `directory` and returns the
/// aligned dataset. A wholly absent exogenous source group downgrades to a
/// warning and the group is disabled; a partially present group, or missing
/// platform series, is an error listing the absent (source, feature, topic)
/// triples.
Dataset load_dataset(const std::string& directory, int jobs = 1);

/// Writes manifest.json + data.csv such that load_dataset round-trips the
/// integer-count content bit-exactly.
void save_dataset(const Dataset& ds, const std::string& directory);

}  // namespace tap::data
