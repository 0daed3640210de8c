// Calendar-aligned daily count series and raw-record alignment.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tap/calendar.hpp"

namespace tap {

/// Identifies one logical daily stream. Global streams (shared by all topics)
/// carry an empty topic.
struct SeriesKey {
    std::string source;
    std::string feature;
    std::string topic;

    auto operator<=>(const SeriesKey&) const = default;

    std::string str() const {
        return source + "/" + feature + (topic.empty() ? "" : "@" + topic);
    }
};

/// One value per calendar day, no gaps. Values are finite and non-negative;
/// days with no recorded activity are explicit zeros.
struct DailySeries {
    SeriesKey key;
    DayIndex start;
    std::vector<double> values;

    std::int64_t length() const { return static_cast<std::int64_t>(values.size()); }
    DayIndex end() const { return start + (length() - 1); }

    bool covers(DayIndex d) const { return start <= d && d <= end(); }

    double at(DayIndex d) const { return values[static_cast<std::size_t>(d - start)]; }
};

/// Unaligned input row as ingested from storage.
struct RawRecord {
    std::string date;  // ISO-8601
    double value;
};

/// Buckets raw (date, value) records onto the day grid of `range`: one value
/// per day, missing days become 0, duplicate-day records are summed.
/// Records outside the range are ignored. Throws std::invalid_argument naming
/// the offending row for unparseable dates or negative values.
DailySeries align(const SeriesKey& key, const std::vector<RawRecord>& records,
                  const Calendar& cal, DayRange range);

}  // namespace tap
