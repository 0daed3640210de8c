#include "tap/series.hpp"

#include <cmath>
#include <stdexcept>

namespace tap {

DailySeries align(const SeriesKey& key, const std::vector<RawRecord>& records,
                  const Calendar& cal, DayRange range) {
    DailySeries out;
    out.key = key;
    out.start = range.first;
    out.values.assign(static_cast<std::size_t>(range.length()), 0.0);

    for (const RawRecord& rec : records) {
        if (!std::isfinite(rec.value) || rec.value < 0.0) {
            throw std::invalid_argument("negative or non-finite value for " + key.str() +
                                        " at " + rec.date + ": " + std::to_string(rec.value));
        }
        DayIndex d{};
        try {
            d = cal.day(rec.date);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("row for " + key.str() + ": " + e.what());
        }
        if (!range.contains(d)) continue;
        out.values[static_cast<std::size_t>(d - range.first)] += rec.value;
    }
    return out;
}

}  // namespace tap
