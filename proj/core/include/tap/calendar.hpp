// Calendar-day arithmetic anchored to a configurable epoch date.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace tap {

/// Day offset from the calendar's epoch. Ordinal 0 is the epoch date itself;
/// ordinals are never negative.
struct DayIndex {
    std::int64_t ordinal{0};

    auto operator<=>(const DayIndex&) const = default;

    friend DayIndex operator+(DayIndex d, std::int64_t n) { return {d.ordinal + n}; }
    friend DayIndex operator-(DayIndex d, std::int64_t n) { return {d.ordinal - n}; }
    friend std::int64_t operator-(DayIndex a, DayIndex b) { return a.ordinal - b.ordinal; }
};

/// Inclusive day range [first, last].
struct DayRange {
    DayIndex first;
    DayIndex last;

    std::int64_t length() const { return last - first + 1; }
    bool contains(DayIndex d) const { return first <= d && d <= last; }
};

/// Maps between DayIndex ordinals and ISO-8601 (YYYY-MM-DD) dates.
/// Conversion is a bijection for any day on or after the epoch.
class Calendar {
public:
    explicit Calendar(std::string_view epoch_iso);

    /// Parses an ISO date. Throws std::invalid_argument for malformed or
    /// impossible dates, or dates before the epoch.
    DayIndex day(std::string_view iso) const;

    std::string iso(DayIndex d) const;

    const std::string& epoch_iso() const { return epoch_iso_; }

    /// Days since 1970-01-01 of the epoch date (serial form used by binary io).
    std::int64_t epoch_serial() const { return epoch_serial_; }

private:
    std::string epoch_iso_;
    std::int64_t epoch_serial_;
};

/// Strict YYYY-MM-DD parse to days since 1970-01-01. Throws on malformed input.
std::int64_t parse_iso_date(std::string_view iso);

/// Inverse of parse_iso_date.
std::string format_iso_date(std::int64_t serial);

}  // namespace tap
