#include "tap/calendar.hpp"

#include <cctype>
#include <charconv>
#include <chrono>
#include <stdexcept>

namespace tap {

namespace {

bool all_digits(std::string_view s) {
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return !s.empty();
}

int to_int(std::string_view s) {
    int v = 0;
    std::from_chars(s.data(), s.data() + s.size(), v);
    return v;
}

}  // namespace

std::int64_t parse_iso_date(std::string_view iso) {
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-' ||
        !all_digits(iso.substr(0, 4)) || !all_digits(iso.substr(5, 2)) ||
        !all_digits(iso.substr(8, 2))) {
        throw std::invalid_argument("bad ISO-8601 date: '" + std::string(iso) +
                                    "' (expected YYYY-MM-DD)");
    }
    using namespace std::chrono;
    const year_month_day ymd{year{to_int(iso.substr(0, 4))},
                             month{static_cast<unsigned>(to_int(iso.substr(5, 2)))},
                             day{static_cast<unsigned>(to_int(iso.substr(8, 2)))}};
    if (!ymd.ok()) {
        throw std::invalid_argument("impossible calendar date: '" + std::string(iso) + "'");
    }
    return sys_days{ymd}.time_since_epoch().count();
}

std::string format_iso_date(std::int64_t serial) {
    using namespace std::chrono;
    const year_month_day ymd{sys_days{days{serial}}};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

Calendar::Calendar(std::string_view epoch_iso)
    : epoch_iso_(epoch_iso), epoch_serial_(parse_iso_date(epoch_iso)) {}

DayIndex Calendar::day(std::string_view iso) const {
    const std::int64_t serial = parse_iso_date(iso);
    if (serial < epoch_serial_) {
        throw std::invalid_argument("date '" + std::string(iso) + "' precedes epoch " +
                                    epoch_iso_);
    }
    return DayIndex{serial - epoch_serial_};
}

std::string Calendar::iso(DayIndex d) const {
    return format_iso_date(epoch_serial_ + d.ordinal);
}

}  // namespace tap
