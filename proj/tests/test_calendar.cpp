#include <doctest.h>

#include <stdexcept>

#include "tap/calendar.hpp"

using namespace tap;

TEST_CASE("iso date parse and format round-trip") {
    CHECK(parse_iso_date("1970-01-01") == 0);
    CHECK(parse_iso_date("1970-01-02") == 1);
    CHECK(parse_iso_date("2019-01-01") == 17897);
    for (std::int64_t serial : {0LL, 59LL, 17897LL, 18000LL, 25000LL}) {
        CHECK(parse_iso_date(format_iso_date(serial)) == serial);
    }
}

TEST_CASE("leap year handling") {
    CHECK(parse_iso_date("2020-02-29") - parse_iso_date("2020-02-28") == 1);
    CHECK(parse_iso_date("2020-03-01") - parse_iso_date("2020-02-29") == 1);
    CHECK_THROWS_AS(parse_iso_date("2019-02-29"), std::invalid_argument);
    CHECK_THROWS_AS(parse_iso_date("2100-02-29"), std::invalid_argument);  // century rule
    CHECK(parse_iso_date("2000-02-29") > 0);                               // 400-year rule
}

TEST_CASE("malformed dates throw") {
    CHECK_THROWS_AS(parse_iso_date(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_iso_date("2019-1-01"), std::invalid_argument);
    CHECK_THROWS_AS(parse_iso_date("2019/01/01"), std::invalid_argument);
    CHECK_THROWS_AS(parse_iso_date("2019-13-01"), std::invalid_argument);
    CHECK_THROWS_AS(parse_iso_date("2019-04-31"), std::invalid_argument);
    CHECK_THROWS_AS(parse_iso_date("2019-00-10"), std::invalid_argument);
    CHECK_THROWS_AS(parse_iso_date("2019-01-00"), std::invalid_argument);
    CHECK_THROWS_AS(parse_iso_date("x019-01-01"), std::invalid_argument);
}

TEST_CASE("calendar anchors day zero at the epoch") {
    const Calendar cal("2019-01-01");
    CHECK(cal.day("2019-01-01").ordinal == 0);
    CHECK(cal.day("2019-01-31").ordinal == 30);
    CHECK(cal.day("2019-12-31").ordinal == 364);
    CHECK(cal.iso(DayIndex{0}) == "2019-01-01");
    CHECK(cal.iso(DayIndex{58}) == "2019-02-28");
    CHECK(cal.iso(DayIndex{59}) == "2019-03-01");
    CHECK_THROWS_AS(cal.day("2018-12-31"), std::invalid_argument);
}

TEST_CASE("day ranges") {
    const DayRange r{DayIndex{10}, DayIndex{16}};
    CHECK(r.length() == 7);
    CHECK(r.contains(DayIndex{10}));
    CHECK(r.contains(DayIndex{16}));
    CHECK_FALSE(r.contains(DayIndex{9}));
    CHECK_FALSE(r.contains(DayIndex{17}));
}
