#include <doctest.h>

#include <stdexcept>

#include "tap/series.hpp"

using namespace tap;

TEST_CASE("series keys format as source/feature@topic") {
    CHECK(SeriesKey{"reddit", "posts", "greece"}.str() == "reddit/posts@greece");
    CHECK(SeriesKey{"gdelt", "event_07", ""}.str() == "gdelt/event_07");
}

TEST_CASE("series key ordering is lexicographic over the triple") {
    const SeriesKey a{"acled", "type_battles", ""};
    const SeriesKey b{"acled", "type_riots", ""};
    const SeriesKey c{"reddit", "posts", "x"};
    CHECK(a < b);
    CHECK(b < c);
    CHECK_FALSE(c < a);
}

TEST_CASE("daily series coverage and indexing") {
    DailySeries s;
    s.start = DayIndex{5};
    s.values = {10, 11, 12};
    CHECK(s.length() == 3);
    CHECK(s.end().ordinal == 7);
    CHECK(s.covers(DayIndex{5}));
    CHECK(s.covers(DayIndex{7}));
    CHECK_FALSE(s.covers(DayIndex{8}));
    CHECK(s.at(DayIndex{6}) == 11);
}

TEST_CASE("align buckets records onto the day grid") {
    const Calendar cal("2019-01-01");
    const DayRange range{cal.day("2019-01-02"), cal.day("2019-01-05")};
    std::vector<RawRecord> raw{
        {"2019-01-03", 6.0},
        {"2019-01-02", 5.0},
        {"2019-01-05", 9.0},
        {"2019-01-03", 1.0},   // same day: summed
        {"2019-01-20", 99.0},  // outside range: ignored
    };
    const DailySeries s = align(SeriesKey{"a", "b", ""}, raw, cal, range);
    CHECK(s.start == range.first);
    CHECK(s.values == std::vector<double>{5.0, 7.0, 0.0, 9.0});  // missing day -> 0
}

TEST_CASE("align rejects bad rows naming the series") {
    const Calendar cal("2019-01-01");
    const DayRange range{cal.day("2019-01-02"), cal.day("2019-01-05")};
    const SeriesKey key{"src", "feat", "t"};
    const std::vector<RawRecord> bad_date{{"2019-99-01", 1.0}};
    const std::vector<RawRecord> negative{{"2019-01-02", -1.0}};
    CHECK_THROWS_WITH_AS(align(key, bad_date, cal, range), doctest::Contains("src/feat@t"),
                         std::invalid_argument);
    CHECK_THROWS_AS(align(key, negative, cal, range), std::invalid_argument);
}
