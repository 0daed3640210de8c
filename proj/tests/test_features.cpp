#include <doctest.h>

#include <stdexcept>

#include <string>
#include <vector>

#include "tap/pool/features.hpp"

using namespace tap;
using namespace tap::pool;
using data::Dataset;
using data::SourceGroup;

namespace {

// Every catalog series present, plus targets, each series an affine ramp
// value(i, d) = 1000*i + d so matrix cells are predictable.
Dataset make_full_dataset(int days = 20) {
    Dataset ds(Calendar{"2020-01-01"});
    ds.range = {DayIndex{0}, DayIndex{days - 1}};
    ds.platform = "twitter";
    ds.topics = {"alpha", "beta", "gamma"};
    ds.enabled_groups.assign(data::kAllGroups.begin(), data::kAllGroups.end());

    int idx = 0;
    auto add = [&](const SeriesKey& key) {
        DailySeries s;
        s.key = key;
        s.start = ds.range.first;
        s.values.resize(static_cast<std::size_t>(days));
        for (int d = 0; d < days; ++d) s.values[static_cast<std::size_t>(d)] = 1000.0 * idx + d;
        ds.series.emplace(key, std::move(s));
        ++idx;
    };
    for (const data::CatalogEntry& e : data::feature_catalog()) {
        if (e.per_topic) {
            for (const std::string& t : ds.topics) add({e.source, e.feature, t});
        } else {
            add({e.source, e.feature, ""});
        }
    }
    return ds;
}

ModelSpec spec_for(SourceGroup g, const Dataset& ds) {
    ModelSpec s;
    s.platform = ds.platform;
    s.group = g;
    s.combo = {7, 3};
    s.topic_count = static_cast<Eigen::Index>(ds.topics.size());
    return s;
}

}  // namespace

TEST_CASE("layout puts the target first, then group series, then one-hot") {
    const Dataset ds = make_full_dataset();

    SUBCASE("news_gdelt") {
        const auto layout = make_layout(spec_for(SourceGroup::NewsGdelt, ds), ds, "beta");
        CHECK(layout.series_count() == 1 + 21);
        CHECK(layout.one_hot_width == 3);
        CHECK(layout.width() == 22 + 3);
        CHECK(layout.one_hot_index == 1);
        CHECK(layout.columns[0] == ds.target_key("beta"));
        CHECK(layout.columns[1] == SeriesKey{"gdelt", "event_01", ""});
        CHECK(layout.columns[21] == SeriesKey{"news", "articles", "beta"});
    }
    SUBCASE("reddit") {
        const auto layout = make_layout(spec_for(SourceGroup::Reddit, ds), ds, "alpha");
        CHECK(layout.series_count() == 1 + 2);
        CHECK(layout.columns[1] == SeriesKey{"reddit", "posts", "alpha"});
        CHECK(layout.columns[2] == SeriesKey{"reddit", "comments", "alpha"});
        CHECK(layout.one_hot_index == 0);
    }
    SUBCASE("acled") {
        const auto layout = make_layout(spec_for(SourceGroup::Acled, ds), ds, "gamma");
        CHECK(layout.series_count() == 1 + 10);
        CHECK(layout.columns[1] == SeriesKey{"acled", "scale_local", ""});
        CHECK(layout.columns[10] == SeriesKey{"acled", "type_violence_against_civilians", ""});
        CHECK(layout.one_hot_index == 2);
    }
    SUBCASE("endogenous repeats the target by construction") {
        const auto layout = make_layout(spec_for(SourceGroup::EndogenousOnly, ds), ds, "alpha");
        CHECK(layout.series_count() == 1 + 2);
        CHECK(layout.columns[0] == ds.target_key("alpha"));
        CHECK(layout.columns[1] == SeriesKey{"platform", "new_users", "alpha"});
        CHECK(layout.columns[2] == ds.target_key("alpha"));
    }
}

TEST_CASE("feature matrix reads values in layout order and sets the one-hot") {
    const Dataset ds = make_full_dataset();
    const auto spec = spec_for(SourceGroup::Reddit, ds);
    const auto layout = make_layout(spec, ds, "beta");
    const DayRange days{DayIndex{4}, DayIndex{9}};

    const Eigen::MatrixXd rows = feature_matrix(layout, ds, days);
    REQUIRE(rows.rows() == 6);
    REQUIRE(rows.cols() == layout.width());

    for (Eigen::Index r = 0; r < rows.rows(); ++r) {
        for (Eigen::Index c = 0; c < layout.series_count(); ++c) {
            const SeriesKey& key = layout.columns[static_cast<std::size_t>(c)];
            CHECK(rows(r, c) == ds.at(key).at(days.first + r));
        }
        // one-hot block: the topic's column is 1, the others 0
        CHECK(rows(r, layout.series_count() + 0) == 0.0);
        CHECK(rows(r, layout.series_count() + 1) == 1.0);
        CHECK(rows(r, layout.series_count() + 2) == 0.0);
    }

    CHECK(rows == assemble_features(spec, ds, "beta", days));
}

TEST_CASE("layout validation") {
    Dataset ds = make_full_dataset();

    SUBCASE("unknown topic") {
        CHECK_THROWS_WITH_AS(make_layout(spec_for(SourceGroup::Reddit, ds), ds, "delta"),
                             doctest::Contains("delta"), std::invalid_argument);
    }
    SUBCASE("one-hot width mismatch") {
        auto spec = spec_for(SourceGroup::Reddit, ds);
        spec.topic_count = 5;
        CHECK_THROWS_AS(make_layout(spec, ds, "alpha"), std::invalid_argument);
    }
    SUBCASE("every missing series is listed") {
        ds.series.erase(SeriesKey{"reddit", "posts", "alpha"});
        ds.series.erase(SeriesKey{"reddit", "comments", "alpha"});
        try {
            make_layout(spec_for(SourceGroup::Reddit, ds), ds, "alpha");
            FAIL("expected invalid_argument");
        } catch (const std::invalid_argument& e) {
            const std::string what = e.what();
            CHECK(what.find("reddit/posts@alpha") != std::string::npos);
            CHECK(what.find("reddit/comments@alpha") != std::string::npos);
            CHECK(what.find("reddit_m7_n3") != std::string::npos);
        }
    }
}
