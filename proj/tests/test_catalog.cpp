#include <doctest.h>

#include <set>
#include <stdexcept>

#include "tap/data/catalog.hpp"

using namespace tap::data;

TEST_CASE("catalog size and per-group feature counts") {
    const auto& cat = feature_catalog();
    CHECK(cat.size() == 35);
    CHECK(group_feature_count(SourceGroup::NewsGdelt) == 21);
    CHECK(group_feature_count(SourceGroup::Reddit) == 2);
    CHECK(group_feature_count(SourceGroup::Acled) == 10);
    CHECK(group_feature_count(SourceGroup::EndogenousOnly) == 2);

    std::size_t total = 0;
    for (SourceGroup g : kAllGroups) total += group_entries(g).size();
    CHECK(total == cat.size());
}

TEST_CASE("catalog contents match the declared inventory") {
    // Build the expected set from the inventory definition independently.
    std::set<std::pair<std::string, std::string>> expect;
    for (int i = 1; i <= 20; ++i) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "event_%02d", i);
        expect.emplace("gdelt", buf);
    }
    expect.emplace("news", "articles");
    expect.emplace("reddit", "posts");
    expect.emplace("reddit", "comments");
    for (const char* s : {"scale_local", "scale_regional", "scale_national",
                          "scale_international"})
        expect.emplace("acled", s);
    for (const char* t : {"type_battles", "type_explosions", "type_protests", "type_riots",
                          "type_strategic_developments", "type_violence_against_civilians"})
        expect.emplace("acled", t);
    expect.emplace("platform", "new_users");
    expect.emplace("platform", "shares");

    std::set<std::pair<std::string, std::string>> got;
    for (const CatalogEntry& e : feature_catalog()) got.emplace(e.source, e.feature);
    CHECK(got == expect);
}

TEST_CASE("per-topic flags: news, reddit and platform series are per topic") {
    for (const CatalogEntry& e : feature_catalog()) {
        if (e.source == "gdelt" || e.source == "acled") {
            CHECK_FALSE(e.per_topic);
        } else {
            CHECK(e.per_topic);
        }
    }
}

TEST_CASE("group ownership follows the source") {
    for (const CatalogEntry& e : feature_catalog()) {
        if (e.source == "gdelt" || e.source == "news") CHECK(e.group == SourceGroup::NewsGdelt);
        if (e.source == "reddit") CHECK(e.group == SourceGroup::Reddit);
        if (e.source == "acled") CHECK(e.group == SourceGroup::Acled);
        if (e.source == "platform") CHECK(e.group == SourceGroup::EndogenousOnly);
    }
}

TEST_CASE("group names round-trip") {
    for (SourceGroup g : kAllGroups) CHECK(group_from_string(to_string(g)) == g);
    CHECK(to_string(SourceGroup::NewsGdelt) == "news_gdelt");
    CHECK(to_string(SourceGroup::EndogenousOnly) == "endogenous");
    CHECK_THROWS_AS(group_from_string("twitter"), std::invalid_argument);
}

TEST_CASE("catalog order is stable and group-contiguous") {
    const auto& cat = feature_catalog();
    CHECK(cat.front().source == "gdelt");
    CHECK(cat.front().feature == "event_01");
    CHECK(cat.back().source == "platform");

    // entries of one group appear consecutively, in kAllGroups order
    std::size_t at = 0;
    for (SourceGroup g : kAllGroups) {
        for (const CatalogEntry& e : group_entries(g)) {
            CHECK(cat[at].source == e.source);
            CHECK(cat[at].feature == e.feature);
            ++at;
        }
    }
    CHECK(at == cat.size());
}
