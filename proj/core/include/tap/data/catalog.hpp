// Fixed feature inventory: which daily series exist, which source group owns
// each, and whether a series is kept per topic or shared globally.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tap::data {

enum class SourceGroup : std::uint8_t { NewsGdelt, Reddit, Acled, EndogenousOnly };

inline constexpr std::array<SourceGroup, 4> kAllGroups = {
    SourceGroup::NewsGdelt, SourceGroup::Reddit, SourceGroup::Acled, SourceGroup::EndogenousOnly};

// The three groups a dataset may lack without failing the load.
inline constexpr std::array<SourceGroup, 3> kExogenousGroups = {
    SourceGroup::NewsGdelt, SourceGroup::Reddit, SourceGroup::Acled};

std::string to_string(SourceGroup g);
SourceGroup group_from_string(const std::string& name);

struct CatalogEntry {
    std::string source;   // CSV `source` column
    std::string feature;  // CSV `feature` column
    bool per_topic;       // false: one global series, empty topic
    SourceGroup group;
};

// The 35 physical entries: 20 event-code + 1 news series, 2 Reddit series,
// 4 scale + 6 event-type series, 2 platform series. Order is fixed and is the
// feature order used everywhere downstream.
const std::vector<CatalogEntry>& feature_catalog();

// Catalog entries owned by one group, in catalog order.
std::vector<CatalogEntry> group_entries(SourceGroup g);

// 21 / 2 / 10 / 2.
std::size_t group_feature_count(SourceGroup g);

// Name of the platform series used as the forecast target by default.
inline constexpr const char* kPlatformSource = "platform";
inline constexpr const char* kDefaultTargetFeature = "shares";

}  // namespace tap::data
