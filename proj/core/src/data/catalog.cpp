#include "tap/data/catalog.hpp"

#include <stdexcept>

namespace tap::data {

std::string to_string(SourceGroup g) {
    switch (g) {
        case SourceGroup::NewsGdelt: return "news_gdelt";
        case SourceGroup::Reddit: return "reddit";
        case SourceGroup::Acled: return "acled";
        case SourceGroup::EndogenousOnly: return "endogenous";
    }
    throw std::logic_error("unknown source group");
}

SourceGroup group_from_string(const std::string& name) {
    for (SourceGroup g : kAllGroups) {
        if (to_string(g) == name) return g;
    }
    throw std::invalid_argument("unknown source group: '" + name + "'");
}

const std::vector<CatalogEntry>& feature_catalog() {
    static const std::vector<CatalogEntry> catalog = [] {
        std::vector<CatalogEntry> c;
        c.reserve(35);
        // 20 root event-code series, shared across topics.
        for (int code = 1; code <= 20; ++code) {
            const std::string name =
                "event_" + std::string(code < 10 ? "0" : "") + std::to_string(code);
            c.push_back({"gdelt", name, false, SourceGroup::NewsGdelt});
        }
        c.push_back({"news", "articles", true, SourceGroup::NewsGdelt});

        c.push_back({"reddit", "posts", true, SourceGroup::Reddit});
        c.push_back({"reddit", "comments", true, SourceGroup::Reddit});

        for (const char* scale : {"local", "regional", "national", "international"}) {
            c.push_back({"acled", std::string("scale_") + scale, false, SourceGroup::Acled});
        }
        for (const char* type : {"battles", "explosions", "protests", "riots",
                                 "strategic_developments", "violence_against_civilians"}) {
            c.push_back({"acled", std::string("type_") + type, false, SourceGroup::Acled});
        }

        c.push_back({kPlatformSource, "new_users", true, SourceGroup::EndogenousOnly});
        c.push_back({kPlatformSource, kDefaultTargetFeature, true, SourceGroup::EndogenousOnly});
        return c;
    }();
    return catalog;
}

std::vector<CatalogEntry> group_entries(SourceGroup g) {
    std::vector<CatalogEntry> out;
    for (const CatalogEntry& e : feature_catalog()) {
        if (e.group == g) out.push_back(e);
    }
    return out;
}

std::size_t group_feature_count(SourceGroup g) { return group_entries(g).size(); }

}  // namespace tap::data
