#include "tap/pool/features.hpp"

#include <algorithm>
#include <stdexcept>

namespace tap::pool {

FeatureLayout make_layout(const ModelSpec& spec, const data::Dataset& ds,
                          const std::string& topic) {
    const auto topic_it = std::find(ds.topics.begin(), ds.topics.end(), topic);
    if (topic_it == ds.topics.end()) {
        throw std::invalid_argument("unknown topic '" + topic + "'");
    }
    if (spec.topic_count != static_cast<Eigen::Index>(ds.topics.size())) {
        throw std::invalid_argument("spec one-hot width " + std::to_string(spec.topic_count) +
                                    " does not match dataset topic count " +
                                    std::to_string(ds.topics.size()));
    }

    FeatureLayout layout;
    layout.columns.push_back(ds.target_key(topic));
    for (const data::CatalogEntry& e : data::group_entries(spec.group)) {
        layout.columns.push_back({e.source, e.feature, e.per_topic ? topic : std::string()});
    }
    layout.one_hot_width = spec.topic_count;
    layout.one_hot_index = std::distance(ds.topics.begin(), topic_it);

    std::string missing;
    for (const SeriesKey& key : layout.columns) {
        if (!ds.has(key)) missing += (missing.empty() ? "" : ", ") + key.str();
    }
    if (!missing.empty()) {
        throw std::invalid_argument("missing series for " + spec.name() + ": " + missing);
    }
    return layout;
}

Eigen::MatrixXd feature_matrix(const FeatureLayout& layout, const data::SeriesSource& src,
                               DayRange days) {
    Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(days.length(), layout.width());
    for (Eigen::Index c = 0; c < layout.series_count(); ++c) {
        const SeriesKey& key = layout.columns[static_cast<std::size_t>(c)];
        for (Eigen::Index r = 0; r < days.length(); ++r) {
            rows(r, c) = src.value(key, days.first + r);
        }
    }
    rows.col(layout.series_count() + layout.one_hot_index).setOnes();
    return rows;
}

Eigen::MatrixXd assemble_features(const ModelSpec& spec, const data::Dataset& ds,
                                  const std::string& topic, DayRange days) {
    return feature_matrix(make_layout(spec, ds, topic), ds, days);
}

}  // namespace tap::pool
