#pragma once

#include "tap/data/dataset.hpp"
#include "tap/pool/spec.hpp"

namespace tap::pool {

/// Column plan of one (spec, topic) pair. A feature row for day d is
/// [value(columns[0], d), ..., value(columns.back(), d), one-hot(topic)]:
/// the topic's own target series first, then the spec's source-group series
/// in catalog order, then the static one-hot block.
struct FeatureLayout {
    std::vector<SeriesKey> columns;
    Eigen::Index one_hot_width = 0;
    Eigen::Index one_hot_index = 0;

    Eigen::Index series_count() const { return static_cast<Eigen::Index>(columns.size()); }
    Eigen::Index width() const { return series_count() + one_hot_width; }
};

/// Resolves the layout against a dataset. Throws std::invalid_argument
/// listing every absent (source, feature, topic) triple, or an unknown topic.
FeatureLayout make_layout(const ModelSpec& spec, const data::Dataset& ds,
                          const std::string& topic);

/// One row per day of `days`, values read through `src` so callers can
/// substitute feedback or instrumented sources.
Eigen::MatrixXd feature_matrix(const FeatureLayout& layout, const data::SeriesSource& src,
                               DayRange days);

/// make_layout + feature_matrix over the dataset itself.
Eigen::MatrixXd assemble_features(const ModelSpec& spec, const data::Dataset& ds,
                                  const std::string& topic, DayRange days);

}  // namespace tap::pool
