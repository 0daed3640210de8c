#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tap/data/synth.hpp"
#include "tap/nn/train.hpp"
#include "tap/pool/forecast.hpp"
#include "tap/splits.hpp"

namespace tap::cli {

struct ExperimentConfig {
    std::string data_dir;
    std::string out_dir = "out";
    std::string train_start;  // ISO dates, resolved against the dataset epoch
    std::string train_end;
    std::string test_start;
    int test_weeks = 3;
    std::vector<data::SourceGroup> sources{data::kAllGroups.begin(), data::kAllGroups.end()};
    std::vector<pool::WindowCombo> combos{pool::kDefaultCombos.begin(),
                                          pool::kDefaultCombos.end()};
    std::vector<Eigen::Index> hidden = {30, 10, 5};
    std::int64_t epochs = 200;
    double learning_rate = 1e-3;
    Eigen::Index batch_size = 32;
    std::uint64_t seed = 0;
    pool::EnsembleMode ensemble_mode = pool::EnsembleMode::All;
    int jobs = 1;

    nn::TrainConfig train_config() const;
    SplitSpec split(const Calendar& cal) const;
};

/// Parses and validates the config JSON. Unknown keys, bad types and
/// out-of-range values all throw std::invalid_argument naming the field.
ExperimentConfig load_experiment_config(const std::string& path);

/// Scenario JSON for the synth command; missing file fields keep defaults.
data::ScenarioSpec load_scenario_spec(const std::string& path);

/// "all" or comma list of {news_gdelt, reddit, acled, endogenous, endo, exo}.
std::vector<data::SourceGroup> parse_sources(const std::string& text);

}  // namespace tap::cli
