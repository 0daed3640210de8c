#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "config.hpp"

namespace tap::cli {

/// Field-present overrides from command-line flags; applied on top of the
/// config file after it loads.
struct Overrides {
    std::optional<std::string> data_dir;
    std::optional<std::string> out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<int> jobs;
    std::optional<std::string> sources;
    std::optional<std::string> ensemble_mode;

    void apply(ExperimentConfig& cfg) const;
};

int cmd_train(const std::string& config_path, const Overrides& ov);
int cmd_forecast(const std::string& config_path, const Overrides& ov);
int cmd_evaluate(const std::string& config_path, const Overrides& ov);
int cmd_rank(const std::string& config_path, const Overrides& ov);

int cmd_synth(const std::optional<std::string>& scenario_path, const std::string& out_dir,
              std::optional<std::uint64_t> seed);

int cmd_gradcheck(int count, std::uint64_t seed);

}  // namespace tap::cli
