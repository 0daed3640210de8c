#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

// Exit codes: 0 success, 1 runtime failure, 2 invalid input or config.
constexpr int kRuntimeError = 1;
constexpr int kInputError = 2;

void add_overrides(CLI::App* cmd, tap::cli::Overrides& ov, bool with_sources,
                   bool with_ensemble) {
    cmd->add_option("--data-dir", ov.data_dir, "Override the dataset directory");
    cmd->add_option("--out", ov.out_dir, "Override the output directory");
    cmd->add_option("--seed", ov.seed, "Override the base seed");
    cmd->add_option("--jobs", ov.jobs, "Worker threads")->check(CLI::PositiveNumber);
    if (with_sources)
        cmd->add_option("--sources", ov.sources,
                        "Comma list of news_gdelt,reddit,acled,endogenous (or all/exo/endo)");
    if (with_ensemble)
        cmd->add_option("--ensemble-mode", ov.ensemble_mode, "all or per-source-best");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topic-level activity forecasting over pooled LSTM models"};
    app.require_subcommand(1);

    std::string config_path;
    tap::cli::Overrides ov;

    CLI::App* train = app.add_subcommand("train", "Train the model pool for an experiment");
    train->add_option("--config", config_path, "Experiment config JSON")->required();
    add_overrides(train, ov, /*with_sources=*/true, /*with_ensemble=*/false);

    CLI::App* forecast = app.add_subcommand("forecast",
                                            "Forecast every test week with TAP and baselines");
    forecast->add_option("--config", config_path, "Experiment config JSON")->required();
    add_overrides(forecast, ov, /*with_sources=*/false, /*with_ensemble=*/true);

    CLI::App* evaluate = app.add_subcommand("evaluate", "Score forecasts against actuals");
    evaluate->add_option("--config", config_path, "Experiment config JSON")->required();
    add_overrides(evaluate, ov, /*with_sources=*/false, /*with_ensemble=*/false);

    CLI::App* rank = app.add_subcommand("rank", "Rank models per metric from the report");
    rank->add_option("--config", config_path, "Experiment config JSON")->required();
    add_overrides(rank, ov, /*with_sources=*/false, /*with_ensemble=*/false);

    std::optional<std::string> scenario_path;
    std::string synth_out;
    std::optional<std::uint64_t> synth_seed;
    CLI::App* synth = app.add_subcommand("synth", "Generate a synthetic dataset");
    synth->add_option("--config", scenario_path, "Scenario JSON (defaults to a mixed scenario)");
    synth->add_option("--out", synth_out, "Dataset output directory")->required();
    synth->add_option("--seed", synth_seed, "Override the scenario seed");

    int gc_count = 20;
    std::uint64_t gc_seed = 0;
    CLI::App* gradcheck = app.add_subcommand("gradcheck",
                                             "Verify LSTM gradients with finite differences");
    gradcheck->add_option("--count", gc_count, "Number of random configurations")
        ->check(CLI::PositiveNumber);
    gradcheck->add_option("--seed", gc_seed, "Base seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (train->parsed()) return tap::cli::cmd_train(config_path, ov);
        if (forecast->parsed()) return tap::cli::cmd_forecast(config_path, ov);
        if (evaluate->parsed()) return tap::cli::cmd_evaluate(config_path, ov);
        if (rank->parsed()) return tap::cli::cmd_rank(config_path, ov);
        if (synth->parsed()) return tap::cli::cmd_synth(scenario_path, synth_out, synth_seed);
        if (gradcheck->parsed()) return tap::cli::cmd_gradcheck(gc_count, gc_seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRuntimeError;
    }
    return kInputError;  // unreachable with require_subcommand(1)
}
