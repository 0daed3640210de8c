#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace tap::cli {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument("config: " + msg); }

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        bad(path + ": " + e.what());
    }
    if (!j.is_object()) bad(path + ": top level must be an object");
    return j;
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!allowed.contains(key)) bad(where + ": unknown key \"" + key + "\"");
    }
}

std::string require_string(const json& j, const std::string& key) {
    if (!j.contains(key)) bad("missing required key \"" + key + "\"");
    if (!j.at(key).is_string()) bad("\"" + key + "\" must be a string");
    return j.at(key).get<std::string>();
}

std::int64_t get_int(const json& j, const std::string& key, std::int64_t fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number_integer()) bad("\"" + key + "\" must be an integer");
    return j.at(key).get<std::int64_t>();
}

double get_double(const json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number()) bad("\"" + key + "\" must be a number");
    return j.at(key).get<double>();
}

}  // namespace

nn::TrainConfig ExperimentConfig::train_config() const {
    nn::TrainConfig cfg;
    cfg.hidden_candidates = hidden;
    cfg.epochs = epochs;
    cfg.batch_size = batch_size;
    cfg.adam.lr = learning_rate;
    cfg.seed = seed;
    return cfg;
}

SplitSpec ExperimentConfig::split(const Calendar& cal) const {
    const DayRange train{cal.day(train_start), cal.day(train_end)};
    return SplitSpec::make(train, cal.day(test_start), test_weeks);
}

std::vector<data::SourceGroup> parse_sources(const std::string& text) {
    if (text == "all")
        return {data::kAllGroups.begin(), data::kAllGroups.end()};
    if (text == "exo")
        return {data::kExogenousGroups.begin(), data::kExogenousGroups.end()};
    if (text == "endo") return {data::SourceGroup::EndogenousOnly};

    std::vector<data::SourceGroup> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(data::group_from_string(item));  // throws on unknown names
    }
    if (out.empty()) bad("source list \"" + text + "\" is empty");
    std::set<data::SourceGroup> seen(out.begin(), out.end());
    if (seen.size() != out.size()) bad("source list \"" + text + "\" repeats a group");
    return out;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    const json j = load_json(path);
    reject_unknown_keys(j,
                        {"data_dir", "out_dir", "train", "test", "sources", "combos", "hidden",
                         "epochs", "learning_rate", "batch_size", "seed", "ensemble_mode", "jobs"},
                        path);

    ExperimentConfig cfg;
    cfg.data_dir = require_string(j, "data_dir");
    if (j.contains("out_dir")) cfg.out_dir = require_string(j, "out_dir");

    if (!j.contains("train") || !j.at("train").is_object())
        bad("missing \"train\" object with \"start\" and \"end\"");
    reject_unknown_keys(j.at("train"), {"start", "end"}, "train");
    cfg.train_start = require_string(j.at("train"), "start");
    cfg.train_end = require_string(j.at("train"), "end");

    if (!j.contains("test") || !j.at("test").is_object())
        bad("missing \"test\" object with \"start\" and \"weeks\"");
    reject_unknown_keys(j.at("test"), {"start", "weeks"}, "test");
    cfg.test_start = require_string(j.at("test"), "start");
    cfg.test_weeks = static_cast<int>(get_int(j.at("test"), "weeks", 3));
    if (cfg.test_weeks < 1) bad("test.weeks must be >= 1");

    if (j.contains("sources")) {
        if (j.at("sources").is_string()) {
            cfg.sources = parse_sources(j.at("sources").get<std::string>());
        } else if (j.at("sources").is_array()) {
            cfg.sources.clear();
            for (const auto& item : j.at("sources")) {
                if (!item.is_string()) bad("\"sources\" entries must be strings");
                cfg.sources.push_back(data::group_from_string(item.get<std::string>()));
            }
            if (cfg.sources.empty()) bad("\"sources\" must not be empty");
        } else {
            bad("\"sources\" must be a string or an array of strings");
        }
    }

    if (j.contains("combos")) {
        if (!j.at("combos").is_array() || j.at("combos").empty())
            bad("\"combos\" must be a non-empty array of [lookback, horizon] pairs");
        cfg.combos.clear();
        for (const auto& item : j.at("combos")) {
            if (!item.is_array() || item.size() != 2 || !item.at(0).is_number_integer() ||
                !item.at(1).is_number_integer())
                bad("\"combos\" entries must be [lookback, horizon] integer pairs");
            pool::WindowCombo c{item.at(0).get<int>(), item.at(1).get<int>()};
            if (c.m < 1) bad("combo lookback must be >= 1");
            if (c.n < 1 || c.n > 7) bad("combo horizon must be in [1, 7]");
            cfg.combos.push_back(c);
        }
    }

    if (j.contains("hidden")) {
        if (!j.at("hidden").is_array() || j.at("hidden").empty())
            bad("\"hidden\" must be a non-empty array of layer sizes");
        cfg.hidden.clear();
        for (const auto& item : j.at("hidden")) {
            if (!item.is_number_integer() || item.get<std::int64_t>() < 1)
                bad("\"hidden\" entries must be positive integers");
            cfg.hidden.push_back(item.get<Eigen::Index>());
        }
    }

    cfg.epochs = get_int(j, "epochs", cfg.epochs);
    if (cfg.epochs < 1) bad("\"epochs\" must be >= 1");
    cfg.learning_rate = get_double(j, "learning_rate", cfg.learning_rate);
    if (!(cfg.learning_rate > 0)) bad("\"learning_rate\" must be > 0");
    cfg.batch_size = get_int(j, "batch_size", cfg.batch_size);
    if (cfg.batch_size < 1) bad("\"batch_size\" must be >= 1");
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer())
            bad("\"seed\" must be a non-negative integer");
        const auto s = j.at("seed").get<std::int64_t>();
        if (s < 0) bad("\"seed\" must be a non-negative integer");
        cfg.seed = static_cast<std::uint64_t>(s);
    }
    if (j.contains("ensemble_mode")) {
        const std::string mode = require_string(j, "ensemble_mode");
        if (mode == "all")
            cfg.ensemble_mode = pool::EnsembleMode::All;
        else if (mode == "per-source-best")
            cfg.ensemble_mode = pool::EnsembleMode::PerSourceBest;
        else
            bad("\"ensemble_mode\" must be \"all\" or \"per-source-best\"");
    }
    cfg.jobs = static_cast<int>(get_int(j, "jobs", cfg.jobs));
    if (cfg.jobs < 1) bad("\"jobs\" must be >= 1");
    return cfg;
}

data::ScenarioSpec load_scenario_spec(const std::string& path) {
    const json j = load_json(path);
    reject_unknown_keys(j,
                        {"topics", "days", "drivers", "noise_sigma", "base_rate", "ar_mean",
                         "ar_phi", "ar_sigma", "seed", "platform", "epoch"},
                        path);

    data::ScenarioSpec spec;
    spec.topics = get_int(j, "topics", spec.topics);
    spec.days = get_int(j, "days", spec.days);
    spec.noise_sigma = get_double(j, "noise_sigma", spec.noise_sigma);
    spec.base_rate = get_double(j, "base_rate", spec.base_rate);
    spec.ar_mean = get_double(j, "ar_mean", spec.ar_mean);
    spec.ar_phi = get_double(j, "ar_phi", spec.ar_phi);
    spec.ar_sigma = get_double(j, "ar_sigma", spec.ar_sigma);
    if (j.contains("seed")) spec.seed = static_cast<std::uint64_t>(get_int(j, "seed", 0));
    if (j.contains("platform")) spec.platform = require_string(j, "platform");
    if (j.contains("epoch")) spec.epoch = require_string(j, "epoch");

    if (j.contains("drivers")) {
        if (!j.at("drivers").is_array()) bad("\"drivers\" must be an array");
        for (const auto& item : j.at("drivers")) {
            if (!item.is_object()) bad("\"drivers\" entries must be objects");
            reject_unknown_keys(item, {"topic", "group", "lag", "gain"}, "drivers");
            data::DriverSpec drv;
            drv.group = data::group_from_string(require_string(item, "group"));
            drv.lag = get_int(item, "lag", drv.lag);
            drv.gain = get_double(item, "gain", drv.gain);
            const std::int64_t topic = get_int(item, "topic", -1);
            if (topic < 0) bad("driver entries need a non-negative \"topic\" index");
            if (!spec.drivers.emplace(topic, drv).second)
                bad("duplicate driver for topic " + std::to_string(topic));
        }
    }
    return spec;
}

}  // namespace tap::cli
