#include "tap/pool/train_pool.hpp"

#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "tap/binio.hpp"
#include "tap/nn/model_io.hpp"
#include "tap/parallel.hpp"
#include "tap/window.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace tap::pool {

namespace {

struct SpecOutcome {
    std::optional<TrainedMember> member;
    std::string error;
    std::vector<std::string> warnings;
};

SpecOutcome train_one(const ModelSpec& spec, const data::Dataset& ds, const SplitSpec& split,
                      const nn::TrainConfig& cfg) {
    SpecOutcome out;
    try {
        TrainedMember member;
        member.spec = spec;

        const DayRange span{split.train.first, split.test_start() - 1};
        const DayRange train_rows{split.train.first, split.train.last};
        const DayRange val_week = split.validation_week(0);

        std::vector<nn::Sample> train_set;
        std::vector<nn::Sample> val_set;

        for (const std::string& topic : ds.topics) {
            const FeatureLayout layout = make_layout(spec, ds, topic);
            Eigen::MatrixXd raw = feature_matrix(layout, ds, span);
            const Eigen::Index series = layout.series_count();

            TopicScaling scaling;
            scaling.features = Normalizer::fit(
                raw.block(0, 0, train_rows.length(), series));
            scaling.target =
                Normalizer::fit(raw.block(0, 0, train_rows.length(), 1));

            Eigen::MatrixXd rows = raw;
            rows.leftCols(series) = scaling.features.apply(raw.leftCols(series));

            std::vector<double> targets(static_cast<std::size_t>(rows.rows()));
            for (Eigen::Index r = 0; r < rows.rows(); ++r) targets[static_cast<std::size_t>(r)] = rows(r, 0);

            // Training windows: truncate so no target day passes the cut.
            const std::int64_t train_days = split.train_target_end() - span.first + 1;
            const std::vector<WindowSample> tw = window_samples(
                rows.topRows(train_days),
                std::vector<double>(targets.begin(), targets.begin() + train_days), topic,
                span.first, spec.combo.m, spec.combo.n);
            const double scale = scaling.target_scale();
            for (const WindowSample& w : tw) {
                train_set.push_back({w.inputs, w.target, scale});
            }

            // Validation windows: targets inside validation week 0.
            const std::vector<WindowSample> all =
                window_samples(rows, targets, topic, span.first, spec.combo.m, spec.combo.n);
            for (const WindowSample& w : all) {
                const DayIndex t_first = w.end + 1;
                const DayIndex t_last = w.end + spec.combo.n;
                if (val_week.contains(t_first) && val_week.contains(t_last)) {
                    val_set.push_back({w.inputs, w.target, scale});
                }
            }
            member.scaling.emplace(topic, std::move(scaling));
        }

        nn::TrainConfig spec_cfg = cfg;
        spec_cfg.seed = spec.seed;
        member.net = nn::train(train_set, val_set, spec_cfg);
        for (const std::string& w : member.net.warnings) {
            out.warnings.push_back(spec.name() + ": " + w);
        }
        out.member = std::move(member);
    } catch (const std::exception& e) {
        out.error = spec.name() + ": " + e.what();
    }
    return out;
}

}  // namespace

PoolTrainResult train_pool(const std::vector<ModelSpec>& specs, const data::Dataset& ds,
                           const SplitSpec& split, const nn::TrainConfig& cfg, int jobs) {
    split.validate();
    if (split.train.first < ds.range.first || split.test_end() > ds.range.last) {
        throw std::invalid_argument("split exceeds the dataset's day range");
    }

    std::vector<SpecOutcome> outcomes(specs.size());
    parallel_for(specs.size(), static_cast<unsigned>(std::max(1, jobs)),
                 [&](std::size_t i) { outcomes[i] = train_one(specs[i], ds, split, cfg); });

    PoolTrainResult result;
    for (SpecOutcome& o : outcomes) {
        if (o.member) {
            result.members.push_back(std::move(*o.member));
        } else {
            result.errors.push_back(o.error);
        }
        result.warnings.insert(result.warnings.end(), o.warnings.begin(), o.warnings.end());
    }
    return result;
}

namespace {

constexpr std::uint32_t kMemberMagic = 0x5441504du;  // "TAPM"
constexpr std::uint32_t kMemberVersion = 1;

void write_member(const std::string& path, const TrainedMember& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    binio::write_u32(out, kMemberMagic);
    binio::write_u32(out, kMemberVersion);
    binio::write_string(out, m.spec.platform);
    binio::write_string(out, data::to_string(m.spec.group));
    binio::write_i64(out, m.spec.combo.m);
    binio::write_i64(out, m.spec.combo.n);
    binio::write_i64(out, m.spec.topic_count);
    binio::write_u64(out, m.spec.seed);
    binio::write_i64(out, m.net.hidden);
    binio::write_f64(out, m.net.val_rmse);
    binio::write_f64(out, m.net.train_loss);
    nn::write_params(out, m.net.params);
    binio::write_u64(out, m.scaling.size());
    for (const auto& [topic, s] : m.scaling) {
        binio::write_string(out, topic);
        binio::write_vec(out, s.features.mins());
        binio::write_vec(out, s.features.maxs());
        binio::write_vec(out, s.target.mins());
        binio::write_vec(out, s.target.maxs());
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

TrainedMember read_member(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    if (binio::read_u32(in) != kMemberMagic) throw std::runtime_error("not a member file: " + path);
    if (binio::read_u32(in) != kMemberVersion) {
        throw std::runtime_error("unsupported member version: " + path);
    }
    TrainedMember m;
    m.spec.platform = binio::read_string(in);
    m.spec.group = data::group_from_string(binio::read_string(in));
    m.spec.combo.m = static_cast<int>(binio::read_i64(in));
    m.spec.combo.n = static_cast<int>(binio::read_i64(in));
    m.spec.topic_count = binio::read_i64(in);
    m.spec.seed = binio::read_u64(in);
    m.net.hidden = binio::read_i64(in);
    m.net.val_rmse = binio::read_f64(in);
    m.net.train_loss = binio::read_f64(in);
    m.net.params = nn::read_params(in);
    const std::uint64_t topics = binio::read_u64(in);
    for (std::uint64_t i = 0; i < topics; ++i) {
        const std::string topic = binio::read_string(in);
        TopicScaling s;
        std::vector<double> fmin = binio::read_vec(in);
        std::vector<double> fmax = binio::read_vec(in);
        s.features = Normalizer::from_bounds(std::move(fmin), std::move(fmax));
        std::vector<double> tmin = binio::read_vec(in);
        std::vector<double> tmax = binio::read_vec(in);
        s.target = Normalizer::from_bounds(std::move(tmin), std::move(tmax));
        m.scaling.emplace(topic, std::move(s));
    }
    return m;
}

}  // namespace

void save_pool(const PoolTrainResult& pool, const std::string& directory) {
    const fs::path dir(directory);
    fs::create_directories(dir);

    json manifest;
    manifest["members"] = json::array();
    for (const TrainedMember& m : pool.members) {
        const std::string file = m.spec.name() + ".tapm";
        write_member((dir / file).string(), m);
        json entry;
        entry["name"] = m.spec.name();
        entry["file"] = file;
        entry["platform"] = m.spec.platform;
        entry["group"] = data::to_string(m.spec.group);
        entry["m"] = m.spec.combo.m;
        entry["n"] = m.spec.combo.n;
        entry["seed"] = m.spec.seed;
        entry["hidden"] = m.net.hidden;
        entry["val_rmse"] = m.net.val_rmse;
        entry["final_train_mae"] = m.net.train_loss;
        manifest["members"].push_back(std::move(entry));
    }
    manifest["errors"] = pool.errors;
    manifest["warnings"] = pool.warnings;

    std::ofstream out(dir / "pool.json");
    out << manifest.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed: " + (dir / "pool.json").string());
}

PoolTrainResult load_pool(const std::string& directory) {
    const fs::path dir(directory);
    std::ifstream in(dir / "pool.json");
    if (!in) throw std::runtime_error("cannot open " + (dir / "pool.json").string());
    json manifest;
    try {
        in >> manifest;
    } catch (const json::exception& e) {
        throw std::runtime_error((dir / "pool.json").string() + ": " + e.what());
    }

    PoolTrainResult pool;
    for (const json& entry : manifest.at("members")) {
        pool.members.push_back(read_member((dir / entry.at("file").get<std::string>()).string()));
    }
    if (manifest.contains("errors")) {
        pool.errors = manifest.at("errors").get<std::vector<std::string>>();
    }
    if (manifest.contains("warnings")) {
        pool.warnings = manifest.at("warnings").get<std::vector<std::string>>();
    }
    return pool;
}

}  // namespace tap::pool
