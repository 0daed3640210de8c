#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "tap/pool/train_pool.hpp"

using namespace tap;
using namespace tap::pool;
using data::Dataset;
using data::SourceGroup;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("tap_pool_" + std::to_string(std::rand()) + std::to_string(std::rand()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string str() const { return path.string(); }
};

// Full catalog coverage, values varied enough for min-max fitting.
Dataset make_dataset(int days = 80) {
    Dataset ds(Calendar{"2020-01-01"});
    ds.range = {DayIndex{0}, DayIndex{days - 1}};
    ds.platform = "twitter";
    ds.topics = {"alpha", "beta"};
    ds.enabled_groups.assign(data::kAllGroups.begin(), data::kAllGroups.end());

    int idx = 0;
    auto add = [&](const SeriesKey& key) {
        DailySeries s;
        s.key = key;
        s.start = ds.range.first;
        s.values.resize(static_cast<std::size_t>(days));
        for (int d = 0; d < days; ++d) {
            s.values[static_cast<std::size_t>(d)] = 10.0 + idx + 5.0 * ((d * (idx + 3)) % 7);
        }
        ds.series.emplace(key, std::move(s));
        ++idx;
    };
    for (const data::CatalogEntry& e : data::feature_catalog()) {
        if (e.per_topic) {
            for (const std::string& t : ds.topics) add({e.source, e.feature, t});
        } else {
            add({e.source, e.feature, ""});
        }
    }
    return ds;
}

ModelSpec make_spec(SourceGroup g, WindowCombo combo, std::uint64_t seed = 1) {
    ModelSpec s;
    s.platform = "twitter";
    s.group = g;
    s.combo = combo;
    s.topic_count = 2;
    s.seed = seed;
    return s;
}

nn::TrainConfig fast_cfg() {
    nn::TrainConfig cfg;
    cfg.hidden_candidates = {3};
    cfg.epochs = 3;
    cfg.batch_size = 16;
    return cfg;
}

bool params_equal(const nn::ModelParams& a, const nn::ModelParams& b) {
    const Eigen::VectorXd fa = a.flatten();
    const Eigen::VectorXd fb = b.flatten();
    return fa.size() == fb.size() && (fa.array() == fb.array()).all();
}

}  // namespace

TEST_CASE("train_pool trains every spec and scales per topic") {
    const Dataset ds = make_dataset();
    const SplitSpec split = SplitSpec::make({DayIndex{0}, DayIndex{65}}, DayIndex{66}, 2);
    const std::vector<ModelSpec> specs = {make_spec(SourceGroup::Reddit, {7, 3}, 11),
                                          make_spec(SourceGroup::EndogenousOnly, {3, 1}, 12)};

    const PoolTrainResult pool = train_pool(specs, ds, split, fast_cfg());
    REQUIRE(pool.errors.empty());
    REQUIRE(pool.members.size() == 2);
    for (const TrainedMember& m : pool.members) {
        CHECK(m.net.hidden == 3);
        CHECK(m.net.val_rmse >= 0.0);
        CHECK(std::isfinite(m.net.val_rmse));
        CHECK(m.net.loss_history.size() == 3);
        REQUIRE(m.scaling.size() == 2);
        CHECK(m.scaling.contains("alpha"));
        CHECK(m.scaling.contains("beta"));
        CHECK(m.scaling.at("alpha").target_scale() > 0.0);
    }
    CHECK(pool.members[0].spec.name() == "reddit_m7_n3");
}

TEST_CASE("a failing spec is reported without aborting its siblings") {
    const Dataset ds = make_dataset();
    const SplitSpec split = SplitSpec::make({DayIndex{0}, DayIndex{65}}, DayIndex{66}, 2);
    const std::vector<ModelSpec> specs = {make_spec(SourceGroup::Reddit, {7, 3}, 11),
                                          make_spec(SourceGroup::Reddit, {500, 7}, 13)};

    const PoolTrainResult pool = train_pool(specs, ds, split, fast_cfg());
    REQUIRE(pool.members.size() == 1);
    CHECK(pool.members[0].spec.combo.m == 7);
    REQUIRE(pool.errors.size() == 1);
    CHECK(pool.errors[0].find("reddit_m500_n7") != std::string::npos);
    CHECK(pool.errors[0].find("insufficient history") != std::string::npos);
}

TEST_CASE("feature and target bounds come from training rows only") {
    Dataset ds = make_dataset();
    // Gap layout: train ends at 58, validation week [59, 65], test starts 66.
    const SplitSpec split = SplitSpec::make({DayIndex{0}, DayIndex{58}}, DayIndex{66}, 2);

    // Spikes after the training range must not move the fitted bounds.
    ds.series.at({"reddit", "posts", "alpha"}).values[60] = 9e6;
    ds.series.at(ds.target_key("alpha")).values[61] = 7e6;

    const std::vector<ModelSpec> specs = {make_spec(SourceGroup::Reddit, {7, 3}, 11)};
    const PoolTrainResult pool = train_pool(specs, ds, split, fast_cfg());
    REQUIRE(pool.errors.empty());
    REQUIRE(pool.members.size() == 1);

    const TopicScaling& s = pool.members[0].scaling.at("alpha");
    // layout columns: [target, reddit/posts, reddit/comments]
    REQUIRE(s.features.features() == 3);
    CHECK(s.features.maxs()[1] < 1e6);
    CHECK(s.target.maxs()[0] < 1e6);
    CHECK(s.target_scale() < 1e6);

    // Untouched sibling topic keeps ordinary bounds too.
    CHECK(pool.members[0].scaling.at("beta").features.maxs()[1] < 1e6);
}

TEST_CASE("split outside the dataset range is rejected") {
    const Dataset ds = make_dataset(40);
    const SplitSpec split = SplitSpec::make({DayIndex{0}, DayIndex{65}}, DayIndex{66}, 2);
    CHECK_THROWS_AS(train_pool({make_spec(SourceGroup::Reddit, {7, 3})}, ds, split, fast_cfg()),
                    std::invalid_argument);
}

TEST_CASE("save_pool / load_pool round-trips members bit-exactly") {
    const Dataset ds = make_dataset();
    const SplitSpec split = SplitSpec::make({DayIndex{0}, DayIndex{65}}, DayIndex{66}, 2);
    std::vector<ModelSpec> specs = {make_spec(SourceGroup::Reddit, {7, 3}, 11),
                                    make_spec(SourceGroup::Acled, {3, 1}, 12),
                                    make_spec(SourceGroup::Reddit, {500, 7}, 13)};

    PoolTrainResult pool = train_pool(specs, ds, split, fast_cfg());
    REQUIRE(pool.members.size() == 2);
    REQUIRE(pool.errors.size() == 1);
    pool.warnings.push_back("note");

    TempDir dir;
    save_pool(pool, dir.str());
    CHECK(std::filesystem::exists(dir.path / "pool.json"));
    CHECK(std::filesystem::exists(dir.path / "reddit_m7_n3.tapm"));

    const PoolTrainResult loaded = load_pool(dir.str());
    REQUIRE(loaded.members.size() == pool.members.size());
    CHECK(loaded.errors == pool.errors);
    CHECK(loaded.warnings == pool.warnings);

    for (std::size_t i = 0; i < pool.members.size(); ++i) {
        const TrainedMember& a = pool.members[i];
        const TrainedMember& b = loaded.members[i];
        CHECK(a.spec.name() == b.spec.name());
        CHECK(a.spec.platform == b.spec.platform);
        CHECK(a.spec.seed == b.spec.seed);
        CHECK(a.spec.topic_count == b.spec.topic_count);
        CHECK(a.net.hidden == b.net.hidden);
        CHECK(a.net.val_rmse == b.net.val_rmse);  // bitwise
        CHECK(a.net.train_loss == b.net.train_loss);
        CHECK(params_equal(a.net.params, b.net.params));
        REQUIRE(a.scaling.size() == b.scaling.size());
        for (const auto& [topic, sa] : a.scaling) {
            const TopicScaling& sb = b.scaling.at(topic);
            CHECK(sa.features.mins() == sb.features.mins());
            CHECK(sa.features.maxs() == sb.features.maxs());
            CHECK(sa.target.mins() == sb.target.mins());
            CHECK(sa.target.maxs() == sb.target.maxs());
        }
    }
}

TEST_CASE("load_pool on a missing directory throws") {
    CHECK_THROWS_AS(load_pool("/nonexistent/tap_pool_dir"), std::runtime_error);
}
