#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tap/nn/model_io.hpp"
#include "tap/rng.hpp"

using namespace tap;
namespace fs = std::filesystem;

namespace {

nn::ModelParams random_params(Rng& rng) {
    nn::ModelParams p = nn::ModelParams::zeros(4, 3, 2);
    p.for_each([&](auto& a) {
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = rng.normal();
    });
    return p;
}

}  // namespace

TEST_CASE("stream round-trip is bit-exact") {
    Rng rng(17);
    const nn::ModelParams p = random_params(rng);

    std::stringstream ss(std::ios::in | std::ios::out | std::ios::binary);
    nn::write_params(ss, p);
    const nn::ModelParams q = nn::read_params(ss);

    CHECK(q.hidden() == 4);
    CHECK(q.input() == 3);
    CHECK(q.horizon() == 2);
    CHECK(q.flatten() == p.flatten());  // bitwise
}

TEST_CASE("file round-trip preserves the net") {
    Rng rng(18);
    nn::TrainedNet net;
    net.params = random_params(rng);
    net.hidden = 4;
    net.val_rmse = 1.25;
    net.train_loss = 0.03125;

    const fs::path path = fs::temp_directory_path() / "tap_model_io_test.tapn";
    nn::save_net(path.string(), net);
    const nn::TrainedNet back = nn::load_net(path.string());
    fs::remove(path);

    CHECK(back.hidden == 4);
    CHECK(back.val_rmse == 1.25);
    CHECK(back.train_loss == 0.03125);
    CHECK(back.params.flatten() == net.params.flatten());
}

TEST_CASE("corrupt magic is rejected") {
    std::stringstream ss(std::ios::in | std::ios::out | std::ios::binary);
    Rng rng(19);
    nn::write_params(ss, random_params(rng));
    std::string bytes = ss.str();
    bytes[0] ^= 0x5a;
    std::stringstream bad(bytes, std::ios::in | std::ios::binary);
    CHECK_THROWS(nn::read_params(bad));
}

TEST_CASE("missing file throws") {
    CHECK_THROWS(nn::load_net("/nonexistent/dir/model.tapn"));
}
