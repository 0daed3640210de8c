#include "tap/nn/model_io.hpp"

#include <fstream>
#include <stdexcept>

#include "tap/binio.hpp"

namespace tap::nn {

namespace {
constexpr std::uint32_t kNetMagic = 0x5441504eu;  // "TAPN"
constexpr std::uint32_t kNetVersion = 1;
}  // namespace

void write_params(std::ostream& out, const ModelParams& params) {
    binio::write_i64(out, params.hidden());
    binio::write_i64(out, params.input());
    binio::write_i64(out, params.horizon());
    params.for_each([&](const auto& a) {
        binio::write_vec(out, std::vector<double>(a.data(), a.data() + a.size()));
    });
}

ModelParams read_params(std::istream& in) {
    const Eigen::Index hidden = binio::read_i64(in);
    const Eigen::Index input = binio::read_i64(in);
    const Eigen::Index horizon = binio::read_i64(in);
    if (hidden <= 0 || input <= 0 || horizon <= 0) {
        throw std::runtime_error("model file has non-positive dimensions");
    }
    ModelParams p = ModelParams::zeros(hidden, input, horizon);
    p.for_each([&](auto& a) {
        const std::vector<double> v = binio::read_vec(in);
        if (static_cast<Eigen::Index>(v.size()) != a.size()) {
            throw std::runtime_error("model file array size mismatch");
        }
        std::copy(v.begin(), v.end(), a.data());
    });
    return p;
}

void save_net(const std::string& path, const TrainedNet& net) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    binio::write_u32(out, kNetMagic);
    binio::write_u32(out, kNetVersion);
    binio::write_i64(out, net.hidden);
    binio::write_f64(out, net.val_rmse);
    binio::write_f64(out, net.train_loss);
    write_params(out, net.params);
    if (!out) throw std::runtime_error("write failed: " + path);
}

TrainedNet load_net(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    if (binio::read_u32(in) != kNetMagic) throw std::runtime_error("not a net file: " + path);
    if (binio::read_u32(in) != kNetVersion) throw std::runtime_error("unsupported net version: " + path);
    TrainedNet net;
    net.hidden = binio::read_i64(in);
    net.val_rmse = binio::read_f64(in);
    net.train_loss = binio::read_f64(in);
    net.params = read_params(in);
    return net;
}

}  // namespace tap::nn
