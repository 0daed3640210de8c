#include "tap/nn/adam.hpp"

#include <cmath>

namespace tap::nn {

AdamState AdamState::init(const ModelParams& like) {
    AdamState s;
    s.m = ModelParams::zeros(like.hidden(), like.input(), like.horizon());
    s.v = ModelParams::zeros(like.hidden(), like.input(), like.horizon());
    s.step = 0;
    return s;
}

void adam_step(ModelParams& params, const ModelParams& grad, AdamState& state,
               const AdamConfig& cfg) {
    state.step += 1;
    const double t = static_cast<double>(state.step);
    const double bc1 = 1.0 - std::pow(cfg.beta1, t);
    const double bc2 = 1.0 - std::pow(cfg.beta2, t);

    ModelParams::zip4(params, grad, state.m, state.v,
                      [&](auto& p, const auto& g, auto& m, auto& v) {
                          m.array() = cfg.beta1 * m.array() + (1.0 - cfg.beta1) * g.array();
                          v.array() =
                              cfg.beta2 * v.array() + (1.0 - cfg.beta2) * g.array().square();
                          p.array() -= cfg.lr * (m.array() / bc1) /
                                       ((v.array() / bc2).sqrt() + cfg.eps);
                      });
}

}  // namespace tap::nn
