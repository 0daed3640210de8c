#pragma once

#include "tap/nn/lstm.hpp"

namespace tap::nn {

// Adam with the standard bias correction (Kingma & Ba). Moments mirror the
// parameter layout so no flattening happens on the hot path.
struct AdamConfig {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

struct AdamState {
    ModelParams m;  // first moment
    ModelParams v;  // second moment
    std::int64_t step = 0;

    static AdamState init(const ModelParams& like);
};

// One update in place: params -= lr * mhat / (sqrt(vhat) + eps).
void adam_step(ModelParams& params, const ModelParams& grad, AdamState& state,
               const AdamConfig& cfg);

}  // namespace tap::nn
