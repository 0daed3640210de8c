#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tap/nn/adam.hpp"
#include "tap/nn/lstm.hpp"
#include "tap/rng.hpp"

namespace tap::nn {

struct TrainConfig {
    std::vector<Eigen::Index> hidden_candidates = {30, 10, 5};
    std::int64_t epochs = 200;
    Eigen::Index batch_size = 32;
    AdamConfig adam;  // lr 1e-3, standard betas
    std::uint64_t seed = 0;
};

struct Sample {
    Eigen::MatrixXd inputs;  // lookback x features, normalized
    Eigen::VectorXd target;  // horizon, normalized
    // Min-max denormalization is affine, so a prediction error of e in
    // normalized space is denorm_scale * e in counts. Carried per sample
    // because samples from different topics scale differently.
    double denorm_scale = 1.0;
};

struct TrainedNet {
    ModelParams params;
    Eigen::Index hidden = 0;
    double val_rmse = 0.0;    // denormalized, over validation samples
    double train_loss = 0.0;  // normalized MAE at the final epoch
    std::vector<double> loss_history;  // per-epoch mean MAE of the winning candidate
    std::vector<std::string> warnings;
};

// Uniform [-1/sqrt(H), 1/sqrt(H)] weights, zero biases except forget = 1.
ModelParams init_params(Eigen::Index hidden, Eigen::Index input, Eigen::Index horizon, Rng& rng);

// Denormalized RMSE of `params` over `samples` (pools all horizon steps).
double validation_rmse(const ModelParams& params, const std::vector<Sample>& samples);

// Trains one candidate per hidden size and keeps the one with the lowest
// denormalized validation RMSE. Candidates that diverge are dropped with a
// warning; if all diverge the function throws DivergenceError.
TrainedNet train(const std::vector<Sample>& train_set, const std::vector<Sample>& val_set,
                 const TrainConfig& cfg);

// Max relative error between analytic and central-difference gradients over
// every parameter, |a - n| / max(|a|, |n|, 1e-8).
double grad_check(const ModelParams& params, const Eigen::MatrixXd& seq,
                  const Eigen::VectorXd& target, double step = 1e-5);

}  // namespace tap::nn
