#include "tap/nn/train.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tap::nn {

ModelParams init_params(Eigen::Index hidden, Eigen::Index input, Eigen::Index horizon, Rng& rng) {
    ModelParams p = ModelParams::zeros(hidden, input, horizon);
    const double bound = 1.0 / std::sqrt(static_cast<double>(hidden));
    const auto fill = [&](Eigen::MatrixXd& w) {
        for (Eigen::Index j = 0; j < w.cols(); ++j)
            for (Eigen::Index i = 0; i < w.rows(); ++i) w(i, j) = rng.uniform(-bound, bound);
    };
    fill(p.lstm.wi);
    fill(p.lstm.wf);
    fill(p.lstm.wo);
    fill(p.lstm.wg);
    fill(p.lstm.ui);
    fill(p.lstm.uf);
    fill(p.lstm.uo);
    fill(p.lstm.ug);
    fill(p.head.w);
    p.lstm.bf.setOnes();
    return p;
}

double validation_rmse(const ModelParams& params, const std::vector<Sample>& samples) {
    double se = 0.0;
    std::int64_t n = 0;
    ForwardCache cache;
    for (const Sample& s : samples) {
        const Eigen::VectorXd pred = forward(params, s.inputs, cache);
        se += (s.denorm_scale * (pred - s.target)).squaredNorm();
        n += s.target.size();
    }
    if (n == 0) return 0.0;
    return std::sqrt(se / static_cast<double>(n));
}

namespace {

struct CandidateResult {
    TrainedNet net;
    bool diverged = false;
    std::string note;
};

CandidateResult train_candidate(const std::vector<Sample>& train_set,
                                const std::vector<Sample>& val_set, Eigen::Index hidden,
                                const TrainConfig& cfg) {
    CandidateResult out;
    const Eigen::Index input = train_set.front().inputs.cols();
    const Eigen::Index horizon = train_set.front().target.size();

    Rng rng(derive_seed(cfg.seed, {static_cast<std::uint64_t>(hidden)}));
    ModelParams params = init_params(hidden, input, horizon, rng);
    AdamState adam = AdamState::init(params);
    ModelParams grad_sum = ModelParams::zeros(hidden, input, horizon);
    ForwardCache cache;

    std::vector<std::size_t> order(train_set.size());
    std::iota(order.begin(), order.end(), std::size_t{0});

    const Eigen::Index batch = std::max<Eigen::Index>(1, cfg.batch_size);
    const double sample_count = static_cast<double>(std::max<std::size_t>(1, train_set.size()));
    double epoch_loss = 0.0;
    out.net.loss_history.reserve(static_cast<std::size_t>(cfg.epochs));

    try {
        for (std::int64_t epoch = 0; epoch < cfg.epochs; ++epoch) {
            rng.shuffle(order);
            epoch_loss = 0.0;
            std::size_t at = 0;
            while (at < order.size()) {
                const std::size_t take =
                    std::min<std::size_t>(static_cast<std::size_t>(batch), order.size() - at);
                grad_sum.set_zero();
                for (std::size_t k = 0; k < take; ++k) {
                    const Sample& s = train_set[order[at + k]];
                    const Eigen::VectorXd pred = forward(params, s.inputs, cache);
                    epoch_loss += mae_loss(pred, s.target);
                    const ModelParams g = backward(params, cache, mae_grad(pred, s.target));
                    ModelParams::zip2(grad_sum, g,
                                      [](auto& acc, const auto& gi) { acc.array() += gi.array(); });
                }
                const double scale = 1.0 / static_cast<double>(take);
                grad_sum.for_each([&](auto& a) { a.array() *= scale; });
                adam_step(params, grad_sum, adam, cfg.adam);
                if (!params.all_finite()) throw DivergenceError("non-finite parameters");
                at += take;
            }
            out.net.loss_history.push_back(epoch_loss / sample_count);
        }
        out.net.val_rmse = validation_rmse(params, val_set);
        if (!std::isfinite(out.net.val_rmse)) throw DivergenceError("non-finite validation score");
    } catch (const DivergenceError& e) {
        out.diverged = true;
        out.note = "hidden=" + std::to_string(hidden) + " diverged: " + e.what();
        return out;
    }

    out.net.params = std::move(params);
    out.net.hidden = hidden;
    out.net.train_loss = epoch_loss / sample_count;
    return out;
}

}  // namespace

TrainedNet train(const std::vector<Sample>& train_set, const std::vector<Sample>& val_set,
                 const TrainConfig& cfg) {
    if (train_set.empty()) throw std::invalid_argument("train: empty training set");
    if (cfg.hidden_candidates.empty()) throw std::invalid_argument("train: no hidden candidates");

    std::vector<std::string> warnings;
    std::optional<TrainedNet> best;
    for (const Eigen::Index hidden : cfg.hidden_candidates) {
        CandidateResult cand = train_candidate(train_set, val_set, hidden, cfg);
        if (cand.diverged) {
            warnings.push_back(cand.note);
            continue;
        }
        if (!best || cand.net.val_rmse < best->val_rmse) best = std::move(cand.net);
    }
    if (!best) throw DivergenceError("all hidden-size candidates diverged");
    best->warnings = std::move(warnings);
    return *best;
}

double grad_check(const ModelParams& params, const Eigen::MatrixXd& seq,
                  const Eigen::VectorXd& target_in, double step) {
    ForwardCache cache;
    const Eigen::VectorXd pred = forward(params, seq, cache);

    // MAE has a kink where a residual crosses zero; a central difference
    // straddling it measures the secant instead of the one-sided slope the
    // backward pass reports. Push such targets off the kink by more than the
    // probe can move the prediction, so the loss is smooth where we sample it.
    Eigen::VectorXd target = target_in;
    for (Eigen::Index i = 0; i < target.size(); ++i) {
        if (std::abs(pred[i] - target[i]) < 1e-3) target[i] = pred[i] - 1e-2;
    }

    const Eigen::VectorXd analytic = backward(params, cache, mae_grad(pred, target)).flatten();

    ModelParams probe = params;
    Eigen::VectorXd flat = params.flatten();
    double worst = 0.0;
    for (Eigen::Index i = 0; i < flat.size(); ++i) {
        const double keep = flat[i];
        flat[i] = keep + step;
        probe.unflatten(flat);
        const double up = mae_loss(forward(probe, seq, cache), target);
        flat[i] = keep - step;
        probe.unflatten(flat);
        const double down = mae_loss(forward(probe, seq, cache), target);
        flat[i] = keep;
        const double numeric = (up - down) / (2.0 * step);
        const double denom = std::max({std::abs(analytic[i]), std::abs(numeric), 1e-8});
        worst = std::max(worst, std::abs(analytic[i] - numeric) / denom);
    }
    probe.unflatten(flat);
    return worst;
}

}  // namespace tap::nn
