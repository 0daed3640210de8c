#include <benchmark/benchmark.h>

#include "tap/baselines/arima.hpp"
#include "tap/baselines/hawkes.hpp"
#include "tap/eval/metrics.hpp"
#include "tap/nn/lstm.hpp"
#include "tap/nn/train.hpp"
#include "tap/rng.hpp"

using namespace tap;

namespace {

nn::ModelParams make_params(Eigen::Index hidden, Eigen::Index input, Eigen::Index horizon,
                            std::uint64_t seed) {
    Rng rng(seed);
    return nn::init_params(hidden, input, horizon, rng);
}

Eigen::MatrixXd make_seq(Eigen::Index steps, Eigen::Index input, std::uint64_t seed) {
    Rng rng(seed);
    Eigen::MatrixXd seq(steps, input);
    for (Eigen::Index r = 0; r < steps; ++r)
        for (Eigen::Index c = 0; c < input; ++c) seq(r, c) = rng.uniform01();
    return seq;
}

void bm_lstm_forward(benchmark::State& state) {
    const auto hidden = static_cast<Eigen::Index>(state.range(0));
    const nn::ModelParams params = make_params(hidden, 26, 7, 1);
    const Eigen::MatrixXd seq = make_seq(14, 26, 2);
    nn::ForwardCache cache;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nn::forward(params, seq, cache));
    }
}
BENCHMARK(bm_lstm_forward)->Arg(5)->Arg(10)->Arg(30);

void bm_lstm_backward(benchmark::State& state) {
    const auto hidden = static_cast<Eigen::Index>(state.range(0));
    const nn::ModelParams params = make_params(hidden, 26, 7, 1);
    const Eigen::MatrixXd seq = make_seq(14, 26, 2);
    nn::ForwardCache cache;
    const Eigen::VectorXd pred = nn::forward(params, seq, cache);
    const Eigen::VectorXd target = Eigen::VectorXd::Constant(7, 0.5);
    const Eigen::VectorXd dpred = nn::mae_grad(pred, target);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nn::backward(params, cache, dpred));
    }
}
BENCHMARK(bm_lstm_backward)->Arg(5)->Arg(10)->Arg(30);

void bm_metrics_week(benchmark::State& state) {
    Rng rng(3);
    Eigen::VectorXd pred(7), actual(7);
    for (int i = 0; i < 7; ++i) {
        pred[i] = rng.uniform(0, 100);
        actual[i] = rng.uniform(0, 100);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval::ape(pred, actual));
        benchmark::DoNotOptimize(eval::smape(pred, actual));
        benchmark::DoNotOptimize(eval::rmse(pred, actual));
    }
}
BENCHMARK(bm_metrics_week);

void bm_hawkes_fit(benchmark::State& state) {
    const baselines::HawkesModel truth{1.0, 0.6, 1.0, 0.0};
    Rng rng(4);
    const std::vector<double> counts =
        baselines::hawkes_simulate(truth, state.range(0), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(baselines::hawkes_fit(counts));
    }
}
BENCHMARK(bm_hawkes_fit)->Arg(120)->Arg(300);

void bm_arima_grid(benchmark::State& state) {
    Rng rng(5);
    std::vector<double> y(static_cast<std::size_t>(state.range(0)) + 7);
    double x = 30.0;
    for (double& v : y) {
        x = 30.0 + 0.7 * (x - 30.0) + rng.normal();
        v = x;
    }
    const std::vector<double> train(y.begin(), y.end() - 7);
    const std::vector<double> val(y.end() - 7, y.end());
    for (auto _ : state) {
        benchmark::DoNotOptimize(baselines::arima_fit(train, val));
    }
}
BENCHMARK(bm_arima_grid)->Arg(120)->Arg(285);

}  // namespace

BENCHMARK_MAIN();
