// Single-layer LSTM with a linear head, forward pass and exact BPTT
// gradients. Everything is fp64; a model this size does not need fast paths
// and exact reproducibility matters more.
#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace tap::nn {

/// Raised when a forward pass produces a non-finite value; the trainer
/// catches it and reports the epoch/sample it happened on.
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Gate weights of one LSTM layer: input weights (H x F), recurrent weights
/// (H x H) and biases (H) for the input, forget, output and candidate gates.
struct LstmParams {
    Eigen::MatrixXd wi, wf, wo, wg;
    Eigen::MatrixXd ui, uf, uo, ug;
    Eigen::VectorXd bi, bf, bo, bg;

    Eigen::Index hidden() const { return wi.rows(); }
    Eigen::Index input() const { return wi.cols(); }
};

/// Fully connected head mapping the final hidden state to an n-step forecast.
struct DenseParams {
    Eigen::MatrixXd w;  // n x H
    Eigen::VectorXd b;  // n
};

/// Complete parameter set of one network.
struct ModelParams {
    LstmParams lstm;
    DenseParams head;

    static ModelParams zeros(Eigen::Index hidden, Eigen::Index input, Eigen::Index horizon);

    Eigen::Index hidden() const { return lstm.hidden(); }
    Eigen::Index input() const { return lstm.input(); }
    Eigen::Index horizon() const { return head.w.rows(); }

    template <typename Fn>
    void for_each(Fn&& fn) {
        fn(lstm.wi); fn(lstm.wf); fn(lstm.wo); fn(lstm.wg);
        fn(lstm.ui); fn(lstm.uf); fn(lstm.uo); fn(lstm.ug);
        fn(lstm.bi); fn(lstm.bf); fn(lstm.bo); fn(lstm.bg);
        fn(head.w); fn(head.b);
    }
    template <typename Fn>
    void for_each(Fn&& fn) const {
        fn(lstm.wi); fn(lstm.wf); fn(lstm.wo); fn(lstm.wg);
        fn(lstm.ui); fn(lstm.uf); fn(lstm.uo); fn(lstm.ug);
        fn(lstm.bi); fn(lstm.bf); fn(lstm.bo); fn(lstm.bg);
        fn(head.w); fn(head.b);
    }

    template <typename Fn>
    static void zip2(ModelParams& a, const ModelParams& b, Fn&& fn) {
        fn(a.lstm.wi, b.lstm.wi); fn(a.lstm.wf, b.lstm.wf);
        fn(a.lstm.wo, b.lstm.wo); fn(a.lstm.wg, b.lstm.wg);
        fn(a.lstm.ui, b.lstm.ui); fn(a.lstm.uf, b.lstm.uf);
        fn(a.lstm.uo, b.lstm.uo); fn(a.lstm.ug, b.lstm.ug);
        fn(a.lstm.bi, b.lstm.bi); fn(a.lstm.bf, b.lstm.bf);
        fn(a.lstm.bo, b.lstm.bo); fn(a.lstm.bg, b.lstm.bg);
        fn(a.head.w, b.head.w); fn(a.head.b, b.head.b);
    }

    /// Visits matching arrays of four same-shaped parameter sets in one fixed
    /// order (used by the optimizer).
    template <typename Fn>
    static void zip4(ModelParams& a, const ModelParams& b, ModelParams& c, ModelParams& d,
                     Fn&& fn) {
        fn(a.lstm.wi, b.lstm.wi, c.lstm.wi, d.lstm.wi);
        fn(a.lstm.wf, b.lstm.wf, c.lstm.wf, d.lstm.wf);
        fn(a.lstm.wo, b.lstm.wo, c.lstm.wo, d.lstm.wo);
        fn(a.lstm.wg, b.lstm.wg, c.lstm.wg, d.lstm.wg);
        fn(a.lstm.ui, b.lstm.ui, c.lstm.ui, d.lstm.ui);
        fn(a.lstm.uf, b.lstm.uf, c.lstm.uf, d.lstm.uf);
        fn(a.lstm.uo, b.lstm.uo, c.lstm.uo, d.lstm.uo);
        fn(a.lstm.ug, b.lstm.ug, c.lstm.ug, d.lstm.ug);
        fn(a.lstm.bi, b.lstm.bi, c.lstm.bi, d.lstm.bi);
        fn(a.lstm.bf, b.lstm.bf, c.lstm.bf, d.lstm.bf);
        fn(a.lstm.bo, b.lstm.bo, c.lstm.bo, d.lstm.bo);
        fn(a.lstm.bg, b.lstm.bg, c.lstm.bg, d.lstm.bg);
        fn(a.head.w, b.head.w, c.head.w, d.head.w);
        fn(a.head.b, b.head.b, c.head.b, d.head.b);
    }

    Eigen::Index parameter_count() const;
    Eigen::VectorXd flatten() const;
    void unflatten(const Eigen::VectorXd& flat);
    void set_zero();
    bool all_finite() const;
};

/// Per-timestep activations recorded by forward() for the backward pass.
/// Reusable across calls; resized on demand.
struct ForwardCache {
    Eigen::MatrixXd x;                  // m x F
    Eigen::MatrixXd gi, gf, go, gg;     // m x H, post-activation gates
    Eigen::MatrixXd c, h, tc;           // m x H cell, hidden, tanh(cell)
};

/// Runs the LSTM over `seq` (m timesteps x F features) with h0 = c0 = 0 and
/// applies the linear head to the final hidden state. The head has no output
/// activation; predictions live in normalized target space. Throws
/// DivergenceError if the output is non-finite.
Eigen::VectorXd forward(const ModelParams& params, const Eigen::MatrixXd& seq,
                        ForwardCache& cache);

/// Mean absolute error. Throws std::invalid_argument on length mismatch.
double mae_loss(const Eigen::VectorXd& pred, const Eigen::VectorXd& target);

/// d(mae)/d(pred): sign(pred - target) / n, with sign(0) = 0.
Eigen::VectorXd mae_grad(const Eigen::VectorXd& pred, const Eigen::VectorXd& target);

/// Exact gradients of the scalar loss w.r.t. every parameter, given the
/// cache of the matching forward() call and the loss gradient at the output.
ModelParams backward(const ModelParams& params, const ForwardCache& cache,
                     const Eigen::VectorXd& dpred);

}  // namespace tap::nn
