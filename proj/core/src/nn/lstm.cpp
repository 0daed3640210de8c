#include "tap/nn/lstm.hpp"

namespace tap::nn {

ModelParams ModelParams::zeros(Eigen::Index hidden, Eigen::Index input, Eigen::Index horizon) {
    ModelParams p;
    p.lstm.wi = Eigen::MatrixXd::Zero(hidden, input);
    p.lstm.wf = p.lstm.wi;
    p.lstm.wo = p.lstm.wi;
    p.lstm.wg = p.lstm.wi;
    p.lstm.ui = Eigen::MatrixXd::Zero(hidden, hidden);
    p.lstm.uf = p.lstm.ui;
    p.lstm.uo = p.lstm.ui;
    p.lstm.ug = p.lstm.ui;
    p.lstm.bi = Eigen::VectorXd::Zero(hidden);
    p.lstm.bf = p.lstm.bi;
    p.lstm.bo = p.lstm.bi;
    p.lstm.bg = p.lstm.bi;
    p.head.w = Eigen::MatrixXd::Zero(horizon, hidden);
    p.head.b = Eigen::VectorXd::Zero(horizon);
    return p;
}

Eigen::Index ModelParams::parameter_count() const {
    Eigen::Index n = 0;
    for_each([&](const auto& a) { n += a.size(); });
    return n;
}

Eigen::VectorXd ModelParams::flatten() const {
    Eigen::VectorXd flat(parameter_count());
    Eigen::Index at = 0;
    for_each([&](const auto& a) {
        flat.segment(at, a.size()) = Eigen::Map<const Eigen::VectorXd>(a.data(), a.size());
        at += a.size();
    });
    return flat;
}

void ModelParams::unflatten(const Eigen::VectorXd& flat) {
    Eigen::Index at = 0;
    for_each([&](auto& a) {
        Eigen::Map<Eigen::VectorXd>(a.data(), a.size()) = flat.segment(at, a.size());
        at += a.size();
    });
}

void ModelParams::set_zero() {
    for_each([](auto& a) { a.setZero(); });
}

bool ModelParams::all_finite() const {
    bool ok = true;
    for_each([&](const auto& a) { ok = ok && a.allFinite(); });
    return ok;
}

namespace {

inline Eigen::ArrayXd sigmoid(const Eigen::ArrayXd& z) {
    return 1.0 / (1.0 + (-z).exp());
}

}  // namespace

Eigen::VectorXd forward(const ModelParams& p, const Eigen::MatrixXd& seq, ForwardCache& cache) {
    const Eigen::Index m = seq.rows();
    const Eigen::Index hidden = p.hidden();
    if (m < 1) throw std::invalid_argument("forward: need at least one timestep");
    if (seq.cols() != p.input()) {
        throw std::invalid_argument("forward: sequence has " + std::to_string(seq.cols()) +
                                    " features, model expects " + std::to_string(p.input()));
    }

    cache.x = seq;
    cache.gi.resize(m, hidden);
    cache.gf.resize(m, hidden);
    cache.go.resize(m, hidden);
    cache.gg.resize(m, hidden);
    cache.c.resize(m, hidden);
    cache.h.resize(m, hidden);
    cache.tc.resize(m, hidden);

    Eigen::VectorXd hprev = Eigen::VectorXd::Zero(hidden);
    Eigen::VectorXd cprev = Eigen::VectorXd::Zero(hidden);
    Eigen::VectorXd xt(p.input()), a(hidden), it(hidden), ft(hidden), ot(hidden), gt(hidden),
        ct(hidden);

    for (Eigen::Index t = 0; t < m; ++t) {
        xt = seq.row(t);

        a.noalias() = p.lstm.wi * xt;
        a.noalias() += p.lstm.ui * hprev;
        it = sigmoid((a + p.lstm.bi).array());

        a.noalias() = p.lstm.wf * xt;
        a.noalias() += p.lstm.uf * hprev;
        ft = sigmoid((a + p.lstm.bf).array());

        a.noalias() = p.lstm.wo * xt;
        a.noalias() += p.lstm.uo * hprev;
        ot = sigmoid((a + p.lstm.bo).array());

        a.noalias() = p.lstm.wg * xt;
        a.noalias() += p.lstm.ug * hprev;
        gt = (a + p.lstm.bg).array().tanh();

        ct = ft.cwiseProduct(cprev) + it.cwiseProduct(gt);
        const Eigen::VectorXd tc = ct.array().tanh().matrix();

        cache.gi.row(t) = it;
        cache.gf.row(t) = ft;
        cache.go.row(t) = ot;
        cache.gg.row(t) = gt;
        cache.c.row(t) = ct;
        cache.tc.row(t) = tc;

        hprev = ot.cwiseProduct(tc);
        cache.h.row(t) = hprev;
        cprev = ct;
    }

    Eigen::VectorXd pred = p.head.w * hprev + p.head.b;
    if (!pred.allFinite()) throw DivergenceError("non-finite network output");
    return pred;
}

double mae_loss(const Eigen::VectorXd& pred, const Eigen::VectorXd& target) {
    if (pred.size() != target.size()) {
        throw std::invalid_argument("mae_loss: length mismatch (" + std::to_string(pred.size()) +
                                    " vs " + std::to_string(target.size()) + ")");
    }
    return (pred - target).cwiseAbs().mean();
}

Eigen::VectorXd mae_grad(const Eigen::VectorXd& pred, const Eigen::VectorXd& target) {
    if (pred.size() != target.size()) throw std::invalid_argument("mae_grad: length mismatch");
    const double inv_n = 1.0 / static_cast<double>(pred.size());
    Eigen::VectorXd g(pred.size());
    for (Eigen::Index k = 0; k < pred.size(); ++k) {
        const double d = pred[k] - target[k];
        g[k] = d > 0.0 ? inv_n : (d < 0.0 ? -inv_n : 0.0);
    }
    return g;
}

ModelParams backward(const ModelParams& p, const ForwardCache& cache,
                     const Eigen::VectorXd& dpred) {
    const Eigen::Index m = cache.x.rows();
    ModelParams g = ModelParams::zeros(p.hidden(), p.input(), p.horizon());

    const Eigen::VectorXd h_last = cache.h.row(m - 1);
    g.head.w.noalias() = dpred * h_last.transpose();
    g.head.b = dpred;

    Eigen::VectorXd dh = p.head.w.transpose() * dpred;
    Eigen::VectorXd dc = Eigen::VectorXd::Zero(p.hidden());

    for (Eigen::Index t = m - 1; t >= 0; --t) {
        const Eigen::ArrayXd it = cache.gi.row(t).transpose().array();
        const Eigen::ArrayXd ft = cache.gf.row(t).transpose().array();
        const Eigen::ArrayXd ot = cache.go.row(t).transpose().array();
        const Eigen::ArrayXd gt = cache.gg.row(t).transpose().array();
        const Eigen::ArrayXd tc = cache.tc.row(t).transpose().array();
        const Eigen::VectorXd xt = cache.x.row(t);
        const Eigen::VectorXd hprev =
            t > 0 ? Eigen::VectorXd(cache.h.row(t - 1)) : Eigen::VectorXd::Zero(p.hidden());
        const Eigen::ArrayXd cprev =
            t > 0 ? Eigen::ArrayXd(cache.c.row(t - 1).transpose().array())
                  : Eigen::ArrayXd::Zero(p.hidden());

        const Eigen::ArrayXd dha = dh.array();
        const Eigen::ArrayXd do_ = dha * tc;
        dc.array() += dha * ot * (1.0 - tc.square());

        const Eigen::ArrayXd dca = dc.array();
        const Eigen::ArrayXd di = dca * gt;
        const Eigen::ArrayXd dg = dca * it;
        const Eigen::ArrayXd df = dca * cprev;

        const Eigen::VectorXd dai = (di * it * (1.0 - it)).matrix();
        const Eigen::VectorXd daf = (df * ft * (1.0 - ft)).matrix();
        const Eigen::VectorXd dao = (do_ * ot * (1.0 - ot)).matrix();
        const Eigen::VectorXd dag = (dg * (1.0 - gt.square())).matrix();

        g.lstm.wi.noalias() += dai * xt.transpose();
        g.lstm.wf.noalias() += daf * xt.transpose();
        g.lstm.wo.noalias() += dao * xt.transpose();
        g.lstm.wg.noalias() += dag * xt.transpose();
        g.lstm.ui.noalias() += dai * hprev.transpose();
        g.lstm.uf.noalias() += daf * hprev.transpose();
        g.lstm.uo.noalias() += dao * hprev.transpose();
        g.lstm.ug.noalias() += dag * hprev.transpose();
        g.lstm.bi += dai;
        g.lstm.bf += daf;
        g.lstm.bo += dao;
        g.lstm.bg += dag;

        dh.noalias() = p.lstm.ui.transpose() * dai;
        dh.noalias() += p.lstm.uf.transpose() * daf;
        dh.noalias() += p.lstm.uo.transpose() * dao;
        dh.noalias() += p.lstm.ug.transpose() * dag;
        dc.array() = dca * ft;
    }
    return g;
}

}  // namespace tap::nn
