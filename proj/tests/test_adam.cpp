#include <doctest.h>

#include <cmath>

#include "tap/nn/adam.hpp"

using namespace tap;

namespace {

nn::ModelParams scalarish(double value) {
    nn::ModelParams p = nn::ModelParams::zeros(1, 1, 1);
    p.for_each([&](auto& a) { a.setConstant(value); });
    return p;
}

}  // namespace

TEST_CASE("zero gradient leaves parameters unchanged") {
    nn::ModelParams p = scalarish(0.7);
    const nn::ModelParams before = p;
    nn::ModelParams g = nn::ModelParams::zeros(1, 1, 1);
    nn::AdamState state = nn::AdamState::init(p);
    nn::adam_step(p, g, state, {});
    nn::ModelParams::zip2(p, before, [](auto& a, const auto& b) { CHECK(a == b); });
    CHECK(state.step == 1);
}

TEST_CASE("first step moves by about lr against the gradient sign") {
    // With bias correction, m_hat = g and v_hat = g^2, so the step is
    // lr * g / (|g| + eps) which is roughly lr * sign(g).
    nn::AdamConfig cfg;
    cfg.lr = 1e-3;
    for (double g0 : {0.37, -2.0, 1e-2}) {
        nn::ModelParams p = scalarish(1.0);
        nn::ModelParams g = scalarish(g0);
        nn::AdamState state = nn::AdamState::init(p);
        nn::adam_step(p, g, state, cfg);
        const double moved = p.head.b[0] - 1.0;
        CHECK(moved == doctest::Approx(-cfg.lr * (g0 > 0 ? 1.0 : -1.0)).epsilon(1e-4));
    }
}

TEST_CASE("two constant-gradient steps match the hand recursion") {
    // m and v follow m_t = (1-b1^t) g, v_t = (1-b2^t) g^2 for a constant
    // gradient; with bias correction both steps reduce to lr * g/(|g| + eps').
    const double g0 = 0.25;
    const nn::AdamConfig cfg;  // lr 1e-3, b1 0.9, b2 0.999, eps 1e-8

    double m = 0.0, v = 0.0, x = 2.0;
    for (int t = 1; t <= 2; ++t) {
        m = cfg.beta1 * m + (1 - cfg.beta1) * g0;
        v = cfg.beta2 * v + (1 - cfg.beta2) * g0 * g0;
        const double mh = m / (1 - std::pow(cfg.beta1, t));
        const double vh = v / (1 - std::pow(cfg.beta2, t));
        x -= cfg.lr * mh / (std::sqrt(vh) + cfg.eps);
    }

    nn::ModelParams p = scalarish(2.0);
    nn::ModelParams g = scalarish(g0);
    nn::AdamState state = nn::AdamState::init(p);
    nn::adam_step(p, g, state, cfg);
    nn::adam_step(p, g, state, cfg);

    CHECK(state.step == 2);
    p.for_each([&](const auto& a) { CHECK(std::abs(a(0, 0) - x) < 1e-12); });
}

TEST_CASE("moments decay toward zero once gradients stop") {
    nn::ModelParams p = scalarish(1.0);
    nn::ModelParams g = scalarish(1.0);
    nn::AdamState state = nn::AdamState::init(p);
    nn::adam_step(p, g, state, {});

    nn::ModelParams zero = nn::ModelParams::zeros(1, 1, 1);
    const double m_after_one = state.m.head.b[0];
    nn::adam_step(p, zero, state, {});
    CHECK(state.m.head.b[0] == doctest::Approx(0.9 * m_after_one));
}
