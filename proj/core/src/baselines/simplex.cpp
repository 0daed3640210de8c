#include "tap/baselines/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace tap::baselines {

SimplexResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                          const Eigen::VectorXd& x0, const SimplexOptions& opts) {
    const Eigen::Index n = x0.size();
    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

    std::vector<Eigen::VectorXd> verts(static_cast<std::size_t>(n) + 1, x0);
    std::vector<double> fv(static_cast<std::size_t>(n) + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double base = verts[static_cast<std::size_t>(i) + 1][i];
        verts[static_cast<std::size_t>(i) + 1][i] =
            base + (base != 0.0 ? opts.step * std::abs(base) : opts.step);
    }
    for (std::size_t i = 0; i < verts.size(); ++i) fv[i] = f(verts[i]);

    std::vector<std::size_t> idx(verts.size());
    SimplexResult res;
    for (res.iterations = 0; res.iterations < opts.max_iter; ++res.iterations) {
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        const std::size_t lo = idx.front(), hi = idx.back(), second_hi = idx[idx.size() - 2];

        if (std::isfinite(fv[lo]) && std::abs(fv[hi] - fv[lo]) <= opts.f_tol) {
            res.converged = true;
            break;
        }

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (std::size_t i : idx) {
            if (i != hi) centroid += verts[i];
        }
        centroid /= static_cast<double>(n);

        const Eigen::VectorXd reflected = centroid + alpha * (centroid - verts[hi]);
        const double fr = f(reflected);
        if (fr < fv[lo]) {
            const Eigen::VectorXd expanded = centroid + gamma * (reflected - centroid);
            const double fe = f(expanded);
            if (fe < fr) {
                verts[hi] = expanded;
                fv[hi] = fe;
            } else {
                verts[hi] = reflected;
                fv[hi] = fr;
            }
            continue;
        }
        if (fr < fv[second_hi]) {
            verts[hi] = reflected;
            fv[hi] = fr;
            continue;
        }
        const Eigen::VectorXd contracted = centroid + rho * (verts[hi] - centroid);
        const double fc = f(contracted);
        if (fc < fv[hi]) {
            verts[hi] = contracted;
            fv[hi] = fc;
            continue;
        }
        for (std::size_t i : idx) {
            if (i == lo) continue;
            verts[i] = verts[lo] + sigma * (verts[i] - verts[lo]);
            fv[i] = f(verts[i]);
        }
    }

    const std::size_t best = static_cast<std::size_t>(
        std::min_element(fv.begin(), fv.end()) - fv.begin());
    res.x = verts[best];
    res.fx = fv[best];
    return res;
}

}  // namespace tap::baselines
