#include "tap/baselines/arima.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "tap/baselines/simplex.hpp"
#include "tap/parallel.hpp"

namespace tap::baselines {

namespace {

std::vector<double> difference(std::vector<double> y, int d) {
    for (int k = 0; k < d; ++k) {
        for (std::size_t i = y.size(); i-- > 1;) y[i] -= y[i - 1];
        y.erase(y.begin());
    }
    return y;
}

// Conditional sum of squares: residuals start at t = p, earlier ones are 0.
double css(const std::vector<double>& w, double c, const Eigen::VectorXd& phi,
           const Eigen::VectorXd& theta, std::vector<double>& resid) {
    const std::size_t p = static_cast<std::size_t>(phi.size());
    const std::size_t q = static_cast<std::size_t>(theta.size());
    resid.assign(w.size(), 0.0);
    double ss = 0.0;
    for (std::size_t t = p; t < w.size(); ++t) {
        double e = w[t] - c;
        for (std::size_t i = 0; i < p; ++i) e -= phi[static_cast<Eigen::Index>(i)] * w[t - 1 - i];
        for (std::size_t j = 0; j < q; ++j) {
            if (t >= 1 + j) e -= theta[static_cast<Eigen::Index>(j)] * resid[t - 1 - j];
        }
        resid[t] = e;
        ss += e * e;
    }
    return ss;
}

double ar_spectral_radius(const Eigen::VectorXd& phi) {
    const Eigen::Index p = phi.size();
    if (p == 0) return 0.0;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(p, p);
    companion.row(0) = phi.transpose();
    for (Eigen::Index i = 1; i < p; ++i) companion(i, i - 1) = 1.0;
    return companion.eigenvalues().cwiseAbs().maxCoeff();
}

// Least-squares start for the AR part; MA part starts at zero.
void ols_init(const std::vector<double>& w, int p, bool with_intercept, double& c,
              Eigen::VectorXd& phi) {
    const Eigen::Index rows = static_cast<Eigen::Index>(w.size()) - p;
    const Eigen::Index cols = p + (with_intercept ? 1 : 0);
    c = 0.0;
    phi = Eigen::VectorXd::Zero(p);
    if (cols == 0) return;
    if (rows <= cols) {
        if (with_intercept) {
            double mean = 0.0;
            for (double v : w) mean += v;
            c = w.empty() ? 0.0 : mean / static_cast<double>(w.size());
        }
        return;
    }
    Eigen::MatrixXd x(rows, cols);
    Eigen::VectorXd b(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        Eigen::Index col = 0;
        if (with_intercept) x(r, col++) = 1.0;
        for (int i = 0; i < p; ++i) x(r, col++) = w[static_cast<std::size_t>(r + p - 1 - i)];
        b[r] = w[static_cast<std::size_t>(r + p)];
    }
    const Eigen::VectorXd sol = x.colPivHouseholderQr().solve(b);
    Eigen::Index col = 0;
    if (with_intercept) c = sol[col++];
    for (int i = 0; i < p; ++i) phi[i] = sol[col++];
}

struct ParamPack {
    bool with_intercept;
    int p, q;

    Eigen::Index size() const { return (with_intercept ? 1 : 0) + p + q; }

    void unpack(const Eigen::VectorXd& x, double& c, Eigen::VectorXd& phi,
                Eigen::VectorXd& theta) const {
        Eigen::Index at = 0;
        c = with_intercept ? x[at++] : 0.0;
        phi = x.segment(at, p);
        at += p;
        theta = x.segment(at, q);
    }
};

}  // namespace

std::optional<ArimaModel> arima_css_fit(const std::vector<double>& y, ArimaOrder order) {
    if (order.p < 0 || order.d < 0 || order.q < 0) {
        throw std::invalid_argument("arima orders must be non-negative");
    }
    if (static_cast<int>(y.size()) <= order.p + order.d + order.q) {
        throw std::invalid_argument("arima_css_fit: series shorter than p + d + q");
    }
    const std::vector<double> w = difference(y, order.d);
    const int effective = static_cast<int>(w.size()) - order.p;
    if (effective < 3) return std::nullopt;

    const ParamPack pack{order.d == 0, order.p, order.q};
    double c0;
    Eigen::VectorXd phi0;
    ols_init(w, order.p, pack.with_intercept, c0, phi0);

    ArimaModel model;
    model.order = order;

    if (pack.size() == 0) {
        std::vector<double> resid;
        model.phi = Eigen::VectorXd(0);
        model.theta = Eigen::VectorXd(0);
        model.sigma2 = css(w, 0.0, model.phi, model.theta, resid) / effective;
        return model;
    }

    Eigen::VectorXd x0(pack.size());
    {
        Eigen::Index at = 0;
        if (pack.with_intercept) x0[at++] = c0;
        x0.segment(at, order.p) = phi0;
        at += order.p;
        x0.segment(at, order.q).setZero();
    }

    std::vector<double> resid;
    double c;
    Eigen::VectorXd phi, theta;
    const auto objective = [&](const Eigen::VectorXd& x) {
        pack.unpack(x, c, phi, theta);
        const double ss = css(w, c, phi, theta, resid);
        return std::isfinite(ss) ? ss : std::numeric_limits<double>::infinity();
    };

    SimplexOptions opts;
    opts.max_iter = 400 * static_cast<int>(pack.size());
    const SimplexResult fit = nelder_mead(objective, x0, opts);

    if (!fit.x.allFinite() || !std::isfinite(fit.fx)) return std::nullopt;
    pack.unpack(fit.x, model.intercept, model.phi, model.theta);
    if (ar_spectral_radius(model.phi) >= 1.0) return std::nullopt;
    model.sigma2 = fit.fx / effective;
    return model;
}

Eigen::VectorXd arima_forecast(const ArimaModel& model, const std::vector<double>& history,
                               int horizon) {
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    if (model.fallback_persistent) {
        if (static_cast<int>(history.size()) < horizon) {
            throw std::invalid_argument("persistent fallback needs " + std::to_string(horizon) +
                                        " days of history");
        }
        Eigen::VectorXd out(horizon);
        for (int h = 0; h < horizon; ++h) {
            out[h] = history[history.size() - static_cast<std::size_t>(horizon) +
                             static_cast<std::size_t>(h)];
        }
        return out.cwiseMax(0.0);
    }

    const int p = model.order.p, d = model.order.d, q = model.order.q;
    if (static_cast<int>(history.size()) < p + d) {
        throw std::invalid_argument("arima_forecast: history shorter than p + d");
    }
    const std::vector<double> w = difference(history, d);

    std::vector<double> resid;
    css(w, model.intercept, model.phi, model.theta, resid);

    // Extend w with conditional means, future residuals zero.
    std::vector<double> wx = w;
    resid.resize(w.size() + static_cast<std::size_t>(horizon), 0.0);
    for (int h = 0; h < horizon; ++h) {
        const std::size_t t = w.size() + static_cast<std::size_t>(h);
        double v = model.intercept;
        for (int i = 0; i < p; ++i) v += model.phi[i] * wx[t - 1 - static_cast<std::size_t>(i)];
        for (int j = 0; j < q; ++j) {
            if (t >= 1 + static_cast<std::size_t>(j)) {
                v += model.theta[j] * resid[t - 1 - static_cast<std::size_t>(j)];
            }
        }
        wx.push_back(v);
    }

    // Invert the d difference levels from their last observed values.
    std::vector<double> lasts(static_cast<std::size_t>(d));
    {
        std::vector<double> level = history;
        for (int k = 0; k < d; ++k) {
            lasts[static_cast<std::size_t>(k)] = level.back();
            level = difference(std::move(level), 1);
        }
    }
    Eigen::VectorXd out(horizon);
    for (int h = 0; h < horizon; ++h) {
        double v = wx[w.size() + static_cast<std::size_t>(h)];
        for (int k = d; k-- > 0;) {
            v += lasts[static_cast<std::size_t>(k)];
            lasts[static_cast<std::size_t>(k)] = v;
        }
        out[h] = v;
    }
    return out.cwiseMax(0.0);
}

ArimaModel arima_fit(const std::vector<double>& train,
                     const std::vector<double>& validation_week, int jobs) {
    if (validation_week.size() != 7) {
        throw std::invalid_argument("arima_fit: validation week must have 7 days");
    }
    if (train.size() < 16) {
        throw std::invalid_argument("arima_fit: need at least 16 training days");
    }

    std::vector<ArimaOrder> grid;
    for (int p = 0; p <= 7; ++p)
        for (int d = 0; d <= 2; ++d)
            for (int q = 0; q <= 2; ++q) grid.push_back({p, d, q});

    std::vector<std::optional<ArimaModel>> fits(grid.size());
    std::vector<double> scores(grid.size(), std::numeric_limits<double>::infinity());
    parallel_for(grid.size(), static_cast<unsigned>(std::max(1, jobs)), [&](std::size_t i) {
        std::optional<ArimaModel> m = arima_css_fit(train, grid[i]);
        if (!m) return;
        const Eigen::VectorXd fc = arima_forecast(*m, train, 7);
        if (!fc.allFinite()) return;
        double se = 0.0;
        for (int h = 0; h < 7; ++h) {
            const double diff = fc[h] - validation_week[static_cast<std::size_t>(h)];
            se += diff * diff;
        }
        scores[i] = std::sqrt(se / 7.0);
        fits[i] = std::move(m);
    });

    std::size_t best = grid.size();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!fits[i]) continue;
        if (best == grid.size() || scores[i] < scores[best]) best = i;
    }
    if (best == grid.size()) {
        ArimaModel fallback;
        fallback.fallback_persistent = true;
        return fallback;
    }
    ArimaModel winner = std::move(*fits[best]);
    winner.val_rmse = scores[best];
    return winner;
}

}  // namespace tap::baselines
