#include "tap/window.hpp"

#include <stdexcept>

namespace tap {

std::vector<WindowSample> window_samples(const Eigen::MatrixXd& features,
                                         const std::vector<double>& targets,
                                         const std::string& topic, DayIndex start, int lookback,
                                         int horizon, int stride) {
    if (lookback < 1 || horizon < 1 || stride < 1) {
        throw std::invalid_argument("window_samples: lookback, horizon and stride must be >= 1");
    }
    const auto days = static_cast<std::int64_t>(targets.size());
    if (features.rows() != days) {
        throw std::invalid_argument("window_samples: feature rows != target length");
    }
    const std::int64_t need = lookback + horizon;
    if (days < need) {
        throw std::invalid_argument("insufficient history for topic '" + topic + "': have " +
                                    std::to_string(days) + " days, need at least " +
                                    std::to_string(need));
    }

    std::vector<WindowSample> out;
    out.reserve(static_cast<std::size_t>((days - need) / stride + 1));
    for (std::int64_t i = 0; i + need <= days; i += stride) {
        WindowSample s;
        s.inputs = features.middleRows(i, lookback);
        s.target.resize(horizon);
        for (int j = 0; j < horizon; ++j) {
            s.target[j] = targets[static_cast<std::size_t>(i + lookback + j)];
        }
        s.topic = topic;
        s.end = start + (i + lookback - 1);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace tap
