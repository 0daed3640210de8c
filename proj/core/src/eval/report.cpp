#include "tap/eval/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace tap::eval {

WeekScore score_week(const std::string& model, const std::string& topic, std::size_t week,
                     const Eigen::VectorXd& pred, const Eigen::VectorXd& actual) {
    return {model, topic, week,
            {ape(pred, actual), smape(pred, actual), rmse(pred, actual)}};
}

namespace {

template <typename T>
void push_unique(std::vector<T>& v, const T& x) {
    if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

}  // namespace

WeeklyReport weekly_report(const std::vector<WeekScore>& scores) {
    if (scores.empty()) throw std::invalid_argument("weekly_report: no scores");

    WeeklyReport rep;
    std::map<std::tuple<std::string, std::string, std::size_t>, MetricTriple> cells;
    for (const WeekScore& s : scores) {
        push_unique(rep.models, s.model);
        push_unique(rep.topics, s.topic);
        push_unique(rep.weeks, s.week);
        const auto key = std::make_tuple(s.model, s.topic, s.week);
        if (!cells.emplace(key, s.metrics).second) {
            throw std::invalid_argument("duplicate score cell (" + s.model + ", " + s.topic +
                                        ", week " + std::to_string(s.week) + ")");
        }
    }

    for (const std::string& model : rep.models) {
        MetricTriple model_sum;
        for (const std::string& topic : rep.topics) {
            MetricTriple sum;
            for (const std::size_t week : rep.weeks) {
                const auto it = cells.find(std::make_tuple(model, topic, week));
                if (it == cells.end()) {
                    throw std::invalid_argument("missing score cell (" + model + ", " + topic +
                                                ", week " + std::to_string(week) + ")");
                }
                sum.ape += it->second.ape;
                sum.smape += it->second.smape;
                sum.rmse += it->second.rmse;
            }
            const double w = static_cast<double>(rep.weeks.size());
            const MetricTriple mean{sum.ape / w, sum.smape / w, sum.rmse / w};
            rep.topic_mean.emplace(std::make_pair(model, topic), mean);
            model_sum.ape += mean.ape;
            model_sum.smape += mean.smape;
            model_sum.rmse += mean.rmse;
        }
        const double t = static_cast<double>(rep.topics.size());
        rep.model_mean.emplace(model,
                               MetricTriple{model_sum.ape / t, model_sum.smape / t,
                                            model_sum.rmse / t});
    }
    return rep;
}

std::vector<double> rank_with_ties(const std::vector<double>& scores) {
    const std::size_t n = scores.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) ++j;
        const double mean_rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mean_rank;
        i = j + 1;
    }
    return ranks;
}

RankTable rank_models(const WeeklyReport& report) {
    RankTable table;
    table.models = report.models;

    const auto metric_of = [](const MetricTriple& m, int which) {
        return which == 0 ? m.ape : which == 1 ? m.smape : m.rmse;
    };
    const char* names[] = {"ape", "smape", "rmse"};

    for (int which = 0; which < 3; ++which) {
        std::map<std::string, double> sums;
        for (const std::string& topic : report.topics) {
            std::vector<double> scores;
            scores.reserve(report.models.size());
            for (const std::string& model : report.models) {
                scores.push_back(metric_of(report.topic_mean.at({model, topic}), which));
            }
            const std::vector<double> ranks = rank_with_ties(scores);
            for (std::size_t m = 0; m < report.models.size(); ++m) {
                sums[report.models[m]] += ranks[m];
            }
        }
        std::map<std::string, double>& out = table.avg_rank[names[which]];
        for (const std::string& model : report.models) {
            out[model] = sums[model] / static_cast<double>(report.topics.size());
        }
    }
    return table;
}

std::string format_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw std::runtime_error("format_double failed");
    return std::string(buf, ptr);
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

}  // namespace

void write_report_csv(const WeeklyReport& report, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "model,ape,smape,rmse\n";
    for (const std::string& model : report.models) {
        const MetricTriple& m = report.model_mean.at(model);
        out << model << ',' << format_double(m.ape) << ',' << format_double(m.smape) << ','
            << format_double(m.rmse) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_report_per_topic_csv(const WeeklyReport& report, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "model,topic,ape,smape,rmse\n";
    for (const std::string& model : report.models) {
        for (const std::string& topic : report.topics) {
            const MetricTriple& m = report.topic_mean.at({model, topic});
            out << model << ',' << topic << ',' << format_double(m.ape) << ','
                << format_double(m.smape) << ',' << format_double(m.rmse) << '\n';
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_report_json(const WeeklyReport& report, const std::string& path) {
    json j;
    j["models"] = report.models;
    j["topics"] = report.topics;
    j["per_topic"] = json::array();
    for (const std::string& model : report.models) {
        for (const std::string& topic : report.topics) {
            const MetricTriple& m = report.topic_mean.at({model, topic});
            j["per_topic"].push_back(
                {{"model", model}, {"topic", topic}, {"ape", m.ape}, {"smape", m.smape},
                 {"rmse", m.rmse}});
        }
    }
    j["model_mean"] = json::array();
    for (const std::string& model : report.models) {
        const MetricTriple& m = report.model_mean.at(model);
        j["model_mean"].push_back(
            {{"model", model}, {"ape", m.ape}, {"smape", m.smape}, {"rmse", m.rmse}});
    }
    std::ofstream out = open_out(path);
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_rank_csv(const RankTable& table, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "model,ape_rank,smape_rank,rmse_rank\n";
    for (const std::string& model : table.models) {
        out << model << ',' << format_double(table.avg_rank.at("ape").at(model)) << ','
            << format_double(table.avg_rank.at("smape").at(model)) << ','
            << format_double(table.avg_rank.at("rmse").at(model)) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_rank_json(const RankTable& table, const std::string& path) {
    json j;
    j["models"] = table.models;
    for (const auto& [metric, per_model] : table.avg_rank) {
        for (const auto& [model, rank] : per_model) j["avg_rank"][metric][model] = rank;
    }
    std::ofstream out = open_out(path);
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace tap::eval
