#pragma once

#include <map>
#include <string>
#include <vector>

#include "tap/eval/metrics.hpp"

namespace tap::eval {

struct MetricTriple {
    double ape = 0.0;
    double smape = 0.0;
    double rmse = 0.0;
};

struct WeekScore {
    std::string model;
    std::string topic;
    std::size_t week = 0;
    MetricTriple metrics;
};

WeekScore score_week(const std::string& model, const std::string& topic, std::size_t week,
                     const Eigen::VectorXd& pred, const Eigen::VectorXd& actual);

/// Per-topic means over the weeks, then per-model means over topics.
struct WeeklyReport {
    std::vector<std::string> models;  // first-seen order
    std::vector<std::string> topics;
    std::vector<std::size_t> weeks;
    std::map<std::pair<std::string, std::string>, MetricTriple> topic_mean;  // (model, topic)
    std::map<std::string, MetricTriple> model_mean;
};

/// Aggregates scores. Every (model, topic, week) combination implied by the
/// input's model/topic/week sets must be present exactly once; a missing or
/// duplicate cell throws naming it.
WeeklyReport weekly_report(const std::vector<WeekScore>& scores);

/// 1-based ranks of `scores` ascending (rank 1 = smallest); tied values get
/// the mean of their tied positions.
std::vector<double> rank_with_ties(const std::vector<double>& scores);

/// metric name -> model -> rank averaged over topics.
struct RankTable {
    std::vector<std::string> models;
    std::map<std::string, std::map<std::string, double>> avg_rank;
};

RankTable rank_models(const WeeklyReport& report);

/// Table-style emission. Model means: one row per model with the three
/// metrics; per-topic file adds a topic column. Rank table: one row per
/// model, one column per metric.
void write_report_csv(const WeeklyReport& report, const std::string& path);
void write_report_per_topic_csv(const WeeklyReport& report, const std::string& path);
void write_report_json(const WeeklyReport& report, const std::string& path);
void write_rank_csv(const RankTable& table, const std::string& path);
void write_rank_json(const RankTable& table, const std::string& path);

/// Deterministic shortest round-trip decimal form (used by every CSV writer).
std::string format_double(double v);

}  // namespace tap::eval
