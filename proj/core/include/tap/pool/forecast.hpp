#pragma once

#include <memory>

#include "tap/pool/train_pool.hpp"

namespace tap::pool {

/// Anything able to produce one n-day block of raw-scale predictions.
/// recursive_forecast only needs this much, so tests can drive it with stubs.
class PoolMember {
public:
    virtual ~PoolMember() = default;
    virtual const ModelSpec& spec() const = 0;
    /// Prediction for days [start, start+n-1] from feature rows
    /// [start-m, start-1], every value read through `src`.
    virtual Eigen::VectorXd predict_block(const data::SeriesSource& src,
                                          const std::string& topic, DayIndex start) const = 0;
};

/// A trained network bound to its feature layouts and per-topic scaling.
class LstmMember : public PoolMember {
public:
    LstmMember(TrainedMember member, const data::Dataset& ds);

    const ModelSpec& spec() const override { return member_.spec; }
    Eigen::VectorXd predict_block(const data::SeriesSource& src, const std::string& topic,
                                  DayIndex start) const override;

    const TrainedMember& trained() const { return member_; }

private:
    TrainedMember member_;
    std::map<std::string, FeatureLayout> layouts_;
};

/// Wraps a source for one forecast week: already-forecast target days are
/// served from the feedback buffer, and any read of a target actual dated
/// inside the week beyond what was fed back throws (that would be ground-truth
/// leakage). All other series pass through untouched.
class FeedbackView : public data::SeriesSource {
public:
    FeedbackView(const data::SeriesSource& base, SeriesKey target, DayIndex week_start);

    void push(double raw_value);

    double value(const SeriesKey& key, DayIndex day) const override;
    bool has(const SeriesKey& key) const override;

private:
    const data::SeriesSource& base_;
    SeriesKey target_;
    DayIndex week_start_;
    std::vector<double> fed_;
};

/// Covers the 7-day week starting at `week_start` by repeated predict_block
/// calls (n=7: one, n=3: three with the last truncated, n=1: seven), feeding
/// each produced day back through a FeedbackView. Output is clamped at 0.
Eigen::VectorXd recursive_forecast(const PoolMember& member, const std::string& topic,
                                   DayIndex week_start, const data::SeriesSource& src,
                                   const SeriesKey& target);

struct Provenance {
    std::string topic;
    std::size_t week = 0;
    std::string variant;
    std::vector<std::string> candidates;  // spec names, parallel to val_rmse
    std::vector<double> val_rmse;         // empty when no selection ran
    std::vector<std::string> chosen;
};

/// Runs every candidate over the validation week and returns the index of the
/// lowest denormalized RMSE against `actuals` (7 values). Ties break toward
/// smaller m, then smaller n, then catalog group order. Throws on an empty
/// candidate set.
std::size_t select_best(const std::vector<const PoolMember*>& candidates,
                        const std::string& topic, DayRange validation_week,
                        const data::SeriesSource& src, const SeriesKey& target,
                        const Eigen::VectorXd& actuals, Provenance* prov = nullptr);

enum class EnsembleMode { All, PerSourceBest };

struct VariantForecast {
    Eigen::VectorXd week;  // 7 raw-scale values
    Provenance prov;
};

/// Trained pool bound to its dataset and split; selection is re-run for every
/// (topic, week) using the week's own validation window.
class PoolForecaster {
public:
    PoolForecaster(const PoolTrainResult& pool, const data::Dataset& ds, SplitSpec split);

    /// Best of the 9 exogenous members.
    VariantForecast tap_exo(const std::string& topic, std::size_t week) const;
    /// Best of the 3 endogenous-only members.
    VariantForecast tap_endo(const std::string& topic, std::size_t week) const;
    /// Mean of the exogenous members' forecasts (all 9, or the per-group best 3).
    VariantForecast tap_ens(const std::string& topic, std::size_t week,
                            EnsembleMode mode = EnsembleMode::All) const;

    /// Routes every subsequent data read through `src` instead of the dataset
    /// (instrumentation hook; `src` must outlive the forecaster's use).
    void use_source(const data::SeriesSource& src) { src_ = &src; }

    const std::vector<std::unique_ptr<LstmMember>>& members() const { return members_; }
    const data::Dataset& dataset() const { return ds_; }
    const SplitSpec& split() const { return split_; }

private:
    Eigen::VectorXd validation_actuals(const std::string& topic, std::size_t week) const;
    VariantForecast run_selected(const std::vector<const PoolMember*>& candidates,
                                 const std::string& topic, std::size_t week,
                                 const char* variant) const;

    std::vector<std::unique_ptr<LstmMember>> members_;
    const data::Dataset& ds_;
    const data::SeriesSource* src_;
    SplitSpec split_;
};

}  // namespace tap::pool
