#include "tap/pool/forecast.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tap::pool {

LstmMember::LstmMember(TrainedMember member, const data::Dataset& ds)
    : member_(std::move(member)) {
    for (const std::string& topic : ds.topics) {
        layouts_.emplace(topic, make_layout(member_.spec, ds, topic));
    }
}

Eigen::VectorXd LstmMember::predict_block(const data::SeriesSource& src, const std::string& topic,
                                          DayIndex start) const {
    const auto lit = layouts_.find(topic);
    if (lit == layouts_.end()) throw std::invalid_argument("unknown topic '" + topic + "'");
    const auto sit = member_.scaling.find(topic);
    if (sit == member_.scaling.end()) {
        throw std::invalid_argument("no scaling for topic '" + topic + "'");
    }
    const FeatureLayout& layout = lit->second;
    const TopicScaling& scaling = sit->second;

    const DayRange window{start - member_.spec.combo.m, start - 1};
    Eigen::MatrixXd rows = feature_matrix(layout, src, window);
    rows.leftCols(layout.series_count()) =
        scaling.features.apply(rows.leftCols(layout.series_count()));

    nn::ForwardCache cache;
    const Eigen::VectorXd pred = nn::forward(member_.net.params, rows, cache);
    Eigen::VectorXd raw(pred.size());
    for (Eigen::Index i = 0; i < pred.size(); ++i) {
        raw[i] = scaling.target.invert_one(pred[i], 0);
    }
    return raw;
}

FeedbackView::FeedbackView(const data::SeriesSource& base, SeriesKey target, DayIndex week_start)
    : base_(base), target_(std::move(target)), week_start_(week_start) {}

void FeedbackView::push(double raw_value) { fed_.push_back(raw_value); }

double FeedbackView::value(const SeriesKey& key, DayIndex day) const {
    if (key == target_ && day >= week_start_) {
        const std::int64_t idx = day - week_start_;
        if (idx < static_cast<std::int64_t>(fed_.size())) {
            return fed_[static_cast<std::size_t>(idx)];
        }
        throw std::logic_error("forecast tried to read target actuals inside the week: " +
                               key.str() + " day +" + std::to_string(idx));
    }
    return base_.value(key, day);
}

bool FeedbackView::has(const SeriesKey& key) const { return key == target_ || base_.has(key); }

Eigen::VectorXd recursive_forecast(const PoolMember& member, const std::string& topic,
                                   DayIndex week_start, const data::SeriesSource& src,
                                   const SeriesKey& target) {
    FeedbackView view(src, target, week_start);
    Eigen::VectorXd week(7);
    int produced = 0;
    while (produced < 7) {
        const Eigen::VectorXd block = member.predict_block(view, topic, week_start + produced);
        if (block.size() != member.spec().combo.n) {
            throw std::logic_error("member returned a block of " + std::to_string(block.size()) +
                                   " days, spec horizon is " +
                                   std::to_string(member.spec().combo.n));
        }
        const int take = std::min<int>(static_cast<int>(block.size()), 7 - produced);
        for (int k = 0; k < take; ++k) {
            const double v = std::max(0.0, block[k]);
            week[produced + k] = v;
            view.push(v);
        }
        produced += take;
    }
    return week;
}

namespace {

int group_rank(SourceGroup g) {
    for (std::size_t i = 0; i < data::kAllGroups.size(); ++i) {
        if (data::kAllGroups[i] == g) return static_cast<int>(i);
    }
    return static_cast<int>(data::kAllGroups.size());
}

// Strict-weak order on (rmse, m, n, group): the declared tie-break chain.
bool candidate_before(double rmse_a, const ModelSpec& a, double rmse_b, const ModelSpec& b) {
    if (rmse_a != rmse_b) return rmse_a < rmse_b;
    if (a.combo.m != b.combo.m) return a.combo.m < b.combo.m;
    if (a.combo.n != b.combo.n) return a.combo.n < b.combo.n;
    return group_rank(a.group) < group_rank(b.group);
}

}  // namespace

std::size_t select_best(const std::vector<const PoolMember*>& candidates,
                        const std::string& topic, DayRange validation_week,
                        const data::SeriesSource& src, const SeriesKey& target,
                        const Eigen::VectorXd& actuals, Provenance* prov) {
    if (candidates.empty()) throw std::invalid_argument("select_best: no candidates");
    if (actuals.size() != 7) {
        throw std::invalid_argument("select_best: validation actuals must have 7 days");
    }
    if (validation_week.length() != 7) {
        throw std::invalid_argument("select_best: validation week must have 7 days");
    }

    std::size_t best = 0;
    double best_rmse = 0.0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Eigen::VectorXd fc =
            recursive_forecast(*candidates[i], topic, validation_week.first, src, target);
        const double rmse = std::sqrt((fc - actuals).squaredNorm() / 7.0);
        if (prov) {
            prov->candidates.push_back(candidates[i]->spec().name());
            prov->val_rmse.push_back(rmse);
        }
        if (i == 0 || candidate_before(rmse, candidates[i]->spec(), best_rmse,
                                       candidates[best]->spec())) {
            best = i;
            best_rmse = rmse;
        }
    }
    if (prov) prov->chosen = {candidates[best]->spec().name()};
    return best;
}

PoolForecaster::PoolForecaster(const PoolTrainResult& pool, const data::Dataset& ds,
                               SplitSpec split)
    : ds_(ds), src_(&ds), split_(std::move(split)) {
    split_.validate();
    for (const TrainedMember& m : pool.members) {
        members_.push_back(std::make_unique<LstmMember>(m, ds));
    }
    if (members_.empty()) throw std::invalid_argument("forecaster needs a non-empty pool");
}

Eigen::VectorXd PoolForecaster::validation_actuals(const std::string& topic,
                                                   std::size_t week) const {
    const DayRange vw = split_.validation_week(week);
    const SeriesKey target = ds_.target_key(topic);
    Eigen::VectorXd a(7);
    for (int i = 0; i < 7; ++i) a[i] = src_->value(target, vw.first + i);
    return a;
}

VariantForecast PoolForecaster::run_selected(const std::vector<const PoolMember*>& candidates,
                                             const std::string& topic, std::size_t week,
                                             const char* variant) const {
    VariantForecast out;
    out.prov.topic = topic;
    out.prov.week = week;
    out.prov.variant = variant;
    const SeriesKey target = ds_.target_key(topic);
    const std::size_t winner =
        select_best(candidates, topic, split_.validation_week(week), *src_, target,
                    validation_actuals(topic, week), &out.prov);
    out.week = recursive_forecast(*candidates[winner], topic, split_.test_weeks.at(week).first,
                                  *src_, target);
    return out;
}

VariantForecast PoolForecaster::tap_exo(const std::string& topic, std::size_t week) const {
    std::vector<const PoolMember*> exo;
    for (const auto& m : members_) {
        if (m->spec().exogenous()) exo.push_back(m.get());
    }
    return run_selected(exo, topic, week, "TAP-Exo");
}

VariantForecast PoolForecaster::tap_endo(const std::string& topic, std::size_t week) const {
    std::vector<const PoolMember*> endo;
    for (const auto& m : members_) {
        if (!m->spec().exogenous()) endo.push_back(m.get());
    }
    return run_selected(endo, topic, week, "TAP-Endo");
}

VariantForecast PoolForecaster::tap_ens(const std::string& topic, std::size_t week,
                                        EnsembleMode mode) const {
    const SeriesKey target = ds_.target_key(topic);
    const DayIndex week_start = split_.test_weeks.at(week).first;

    VariantForecast out;
    out.prov.topic = topic;
    out.prov.week = week;
    out.prov.variant = "TAP-Ens";

    std::vector<const PoolMember*> chosen;
    if (mode == EnsembleMode::All) {
        for (const auto& m : members_) {
            if (m->spec().exogenous()) chosen.push_back(m.get());
        }
        for (const PoolMember* m : chosen) out.prov.candidates.push_back(m->spec().name());
    } else {
        const Eigen::VectorXd actuals = validation_actuals(topic, week);
        for (const SourceGroup g : data::kExogenousGroups) {
            std::vector<const PoolMember*> group;
            for (const auto& m : members_) {
                if (m->spec().group == g) group.push_back(m.get());
            }
            if (group.empty()) continue;
            Provenance sub;
            const std::size_t winner = select_best(group, topic, split_.validation_week(week),
                                                   *src_, target, actuals, &sub);
            chosen.push_back(group[winner]);
            out.prov.candidates.insert(out.prov.candidates.end(), sub.candidates.begin(),
                                       sub.candidates.end());
            out.prov.val_rmse.insert(out.prov.val_rmse.end(), sub.val_rmse.begin(),
                                     sub.val_rmse.end());
        }
    }
    if (chosen.empty()) throw std::invalid_argument("tap_ens: no exogenous members in the pool");

    Eigen::VectorXd sum = Eigen::VectorXd::Zero(7);
    for (const PoolMember* m : chosen) {
        sum += recursive_forecast(*m, topic, week_start, *src_, target);
        out.prov.chosen.push_back(m->spec().name());
    }
    out.week = sum / static_cast<double>(chosen.size());
    return out;
}

}  // namespace tap::pool
