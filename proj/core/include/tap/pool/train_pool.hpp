#pragma once

#include <map>

#include "tap/data/dataset.hpp"
#include "tap/nn/train.hpp"
#include "tap/normalize.hpp"
#include "tap/pool/features.hpp"
#include "tap/splits.hpp"

namespace tap::pool {

/// Min-max state of one (spec, topic) pair: per-series feature bounds fit on
/// the training range (one-hot columns are never scaled) and the scalar
/// target bounds.
struct TopicScaling {
    Normalizer features;  // one column per FeatureLayout series
    Normalizer target;    // single column

    double target_scale() const {
        return target.maxs()[0] - target.mins()[0];
    }
};

struct TrainedMember {
    ModelSpec spec;
    nn::TrainedNet net;
    std::map<std::string, TopicScaling> scaling;  // by topic
};

struct PoolTrainResult {
    std::vector<TrainedMember> members;
    std::vector<std::string> errors;    // "<spec>: <what>" per failed spec
    std::vector<std::string> warnings;  // divergence notes etc.
};

/// Trains every spec on stride-1 windows pooled across all topics. Training
/// targets end at split.train_target_end(); validation samples are the
/// windows whose targets fall inside validation week 0. Per-spec failures are
/// collected into `errors` without aborting sibling specs.
PoolTrainResult train_pool(const std::vector<ModelSpec>& specs, const data::Dataset& ds,
                           const SplitSpec& split, const nn::TrainConfig& cfg, int jobs = 1);

/// Writes pool.json plus one binary file per member into `directory`.
void save_pool(const PoolTrainResult& pool, const std::string& directory);

/// Reads a directory written by save_pool.
PoolTrainResult load_pool(const std::string& directory);

}  // namespace tap::pool
