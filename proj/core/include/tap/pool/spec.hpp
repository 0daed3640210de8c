#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tap/data/catalog.hpp"

namespace tap::pool {

using data::SourceGroup;

struct WindowCombo {
    int m = 14;  // lookback days
    int n = 7;   // horizon days

    auto operator<=>(const WindowCombo&) const = default;
};

// Paired so that longer context predicts further ahead; 4 groups x 3 combos
// gives the 12-member default pool.
inline constexpr std::array<WindowCombo, 3> kDefaultCombos = {{{14, 7}, {7, 3}, {3, 1}}};

struct ModelSpec {
    std::string platform;
    SourceGroup group = SourceGroup::EndogenousOnly;
    WindowCombo combo;
    Eigen::Index topic_count = 0;  // one-hot width
    std::uint64_t seed = 0;

    bool exogenous() const { return group != SourceGroup::EndogenousOnly; }
    std::string name() const;  // e.g. "reddit_m7_n3"
};

/// Group-major spec enumeration with per-spec seeds derived from
/// (base_seed, platform, group, combo). Deterministic: equal inputs yield
/// equal specs and seeds.
std::vector<ModelSpec> build_pool(const std::string& platform,
                                  const std::vector<std::string>& topics,
                                  std::uint64_t base_seed,
                                  std::span<const SourceGroup> groups = data::kAllGroups,
                                  std::span<const WindowCombo> combos = kDefaultCombos);

}  // namespace tap::pool
