#include "tap/pool/spec.hpp"

#include <stdexcept>

#include "tap/rng.hpp"

namespace tap::pool {

std::string ModelSpec::name() const {
    return data::to_string(group) + "_m" + std::to_string(combo.m) + "_n" +
           std::to_string(combo.n);
}

std::vector<ModelSpec> build_pool(const std::string& platform,
                                  const std::vector<std::string>& topics,
                                  std::uint64_t base_seed, std::span<const SourceGroup> groups,
                                  std::span<const WindowCombo> combos) {
    if (topics.empty()) throw std::invalid_argument("build_pool: need at least one topic");
    std::vector<ModelSpec> specs;
    specs.reserve(groups.size() * combos.size());
    for (const SourceGroup g : groups) {
        for (const WindowCombo c : combos) {
            ModelSpec s;
            s.platform = platform;
            s.group = g;
            s.combo = c;
            s.topic_count = static_cast<Eigen::Index>(topics.size());
            s.seed = derive_seed(base_seed,
                                 {hash_str(platform), hash_str(data::to_string(g)),
                                  static_cast<std::uint64_t>(c.m), static_cast<std::uint64_t>(c.n)});
            specs.push_back(std::move(s));
        }
    }
    return specs;
}

}  // namespace tap::pool
