#pragma once

#include <iosfwd>

#include "tap/nn/train.hpp"

namespace tap::nn {

// Stream round-trip of a parameter set (dims then arrays, little endian).
void write_params(std::ostream& out, const ModelParams& params);
ModelParams read_params(std::istream& in);

// Whole-net file: magic, format version, hidden size, scores, parameters.
void save_net(const std::string& path, const TrainedNet& net);
TrainedNet load_net(const std::string& path);

}  // namespace tap::nn
