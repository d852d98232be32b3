#pragma once

#include <cstdint>
#include <random>

namespace dirsinr {

using RngStream = std::mt19937_64;

/// Independent substreams of one master seed. Each (purpose, index) pair maps
/// to its own engine, so results do not depend on evaluation order.
enum class StreamPurpose : std::uint64_t {
  ue_drop = 1,
  shadowing = 2,
};

RngStream make_stream(std::uint64_t master_seed, StreamPurpose purpose, std::uint64_t index);

}  // namespace dirsinr
