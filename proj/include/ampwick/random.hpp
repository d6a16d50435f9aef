#pragma once

#include <cstdint>
#include <random>

namespace ampwick {

using Rng = std::mt19937_64;

// SplitMix64 finalizer applied to (master, index); gives independent streams.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

}  // namespace ampwick
