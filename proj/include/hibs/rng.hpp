// Counter-based derivation of independent, reproducible random streams.
#pragma once

#include <cstdint>
#include <random>

namespace hibs {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

/// Stream for (seed, stream): identical for equal arguments regardless of
/// evaluation order or worker count.
Rng derive_rng(std::uint64_t seed, std::uint64_t stream);

/// Two-level variant, e.g. (seed, density index, drop index).
Rng derive_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream);

} // namespace hibs
