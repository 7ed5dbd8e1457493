#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "strongspan/geometry.hpp"

namespace strongspan {

// Point sets come from std::mt19937_64, whose output sequence is fixed by
// the standard, and doubles are formed from the top 53 bits directly, so
// results do not depend on the standard library's distributions.

/// SplitMix64 finaliser.
std::uint64_t mix64(std::uint64_t x);

/// Seed of the independent stream for instance `index` under a base seed.
std::uint64_t instance_seed(std::uint64_t base_seed, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double unit_uniform(std::mt19937_64& engine);

/// n distinct points, i.i.d. uniform on [0, 1)^2. A draw that repeats an
/// earlier point is discarded and redrawn. Throws std::invalid_argument if n < 1.
std::vector<Point2D> generate_points(std::size_t n, std::uint64_t seed);

}  // namespace strongspan
