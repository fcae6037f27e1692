#ifndef MONSCHED_RNG_HPP
#define MONSCHED_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace monsched {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

// Derives an independent stream seed from a user seed and a component name,
// e.g. derive_seed(seed, "blll"). Stable across platforms.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view component);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Uniform integer in [0, bound). Rejection sampling on the raw 64-bit output
// so results do not depend on the standard library's distribution code.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(Rng& rng);

// Uniform sigma-subset of {0..k-1} as a bit mask (Floyd's algorithm).
std::uint64_t random_subset_mask(Rng& rng, int k, int sigma);

}  // namespace monsched

#endif  // MONSCHED_RNG_HPP
