#pragma once

#include <cstdint>
#include <random>

namespace gebs {

// SplitMix64 step; used to whiten seeds.
std::uint64_t splitmix64(std::uint64_t& state);

// Engine for one Monte Carlo replicate. The mapping (seed, index) -> stream
// is fixed, so replicate draws do not depend on thread count or evaluation
// order; reductions over replicate index then reproduce bit-identically.
std::mt19937_64 replicate_rng(std::uint64_t seed, std::uint64_t index);

}  // namespace gebs
