#pragma once

// Seeded generators for test and verification workloads.

#include "trop/geometry.hpp"
#include "trop/polynomial.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace trop {

using Rng = std::mt19937_64;

// Decorrelated per-trial seed.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

// All lattice points of the standard triangle of size d.
std::vector<LatticePoint> full_support(long long d);

// Lattice points of the standard triangle with its corners cut off by
// depths k0, k1, k2 (corners (0,0), (d,0), (0,d)), pairwise k_i + k_j <= d
// and at least one k_i > 0, so the curve still has degree d.
std::vector<LatticePoint> corner_cut_support(long long d, Rng& rng);

// Integer coefficients drawn uniformly from [-bound, bound].
TropicalPolynomial random_polynomial(std::span<const LatticePoint> support, Rng& rng,
                                     long long bound = 1'000'000);

// Uniform coefficients in [-1e6, 1e6] plus the concave bowl
// -1e6 * (i^2 + ij + j^2), redrawn until V(f) is smooth. Without the bowl a
// smooth cubic turns up about once per thousand draws. Throws after
// max_attempts.
TropicalPolynomial random_smooth_polynomial(std::span<const LatticePoint> support, Rng& rng,
                                            int max_attempts = 1000);

}  // namespace trop
