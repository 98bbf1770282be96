#pragma once

#include <cstdint>
#include <random>

#include "pants/cat/star_sum.hpp"

namespace pants::cat {

// Deterministic draws: raw engine output with modulo reduction, so results
// do not depend on the standard library's distribution implementations.

/// Integer in [lo, hi].
long rand_int(std::mt19937_64& rng, long lo, long hi);

/// Matrix with integer entries in [-3, 3].
RatMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols);

/// Invertible matrix with integer entries in [-3, 3] (rejection).
RatMatrix random_invertible(std::mt19937_64& rng, std::size_t n);

/// Random valid AutPair: dim in [1, max_dim], integer entries in [-3, 3],
/// redrawn until det(m) != 0 and det(m - I) != 0.
AutPair random_autpair(std::mt19937_64& rng, std::size_t max_dim);

/// Random valid 4-star: from_autpair of a random AutPair, conjugated by a
/// random invertible integer change of basis on the center and with the
/// outer spaces reordered by a random permutation. Deterministic per seed.
/// Throws std::invalid_argument when max_dim > 6.
StarSumRep random_pants(std::uint64_t seed, std::size_t max_dim);

}  // namespace pants::cat
