#include "pants/cat/random_reps.hpp"

#include <algorithm>
#include <stdexcept>

namespace pants::cat {

using exact::det;

long rand_int(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

RatMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(rand_int(rng, -3, 3));
    return m;
}

RatMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        RatMatrix m = random_int_matrix(rng, n, n);
        if (!det(m).is_zero()) return m;
    }
}

AutPair random_autpair(std::mt19937_64& rng, std::size_t max_dim) {
    AutPair a;
    a.dim = static_cast<std::size_t>(rand_int(rng, 1, static_cast<long>(max_dim)));
    for (;;) {
        a.m = random_int_matrix(rng, a.dim, a.dim);
        if (autpair_ok(a)) return a;
    }
}

StarSumRep random_pants(std::uint64_t seed, std::size_t max_dim) {
    if (max_dim > 6) throw std::invalid_argument("max_dim must be at most 6");
    std::mt19937_64 rng(seed);

    StarSumRep rep = from_autpair(random_autpair(rng, max_dim));

    RatMatrix g = random_invertible(rng, rep.dim_v);
    for (auto& o : rep.outer) o.j = g * o.j;

    // Fisher-Yates on the outer spaces
    for (std::size_t i = rep.n(); i > 1; --i)
        std::swap(rep.outer[i - 1], rep.outer[rand_int(rng, 0, static_cast<long>(i) - 1)]);
    return rep;
}

}  // namespace pants::cat
