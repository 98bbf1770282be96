#pragma once

#include <optional>
#include <vector>

#include "pants/exact/rat_matrix.hpp"

namespace pants::exact {

struct RrefResult {
    RatMatrix r;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column per pivot row
};

/// Reduced row echelon form by Gauss-Jordan with pivot normalization.
RrefResult rref(const RatMatrix& m);

/// Exact determinant via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix. Throws NonSquareError.
Rational det(const RatMatrix& m);

/// Exact inverse; throws NonSquareError / SingularError.
RatMatrix invert(const RatMatrix& m);

/// Basis of the right kernel {x : Mx = 0}; size is cols - rank.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

/// One exact solution of Mx = b (free variables set to zero), or nullopt if
/// the system is inconsistent. Throws DimensionError on shape mismatch.
std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& b);

}  // namespace pants::exact
