#pragma once

#include "pants/exact/linalg.hpp"

namespace pants::cat {

using exact::RatMatrix;
using exact::Rational;

/// A finite-dimensional space with an automorphism m such that 1 is not an
/// eigenvalue: det(m) != 0 and det(m - I) != 0. This is the linear-algebra
/// model of a finitely generated torsion module over the coordinate ring of
/// the three-punctured line (invertibility of m = support away from 0 and
/// infinity, invertibility of m - I = support away from 1).
struct AutPair {
    std::size_t dim = 0;
    RatMatrix m;  // dim x dim
};

/// Checks the two determinant constraints (shape errors throw).
bool autpair_ok(const AutPair& a);

/// Throws BadAutPairError when a constraint fails.
void require_autpair(const AutPair& a);

/// A basis element of a Hom space: the morphism on the center space, plus
/// the induced maps on outer spaces when meaningful (empty for intertwiner
/// records).
struct MorphismRecord {
    RatMatrix phi;
    std::vector<RatMatrix> components;
};

struct HomSpace {
    std::vector<MorphismRecord> basis;
    std::size_t dim() const { return basis.size(); }
};

/// Intertwiners psi with psi m = m' psi, i.e. the kernel of
/// psi -> m' psi - psi m, computed exactly.
HomSpace hom_autpair(const AutPair& a, const AutPair& b);

/// dim coker of the same intertwining map. The map is square (both sides
/// are dim x dim' matrix spaces), so this always equals dim hom_autpair;
/// computed from the rank and asserted against the kernel dimension.
std::size_t ext1_autpair(const AutPair& a, const AutPair& b);

}  // namespace pants::cat
