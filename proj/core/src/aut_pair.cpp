#include "pants/cat/aut_pair.hpp"

#include <cassert>

#include "pants/errors.hpp"

namespace pants::cat {

using exact::det;
using exact::kernel_basis;
using exact::rref;

bool autpair_ok(const AutPair& a) {
    if (a.m.rows() != a.dim || a.m.cols() != a.dim)
        throw ShapeMismatchError("automorphism shape does not match dim");
    if (det(a.m).is_zero()) return false;
    return !det(a.m - RatMatrix::identity(a.dim)).is_zero();
}

void require_autpair(const AutPair& a) {
    if (!autpair_ok(a))
        throw BadAutPairError("automorphism must be invertible with 1 not an eigenvalue");
}

namespace {

// Matrix of psi -> b.m psi - psi a.m acting on dim_b x dim_a matrices,
// entries flattened row-major.
RatMatrix intertwining_matrix(const AutPair& a, const AutPair& b) {
    const std::size_t wa = a.dim, wb = b.dim;
    RatMatrix t(wa * wb, wa * wb);
    for (std::size_t i = 0; i < wb; ++i)
        for (std::size_t j = 0; j < wa; ++j) {
            std::size_t row = i * wa + j;
            for (std::size_t k = 0; k < wb; ++k) t(row, k * wa + j) += b.m(i, k);
            for (std::size_t l = 0; l < wa; ++l) t(row, i * wa + l) -= a.m(l, j);
        }
    return t;
}

}  // namespace

HomSpace hom_autpair(const AutPair& a, const AutPair& b) {
    if (a.m.rows() != a.dim || a.m.cols() != a.dim || b.m.rows() != b.dim || b.m.cols() != b.dim)
        throw ShapeMismatchError("automorphism shape does not match dim");

    HomSpace hom;
    if (a.dim == 0 || b.dim == 0) return hom;
    for (const auto& vec : kernel_basis(intertwining_matrix(a, b))) {
        MorphismRecord rec;
        rec.phi = RatMatrix(b.dim, a.dim, vec);
        hom.basis.push_back(std::move(rec));
    }
    return hom;
}

std::size_t ext1_autpair(const AutPair& a, const AutPair& b) {
    if (a.m.rows() != a.dim || a.m.cols() != a.dim || b.m.rows() != b.dim || b.m.cols() != b.dim)
        throw ShapeMismatchError("automorphism shape does not match dim");
    if (a.dim == 0 || b.dim == 0) return 0;

    RatMatrix t = intertwining_matrix(a, b);
    std::size_t rank = rref(t).rank;
    std::size_t coker = t.rows() - rank;
    assert(coker == t.cols() - rank);  // square map
    return coker;
}

}  // namespace pants::cat
