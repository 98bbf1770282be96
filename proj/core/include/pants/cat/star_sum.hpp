#pragma once

#include <optional>

#include "pants/cat/aut_pair.hpp"

namespace pants::cat {

/// Star-sum representation: a center space V with outer spaces V_1..V_n
/// mapped in by j_a, such that every distinct pair a != b decomposes the
/// center, V_a + V_b = V as a direct sum (det [j_a | j_b] != 0). For n = 1
/// the lone map is required to be an isomorphism instead.
///
/// These are the region categories read off the link diagrams: n = 1 and
/// n = 2 are the half-plane and crossing models, n = 3 is the trefoil-disk
/// category, n = 4 is the pair-of-pants category.
struct OuterSpace {
    std::size_t dim = 0;
    RatMatrix j;  // dimV x dim, injective when valid
};

struct StarSumRep {
    std::size_t dim_v = 0;
    std::vector<OuterSpace> outer;
    std::size_t n() const { return outer.size(); }
};

struct PairCheck {
    std::size_t a = 0, b = 0;  // 1-based indices; a == b only for the n = 1 check
    bool dims_ok = false;      // dim V_a + dim V_b == dim V
    std::optional<Rational> det;  // absent when the concatenation is not square
    bool ok = false;
};

struct ValidationReport {
    bool valid = false;
    std::vector<PairCheck> pairs;
};

/// Lists every pair with its determinant; valid iff all are nonzero (n >= 2)
/// or j_1 is an isomorphism (n = 1). Throws ShapeMismatchError when a map's
/// shape disagrees with the declared dimensions, or n is outside 1..8.
ValidationReport validate(const StarSumRep& rep);

/// The n = 4 classification: split V through (j_1, j_2), read V_3 and V_4 as
/// graphs of isomorphisms m_3, m_4 : V_1 -> V_2, and return
/// (dim V_1, m = m_3^{-1} m_4). The pairwise constraints make every slope
/// invertible and force det(m - I) != 0 (equivalent to det [j_3 | j_4] != 0),
/// which is asserted. Throws InvalidRepError unless rep is a valid 4-star.
AutPair to_autpair(const StarSumRep& rep);

/// Inverse construction: V = W + W, j_1 = (I,0), j_2 = (0,I), j_3 the graph
/// of the identity, j_4 the graph of m. Output validates. Throws
/// BadAutPairError when the pair violates its invariants.
StarSumRep from_autpair(const AutPair& a);

struct RoundTripWitness {
    RatMatrix phi;                     // from_autpair(to_autpair(rep)) -> rep on centers
    std::vector<bool> subspace_ok;     // phi carries each outer image onto im j_a
    bool all_ok = false;
};

/// Explicit isomorphism Phi(u, w) = j_1 u + j_2 m_3 w from the reconstructed
/// rep onto rep, verified by exact rank checks on each outer subspace.
RoundTripWitness roundtrip_witness(const StarSumRep& rep);

struct ClassificationResult {
    enum class Kind { Vect, VectPair, Pants, Unclassified };
    Kind kind = Kind::Unclassified;
    std::vector<std::size_t> dims;        // Vect: {dim V_1}; VectPair: {dim V_1, dim V_2}
    std::optional<RatMatrix> graph_iso;   // n = 3: the witness m_3 : V_1 -> V_2
    std::optional<AutPair> pair;          // n = 4
};

/// n = 1 -> Vect(dim V_1); n = 2 -> two copies of Vect; n = 3 -> Vect(dim
/// V_1) with the graph isomorphism witness; n = 4 -> AutPair; n >= 5 ->
/// Unclassified. Throws InvalidRepError on invalid input.
ClassificationResult classify(const StarSumRep& rep);

/// Morphisms rep -> rep2: maps phi on centers with phi(im j_a) inside
/// im j'_a for every a, solved as the exact kernel of the cokernel
/// conditions pi'_a phi j_a = 0. Basis records carry the induced maps on
/// outer spaces (unique since j'_a is injective).
HomSpace hom_star(const StarSumRep& rep, const StarSumRep& rep2);

}  // namespace pants::cat
