#include "pants/cat/star_sum.hpp"

#include "pants/errors.hpp"

namespace pants::cat {

using exact::det;
using exact::invert;
using exact::kernel_basis;
using exact::rref;
using exact::solve;

namespace {

void require_shapes(const StarSumRep& rep) {
    if (rep.n() < 1 || rep.n() > 8)
        throw ShapeMismatchError("star-sum representation needs 1..8 outer spaces");
    for (const auto& o : rep.outer)
        if (o.j.rows() != rep.dim_v || o.j.cols() != o.dim)
            throw ShapeMismatchError("outer map shape disagrees with declared dimensions");
}

// Projections pr_1, pr_2 of the splitting V = V_1 + V_2 through (j_1, j_2),
// and the graph slope m_k = pr_2 j_k (pr_1 j_k)^{-1} : V_1 -> V_2.
struct Splitting {
    RatMatrix pr1, pr2;
};

Splitting split_first_two(const StarSumRep& rep) {
    const auto& j1 = rep.outer[0].j;
    const auto& j2 = rep.outer[1].j;
    RatMatrix basis = invert(RatMatrix::hcat(j1, j2));
    return {basis.block(0, 0, j1.cols(), rep.dim_v),
            basis.block(j1.cols(), 0, j2.cols(), rep.dim_v)};
}

RatMatrix graph_slope(const StarSumRep& rep, const Splitting& s, std::size_t k) {
    RatMatrix a = s.pr1 * rep.outer[k].j;
    RatMatrix b = s.pr2 * rep.outer[k].j;
    return b * invert(a);
}

}  // namespace

ValidationReport validate(const StarSumRep& rep) {
    require_shapes(rep);
    ValidationReport report;

    if (rep.n() == 1) {
        PairCheck c;
        c.a = c.b = 1;
        c.dims_ok = rep.outer[0].dim == rep.dim_v;
        if (c.dims_ok) {
            c.det = det(rep.outer[0].j);
            c.ok = !c.det->is_zero();
        }
        report.valid = c.ok;
        report.pairs.push_back(std::move(c));
        return report;
    }

    report.valid = true;
    for (std::size_t a = 0; a < rep.n(); ++a) {
        for (std::size_t b = a + 1; b < rep.n(); ++b) {
            PairCheck c;
            c.a = a + 1;
            c.b = b + 1;
            c.dims_ok = rep.outer[a].dim + rep.outer[b].dim == rep.dim_v;
            if (c.dims_ok) {
                c.det = det(RatMatrix::hcat(rep.outer[a].j, rep.outer[b].j));
                c.ok = !c.det->is_zero();
            }
            report.valid = report.valid && c.ok;
            report.pairs.push_back(std::move(c));
        }
    }
    return report;
}

AutPair to_autpair(const StarSumRep& rep) {
    if (rep.n() != 4) throw InvalidRepError("pants classification needs exactly 4 outer spaces");
    if (!validate(rep).valid) throw InvalidRepError("representation fails the pairwise checks");

    Splitting s = split_first_two(rep);
    RatMatrix m3 = graph_slope(rep, s, 2);
    RatMatrix m4 = graph_slope(rep, s, 3);

    AutPair out;
    out.dim = rep.outer[0].dim;
    out.m = invert(m3) * m4;
    // guaranteed by det [j_3 | j_4] != 0
    require_autpair(out);
    return out;
}

StarSumRep from_autpair(const AutPair& a) {
    require_autpair(a);
    const std::size_t w = a.dim;
    RatMatrix id = RatMatrix::identity(w);
    RatMatrix zero(w, w);

    StarSumRep rep;
    rep.dim_v = 2 * w;
    rep.outer = {
        {w, RatMatrix::vcat(id, zero)},  // V_1
        {w, RatMatrix::vcat(zero, id)},  // V_2
        {w, RatMatrix::vcat(id, id)},    // graph of the identity
        {w, RatMatrix::vcat(id, a.m)},   // graph of m
    };
    return rep;
}

RoundTripWitness roundtrip_witness(const StarSumRep& rep) {
    if (rep.n() != 4) throw InvalidRepError("round trip is defined for 4-stars");
    if (!validate(rep).valid) throw InvalidRepError("representation fails the pairwise checks");

    Splitting s = split_first_two(rep);
    RatMatrix m3 = graph_slope(rep, s, 2);
    StarSumRep rebuilt = from_autpair(to_autpair(rep));

    RoundTripWitness w;
    w.phi = RatMatrix::hcat(rep.outer[0].j, rep.outer[1].j * m3);

    w.all_ok = !det(w.phi).is_zero();
    for (std::size_t a = 0; a < 4; ++a) {
        // phi(im j^rebuilt_a) == im j_a: both have dim V_a, so containment
        // is an exact rank condition on the concatenation
        RatMatrix image = w.phi * rebuilt.outer[a].j;
        std::size_t r = rref(RatMatrix::hcat(image, rep.outer[a].j)).rank;
        bool ok = r == rep.outer[a].dim && rref(image).rank == rep.outer[a].dim;
        w.subspace_ok.push_back(ok);
        w.all_ok = w.all_ok && ok;
    }
    return w;
}

ClassificationResult classify(const StarSumRep& rep) {
    if (!validate(rep).valid) throw InvalidRepError("representation fails the pairwise checks");

    ClassificationResult res;
    switch (rep.n()) {
        case 1:
            res.kind = ClassificationResult::Kind::Vect;
            res.dims = {rep.outer[0].dim};
            break;
        case 2:
            res.kind = ClassificationResult::Kind::VectPair;
            res.dims = {rep.outer[0].dim, rep.outer[1].dim};
            break;
        case 3: {
            res.kind = ClassificationResult::Kind::Vect;
            res.dims = {rep.outer[0].dim};
            Splitting s = split_first_two(rep);
            res.graph_iso = graph_slope(rep, s, 2);
            break;
        }
        case 4:
            res.kind = ClassificationResult::Kind::Pants;
            res.dims = {rep.outer[0].dim};
            res.pair = to_autpair(rep);
            break;
        default:
            res.kind = ClassificationResult::Kind::Unclassified;
            break;
    }
    return res;
}

HomSpace hom_star(const StarSumRep& rep, const StarSumRep& rep2) {
    require_shapes(rep);
    require_shapes(rep2);
    if (rep.n() != rep2.n())
        throw ShapeMismatchError("hom between star-sums of different arity");
    if (!validate(rep).valid || !validate(rep2).valid)
        throw InvalidRepError("hom requires valid representations");

    const std::size_t v = rep.dim_v, v2 = rep2.dim_v;
    HomSpace hom;

    // Conditions K_a phi j_a = 0 where the rows of K_a span the left
    // annihilator of im j'_a. Unknowns: entries of phi, row-major.
    std::vector<std::vector<Rational>> rows;
    for (std::size_t a = 0; a < rep.n(); ++a) {
        const RatMatrix& ja = rep.outer[a].j;
        auto left_null = kernel_basis(rep2.outer[a].j.transpose());
        for (const auto& k_row : left_null) {
            for (std::size_t c = 0; c < ja.cols(); ++c) {
                std::vector<Rational> row(v2 * v);
                for (std::size_t i = 0; i < v2; ++i)
                    for (std::size_t j = 0; j < v; ++j) row[i * v + j] = k_row[i] * ja(j, c);
                rows.push_back(std::move(row));
            }
        }
    }

    RatMatrix system(rows.size(), v2 * v);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < v2 * v; ++c) system(r, c) = rows[r][c];

    for (const auto& vec : kernel_basis(system)) {
        MorphismRecord rec;
        rec.phi = RatMatrix(v2, v, vec);
        for (std::size_t a = 0; a < rep.n(); ++a) {
            // induced map on outer spaces: j'_a phi_a = phi j_a, solved
            // column by column (unique, j'_a injective)
            const RatMatrix rhs = rec.phi * rep.outer[a].j;
            RatMatrix comp(rep2.outer[a].dim, rep.outer[a].dim);
            for (std::size_t c = 0; c < rep.outer[a].dim; ++c) {
                auto x = solve(rep2.outer[a].j, rhs.col(c));
                if (!x) throw InvalidRepError("image containment violated; inconsistent basis");
                for (std::size_t i = 0; i < comp.rows(); ++i) comp(i, c) = (*x)[i];
            }
            rec.components.push_back(std::move(comp));
        }
        hom.basis.push_back(std::move(rec));
    }
    return hom;
}

}  // namespace pants::cat
