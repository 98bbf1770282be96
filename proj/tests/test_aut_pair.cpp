#include <doctest.h>

#include "pants/cat/aut_pair.hpp"

using namespace pants::cat;
using pants::ShapeMismatchError;

namespace {

AutPair scalar(const Rational& lambda) { return {1, RatMatrix{{lambda}}}; }

}  // namespace

TEST_SUITE("aut_pair") {
    TEST_CASE("invariants") {
        CHECK(autpair_ok(scalar(2)));
        CHECK_FALSE(autpair_ok(scalar(1)));   // 1 is an eigenvalue
        CHECK_FALSE(autpair_ok(scalar(0)));   // not invertible
        CHECK(autpair_ok({0, RatMatrix(0, 0)}));  // zero pair is valid
        CHECK(autpair_ok({2, RatMatrix{{0, -1}, {1, 0}}}));
        CHECK_THROWS_AS(autpair_ok({2, RatMatrix(1, 1)}), ShapeMismatchError);
    }

    TEST_CASE("skyscraper hom dimensions") {
        CHECK(hom_autpair(scalar(2), scalar(2)).dim() == 1);
        CHECK(hom_autpair(scalar(2), scalar(3)).dim() == 0);
        CHECK(hom_autpair(scalar(Rational(1, 2)), scalar(Rational(1, 2))).dim() == 1);
        CHECK(hom_autpair(scalar(-1), scalar(Rational(1, 2))).dim() == 0);
    }

    TEST_CASE("diagonal commutant") {
        AutPair d{2, RatMatrix{{2, 0}, {0, 3}}};
        auto hom = hom_autpair(d, d);
        CHECK(hom.dim() == 2);
        for (const auto& rec : hom.basis) {
            // every intertwiner commutes exactly
            CHECK(d.m * rec.phi == rec.phi * d.m);
            // distinct eigenvalues force diagonal intertwiners
            CHECK(rec.phi(0, 1) == Rational(0));
            CHECK(rec.phi(1, 0) == Rational(0));
        }
    }

    TEST_CASE("basis elements intertwine") {
        AutPair a{2, RatMatrix{{2, 1}, {0, 2}}};  // Jordan block
        AutPair b{2, RatMatrix{{2, 0}, {0, 2}}};
        auto hom = hom_autpair(a, b);
        CHECK(hom.dim() == 2);
        for (const auto& rec : hom.basis) CHECK(b.m * rec.phi == rec.phi * a.m);
        // Jordan block against itself has a two-dimensional commutant
        CHECK(hom_autpair(a, a).dim() == 2);
    }

    TEST_CASE("ext1 equals hom dimension") {
        CHECK(ext1_autpair(scalar(2), scalar(2)) == 1);
        CHECK(ext1_autpair(scalar(2), scalar(3)) == 0);
        CHECK(ext1_autpair({0, RatMatrix(0, 0)}, scalar(2)) == 0);
        CHECK(ext1_autpair(scalar(2), {0, RatMatrix(0, 0)}) == 0);

        AutPair a{2, RatMatrix{{2, 1}, {0, 2}}};
        AutPair b{3, RatMatrix{{2, 0, 0}, {0, 3, 1}, {0, 0, 3}}};
        CHECK(ext1_autpair(a, b) == hom_autpair(a, b).dim());
        CHECK(ext1_autpair(b, a) == hom_autpair(b, a).dim());
    }
}
