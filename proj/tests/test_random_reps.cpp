#include <doctest.h>

#include "pants/cat/random_reps.hpp"
#include "pants/io/json_io.hpp"

using namespace pants::cat;

TEST_SUITE("random_pants") {
    TEST_CASE("every draw validates and classifies") {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            StarSumRep rep = random_pants(seed, 4);
            CHECK(validate(rep).valid);
            AutPair a = to_autpair(rep);
            CHECK(autpair_ok(a));
        }
    }

    TEST_CASE("deterministic per seed") {
        StarSumRep a = random_pants(123, 6);
        StarSumRep b = random_pants(123, 6);
        CHECK(pants::io::rep_to_json(a) == pants::io::rep_to_json(b));

        StarSumRep c = random_pants(124, 6);
        CHECK(pants::io::rep_to_json(a) != pants::io::rep_to_json(c));
    }

    TEST_CASE("max_dim bound enforced") {
        CHECK_THROWS_AS(random_pants(1, 7), std::invalid_argument);
        for (std::uint64_t seed = 0; seed < 10; ++seed)
            CHECK(random_pants(seed, 6).dim_v <= 12);
    }
}
