#include <doctest.h>

#include "pants/cat/random_reps.hpp"
#include "pants/io/json_io.hpp"

using namespace pants::io;
using namespace pants::cat;
using pants::ParseError;

TEST_SUITE("json io") {
    TEST_CASE("rep round trip") {
        for (std::uint64_t seed : {1, 7, 19}) {
            StarSumRep rep = random_pants(seed, 4);
            Json j = rep_to_json(rep);
            StarSumRep back = rep_from_json(j);
            CHECK(back.dim_v == rep.dim_v);
            REQUIRE(back.n() == rep.n());
            for (std::size_t a = 0; a < rep.n(); ++a) {
                CHECK(back.outer[a].dim == rep.outer[a].dim);
                CHECK(back.outer[a].j == rep.outer[a].j);
            }
        }
    }

    TEST_CASE("autpair round trip keeps exact rationals") {
        AutPair a{2, RatMatrix{{Rational(1, 2), Rational(-7, 3)}, {0, 3}}};
        Json j = autpair_to_json(a);
        CHECK(j["m"][0][0] == "1/2");
        CHECK(j["m"][0][1] == "-7/3");
        CHECK(j["m"][1][0] == "0");
        AutPair back = autpair_from_json(j);
        CHECK(back.dim == 2);
        CHECK(back.m == a.m);
    }

    TEST_CASE("canonical schema document parses") {
        Json j = parse_document(R"({
            "n": 4, "dimV": 2,
            "outer": [
                {"dim": 1, "map": [["1"], ["0"]]},
                {"dim": 1, "map": [["0"], ["1"]]},
                {"dim": 1, "map": [["1"], ["1"]]},
                {"dim": 1, "map": [["1"], ["2"]]}
            ]
        })", "inline");
        StarSumRep rep = rep_from_json(j);
        CHECK(validate(rep).valid);
        CHECK(to_autpair(rep).m == RatMatrix{{2}});
    }

    TEST_CASE("malformed rationals are rejected with their position") {
        Json j = parse_document(R"({
            "n": 1, "dimV": 1,
            "outer": [{"dim": 1, "map": [["2/0"]]}]
        })", "inline");
        try {
            rep_from_json(j);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.where == "$.outer[0].map[0][0]");
            CHECK(std::string(e.what()).find("2/0") != std::string::npos);
        }
    }

    TEST_CASE("shape disagreements are rejected") {
        Json j = parse_document(R"({
            "n": 1, "dimV": 2,
            "outer": [{"dim": 1, "map": [["1"]]}]
        })", "inline");
        CHECK_THROWS_AS(rep_from_json(j), ParseError);

        Json ragged = parse_document(R"({"dim": 2, "m": [["1", "0"], ["1"]]})", "inline");
        CHECK_THROWS_AS(autpair_from_json(ragged), ParseError);
    }

    TEST_CASE("malformed json reports line and column") {
        try {
            parse_document("{\n  \"n\": 4,\n  \"dimV\": oops\n}", "f.json");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.where.substr(0, 9) == "f.json:3:");
        }
    }

    TEST_CASE("validation and classification render to stable json") {
        StarSumRep rep = rep_from_json(parse_document(R"({
            "n": 4, "dimV": 2,
            "outer": [
                {"dim": 1, "map": [["1"], ["0"]]},
                {"dim": 1, "map": [["0"], ["1"]]},
                {"dim": 1, "map": [["1"], ["1"]]},
                {"dim": 1, "map": [["1"], ["2"]]}
            ]
        })", "inline"));

        Json v = validation_to_json(validate(rep));
        CHECK(v["valid"] == true);
        CHECK(v["pairs"].size() == 6);

        Json c = classification_to_json(classify(rep));
        CHECK(c["class"] == "autpair");
        CHECK(c["dim"] == 1);
        CHECK(c["m"][0][0] == "2");

        Json w = witness_to_json(roundtrip_witness(rep));
        CHECK(w["checks_pass"] == true);
    }
}
