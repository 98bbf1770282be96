#include <doctest.h>

#include <sstream>

#include "pants/exact/rational.hpp"

using pants::DivisionByZeroError;
using pants::exact::Rational;

TEST_SUITE("rational") {
    TEST_CASE("canonical form") {
        CHECK(Rational(6, -4).str() == "-3/2");
        CHECK(Rational(0, 7).str() == "0");
        CHECK(Rational(-0, 3) == Rational(0));
        CHECK(Rational(4, 2).str() == "2");
        CHECK(Rational(2, 4).num() == 1);
        CHECK(Rational(2, 4).den() == 2);
        CHECK_THROWS_AS(Rational(1, 0), DivisionByZeroError);
    }

    TEST_CASE("arithmetic") {
        Rational half(1, 2), third(1, 3);
        CHECK((half + third).str() == "5/6");
        CHECK((half - third).str() == "1/6");
        CHECK((half * third).str() == "1/6");
        CHECK((half / third).str() == "3/2");
        CHECK((-half).str() == "-1/2");
        CHECK(half.reciprocal().str() == "2");
        CHECK_THROWS_AS(half / Rational(0), DivisionByZeroError);
        CHECK_THROWS_AS(Rational(0).reciprocal(), DivisionByZeroError);
    }

    TEST_CASE("ordering") {
        CHECK(Rational(1, 3) < Rational(1, 2));
        CHECK(Rational(-5) < Rational(-1, 2));
        CHECK(Rational(7, 7) == Rational(1));
        CHECK(Rational(2, 3).sign() == 1);
        CHECK(Rational(-2, 3).sign() == -1);
        CHECK(Rational(0).sign() == 0);
        CHECK(Rational(-2, 3).abs() == Rational(2, 3));
    }

    TEST_CASE("parse round trip") {
        auto p = [](const char* s) { return Rational::parse(s); };
        CHECK(p("5/3")->str() == "5/3");
        CHECK(p("-5/3")->str() == "-5/3");
        CHECK(p("10")->str() == "10");
        CHECK(p("4/6")->str() == "2/3");  // non-canonical input accepted
        CHECK(p("+7/2")->str() == "7/2");
        CHECK(p("0/5")->str() == "0");

        CHECK_FALSE(p(""));
        CHECK_FALSE(p(" 1"));
        CHECK_FALSE(p("1 "));
        CHECK_FALSE(p("1/"));
        CHECK_FALSE(p("/2"));
        CHECK_FALSE(p("1/0"));
        CHECK_FALSE(p("1/00"));
        CHECK_FALSE(p("1/-2"));
        CHECK_FALSE(p("a/2"));
        CHECK_FALSE(p("1.5"));
        CHECK_FALSE(p("1/2/3"));
    }

    TEST_CASE("no overflow at large values") {
        Rational big = Rational::parse("123456789012345678901234567890").value();
        CHECK((big * big).str() == "15241578753238836750495351562536198787501905199875019052100");
    }

    TEST_CASE("stream output") {
        std::ostringstream os;
        os << Rational(-7, 3);
        CHECK(os.str() == "-7/3");
    }
}
