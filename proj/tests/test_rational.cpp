#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "tough/rational.hpp"

using tough::Rational;
using tough::parse_rational;

TEST_CASE("construction reduces to lowest terms") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(6, 9) == Rational(2, 3));
    CHECK(Rational(0, 5) == Rational(0, 1));
    CHECK(Rational(12, 4).num == 3);
    CHECK(Rational(12, 4).den == 1);
    CHECK(Rational::integer(7) == Rational(7, 1));
    CHECK(Rational() == Rational(0, 1));
}

TEST_CASE("invalid construction throws") {
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, -2), std::invalid_argument);
    CHECK_THROWS_AS(Rational(-1, 2), std::invalid_argument);
}

TEST_CASE("ordering is exact, no floating point") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(2, 3) > Rational(1, 2));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(2, 4) >= Rational(1, 2));
    CHECK(Rational(4, 3) > Rational(1, 1));
    CHECK_FALSE(Rational(1, 2) < Rational(1, 2));
    // off by one in the last digit; doubles would round these together
    CHECK(Rational(333333333, 1000000000) < Rational(1, 3));
    CHECK(Rational(333333334, 1000000000) > Rational(1, 3));
}

TEST_CASE("abs_diff") {
    CHECK(Rational(1, 2).abs_diff(Rational(1, 3)) == Rational(1, 6));
    CHECK(Rational(1, 3).abs_diff(Rational(1, 2)) == Rational(1, 6));
    CHECK(Rational(2, 3).abs_diff(Rational(2, 3)) == Rational(0, 1));
    CHECK(Rational(5, 1).abs_diff(Rational(0, 1)) == Rational(5, 1));
}

TEST_CASE("printing") {
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(3, 1).str() == "3");
    CHECK(Rational(0, 1).str() == "0");
    CHECK(Rational(3, 1).fraction_str() == "3/1");
    CHECK(Rational(4, 6).fraction_str() == "2/3");
}

TEST_CASE("parsing accepts a/b and bare integers") {
    CHECK(parse_rational("4/3") == Rational(4, 3));
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK(parse_rational("7") == Rational(7, 1));
    CHECK(parse_rational("0") == Rational(0, 1));
    CHECK(parse_rational("08") == Rational(8, 1));
}

TEST_CASE("parsing rejects malformed input") {
    for (const char* bad : {"", "1.5", "a", "-1", "1/0", "1/", "/2", "1/2/3", " 1", "1 ", "+3"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_rational(bad), std::runtime_error);
    }
}
