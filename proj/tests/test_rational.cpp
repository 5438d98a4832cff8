#include <doctest.h>

#include "gwcubic/rational.hpp"

using namespace gwcubic;

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(6) == 720);
    for (long n = 1; n <= 30; ++n) {
        CHECK(factorial(n) == Integer(n) * factorial(n - 1));
    }
}

TEST_CASE("binomial with the out-of-range-to-zero convention") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    for (long n = 0; n <= 12; ++n) {
        for (long k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == binomial(n, n - k));
        }
    }
}

TEST_CASE("rational arithmetic stays normalized") {
    Rational half(1, 2);
    Rational third(1, 3);
    CHECK(half + third == Rational(5, 6));
    CHECK(Rational(2, 4) == half);
    CHECK(Rational(2, 4).numerator() == 1);
    CHECK(Rational(2, 4).denominator() == 2);
    CHECK(Rational(3) * third == Rational(1));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).denominator() == 2);
    CHECK((Rational(7, 3) / Rational(7, 3)).is_integer());
    CHECK(-Rational(2, 5) == Rational(-2, 5));
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rendering and parsing") {
    CHECK(Rational(5, 6).str() == "5/6");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(7).str_full() == "7/1");
    CHECK(Rational(-3, 4).str() == "-3/4");

    CHECK(*Rational::parse("5/6") == Rational(5, 6));
    CHECK(*Rational::parse("7") == Rational(7));
    CHECK(*Rational::parse("7/1") == Rational(7));
    CHECK(*Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(!Rational::parse("2/4"));   // not normalized
    CHECK(!Rational::parse("1/0"));
    CHECK(!Rational::parse(""));
    CHECK(!Rational::parse("1.5"));
    CHECK(!Rational::parse("1/ 2"));
    CHECK(!Rational::parse("1/2/3"));

    for (long n = -20; n <= 20; ++n) {
        for (long den = 1; den <= 7; ++den) {
            Rational v(n, den);
            CHECK(*Rational::parse(v.str()) == v);
            CHECK(*Rational::parse(v.str_full()) == v);
        }
    }
}
