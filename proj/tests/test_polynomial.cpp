#include <doctest.h>

#include "gwcubic/errors.hpp"
#include "gwcubic/polynomial.hpp"

using namespace gwcubic;

namespace {
// ascending coefficients
UniPoly poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
}
}  // namespace

TEST_CASE("construction and trimming") {
    CHECK(UniPoly().is_zero());
    CHECK(UniPoly().degree() == -1);
    CHECK(poly({1, 2, 0}).degree() == 1);
    CHECK(poly({0}).is_zero());
    CHECK(UniPoly::monomial(3, Rational(2)).degree() == 3);
}

TEST_CASE("arithmetic and evaluation") {
    UniPoly p = poly({1, 0, 1});   // x^2 + 1
    UniPoly q = poly({-2, 0, 1});  // x^2 - 2
    CHECK(p + q == poly({-1, 0, 2}));
    CHECK(p - p == UniPoly());
    CHECK(p * q == poly({-2, 0, -1, 0, 1}));
    CHECK(p.eval(Rational(2)) == Rational(5));
    CHECK((Rational(1, 2) * p).eval(Rational(2)) == Rational(5, 2));
}

TEST_CASE("derivative") {
    CHECK(poly({0, 0, 0, 1}).derivative() == poly({0, 0, 3}));  // (x^3)' = 3x^2
    CHECK(poly({5}).derivative().is_zero());
}

TEST_CASE("divmod") {
    // (x^2 + 1) = x * x + 1
    auto [quot, rem] = poly({1, 0, 1}).divmod(poly({0, 1}));
    CHECK(quot == poly({0, 1}));
    CHECK(rem == poly({1}));
    CHECK_THROWS_AS(poly({1}).divmod(UniPoly()), InvalidInput);

    // division with rational coefficients reconstructs exactly
    UniPoly a = poly({3, -5, 0, 7, 2});
    UniPoly b = poly({1, 4, 6});
    auto [q2, r2] = a.divmod(b);
    CHECK(q2 * b + r2 == a);
    CHECK(r2.degree() < b.degree());
}

TEST_CASE("gcd is monic") {
    UniPoly a = poly({-1, 0, 1});  // x^2 - 1
    UniPoly b = poly({-1, 1});     // x - 1
    CHECK(poly_gcd(a, b) == b);
    CHECK(poly_gcd(Rational(7) * a, Rational(3) * b) == b);
    CHECK(poly_gcd(a, UniPoly()) == a.monic());

    // planted common factor
    UniPoly f = poly({2, 1}) * poly({1, 0, 3});
    UniPoly g = poly({2, 1}) * poly({-4, 1});
    CHECK(poly_gcd(f, g) == poly({2, 1}).monic());
}

TEST_CASE("resultant") {
    CHECK(resultant(poly({-2, 1}), poly({-5, 1})) == Rational(3));  // b - a for monic linears
    CHECK(resultant(poly({-1, 0, 1}), poly({-1, 1})) == Rational(0));  // common root
    CHECK(resultant(poly({1, 0, 1}), poly({-2, 0, 1})) == Rational(9));  // hand Sylvester 4x4
    CHECK_THROWS_AS(resultant(UniPoly(), poly({1})), InvalidInput);
    CHECK_THROWS_AS(resultant(poly({1}), UniPoly()), InvalidInput);

    // vanishes iff the gcd is nonconstant, on a planted family
    for (long r = -3; r <= 3; ++r) {
        UniPoly common = poly({-r, 1});
        UniPoly f = common * poly({1, 1, 1});
        UniPoly g = common * poly({3, -2});
        CHECK(resultant(f, g) == Rational(0));
        CHECK(poly_gcd(f, g).degree() >= 1);
        UniPoly h = poly({1, 0, 0, 1});
        if (h.eval(Rational(r)) != Rational(0)) {
            CHECK(resultant(h, common) == h.eval(Rational(r)));
        }
    }
}

TEST_CASE("distinct_root_count") {
    // (x-1)^2 (x+2)
    UniPoly p = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});
    CHECK(distinct_root_count(p) == 2);
    CHECK(distinct_root_count(poly({5})) == 0);
    UniPoly x6 = poly({1, 0, 0, 0, 0, 0, 1});
    CHECK(distinct_root_count(x6) == 6);
    CHECK(distinct_root_count(p * p) == distinct_root_count(p));
    CHECK_THROWS_AS(distinct_root_count(UniPoly()), InvalidInput);
}

TEST_CASE("interpolation") {
    UniPoly target = poly({3, -2, 0, 5});
    std::vector<std::pair<Rational, Rational>> samples;
    for (long x = -2; x <= 2; ++x) samples.emplace_back(Rational(x), target.eval(Rational(x)));
    CHECK(interpolate(samples) == target);
}
