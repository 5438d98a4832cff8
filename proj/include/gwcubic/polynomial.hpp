#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "gwcubic/rational.hpp"

namespace gwcubic {

// Dense univariate polynomial with Rational coefficients, degree-ascending,
// no trailing zero coefficient (the zero polynomial stores nothing). All
// algebra exact; the geometric oracle's workhorse.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> ascending);
    explicit UniPoly(std::vector<Rational> ascending);
    static UniPoly constant(const Rational& c);
    static UniPoly monomial(int degree, const Rational& coeff);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rational& coeff(int i) const;  // 0 outside the stored range
    const Rational& leading() const;     // precondition: nonzero polynomial

    Rational eval(const Rational& x) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& s, const UniPoly& p);
    UniPoly operator-() const;

    // Quotient and remainder; throws InvalidInput on a zero divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
    UniPoly derivative() const;
    UniPoly monic() const;  // precondition: nonzero

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    std::vector<Rational> c_;
    void trim();
};

// Monic gcd; gcd(p, 0) = monic p, gcd(0, 0) = 0.
UniPoly poly_gcd(UniPoly a, UniPoly b);

// Sylvester resultant, normalized so that resultant(x-a, x-b) = b - a:
// res(p, q) = lc(q)^deg(p) * prod over roots beta of q of p(beta).
// Throws InvalidInput if either input is zero.
Rational resultant(const UniPoly& p, const UniPoly& q);

// Number of distinct complex roots: deg(p / gcd(p, p')). Throws InvalidInput
// on the zero polynomial; constants have none.
int distinct_root_count(const UniPoly& p);

// Exact polynomial through the given (x, y) pairs with pairwise distinct x.
UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace gwcubic
