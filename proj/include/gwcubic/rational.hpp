#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace gwcubic {

// Arbitrary-precision integer. Everything at d <= 8 overflows 64 bits, so all
// combinatorial values live here.
using Integer = mpz_class;

// n! with factorial(0) = 1. Precondition: n >= 0.
Integer factorial(long n);

// C(n, k), with the out-of-range-to-zero convention: 0 whenever k < 0 or
// k > n. The WDVV expansion relies on these zeros to kill exactly the terms
// whose invariants are undefined, so this is not a convenience default.
Integer binomial(long n, long k);

Integer pow(const Integer& base, long exp);

// Exact rational, always stored normalized: denominator > 0 and coprime to
// the numerator. Values are immutable in spirit; every operation returns a
// fresh normalized value, which keeps memoization and concurrent reads safe.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(const Integer& n) : v_(n) {}
    Rational(long num, long den);
    Rational(const Integer& num, const Integer& den);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // "num/den" with the "/den" omitted when the value is an integer. This is
    // the CLI and JSON wire form.
    std::string str() const;
    // "num/den" with the denominator always printed; the cache file form.
    std::string str_full() const;

    // Accepts both renderings. Returns nothing on malformed or non-normalized
    // input ("2/4" is rejected so that cache files stay bit-exact).
    static std::optional<Rational> parse(std::string_view text);

private:
    mpq_class v_;
};

}  // namespace gwcubic
