#include "gwcubic/rational.hpp"

#include <cassert>

namespace gwcubic {

Integer factorial(long n) {
    assert(n >= 0);
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(long n, long k) {
    assert(n >= 0);
    if (k < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer pow(const Integer& base, long exp) {
    assert(exp >= 0);
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(const Integer& num, const Integer& den) {
    assert(den != 0 && "Rational with zero denominator");
    v_ = mpq_class(num);
    v_ /= mpq_class(den);  // mpq division keeps the canonical form
}

Rational& Rational::operator/=(const Rational& o) {
    assert(!o.is_zero() && "Rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_str();
}

std::string Rational::str_full() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    // reject anything mpq_set_str would silently tolerate (whitespace, hex, ...)
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        bool ok = (c >= '0' && c <= '9') || (c == '-' && i == 0) ||
                  (c == '/' && i > 0 && i + 1 < text.size());
        if (!ok) return std::nullopt;
    }
    if (text.find('/') != text.rfind('/')) return std::nullopt;
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), std::string(text).c_str(), 10) != 0) return std::nullopt;
    if (q.get_den() == 0) return std::nullopt;
    mpq_class canon = q;
    canon.canonicalize();
    // require stored-normalized input ("2/4" would break cache bit-exactness)
    if (mpz_cmp(mpq_numref(canon.get_mpq_t()), mpq_numref(q.get_mpq_t())) != 0 ||
        mpz_cmp(mpq_denref(canon.get_mpq_t()), mpq_denref(q.get_mpq_t())) != 0) {
        return std::nullopt;
    }
    Rational r;
    r.v_ = canon;
    return r;
}

}  // namespace gwcubic
