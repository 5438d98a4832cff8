#include "gwcubic/polynomial.hpp"

#include <cassert>

#include "gwcubic/errors.hpp"

namespace gwcubic {

namespace {
const Rational kZero(0);
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly::UniPoly(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }

UniPoly::UniPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly{c}; }

UniPoly UniPoly::monomial(int degree, const Rational& coeff) {
    assert(degree >= 0);
    std::vector<Rational> c(static_cast<size_t>(degree) + 1, Rational(0));
    c.back() = coeff;
    return UniPoly(std::move(c));
}

const Rational& UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Rational& UniPoly::leading() const {
    assert(!is_zero());
    return c_.back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
    if (s.is_zero()) return UniPoly();
    std::vector<Rational> c = p.c_;
    for (auto& v : c) v *= s;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const { return Rational(-1) * *this; }

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw InvalidInput("polynomial division by zero");
    UniPoly rem = *this;
    if (rem.degree() < divisor.degree()) return {UniPoly(), rem};
    std::vector<Rational> q(static_cast<size_t>(degree() - divisor.degree() + 1), Rational(0));
    const Rational& lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        const int shift = rem.degree() - divisor.degree();
        Rational factor = rem.leading() / lead;
        q[static_cast<size_t>(shift)] = factor;
        rem -= factor * UniPoly::monomial(shift, Rational(1)) * divisor;
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::monic() const {
    assert(!is_zero());
    return (Rational(1) / leading()) * *this;
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Rational resultant(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) throw InvalidInput("resultant of the zero polynomial");
    const int m = p.degree();
    const int n = q.degree();
    if (m == 0 && n == 0) return Rational(1);
    if (m == 0) {
        Rational r(1);
        for (int i = 0; i < n; ++i) r *= p.coeff(0);
        return r;
    }
    if (n == 0) {
        Rational r(1);
        for (int i = 0; i < m; ++i) r *= q.coeff(0);
        return r;
    }
    // Sylvester matrix of (q, p): m rows of q's coefficients, n rows of p's,
    // descending within each row. Its determinant is lc(q)^m prod p(beta_j).
    const int size = m + n;
    std::vector<std::vector<Rational>> a(static_cast<size_t>(size),
                                         std::vector<Rational>(static_cast<size_t>(size), Rational(0)));
    for (int r = 0; r < m; ++r) {
        for (int j = 0; j <= n; ++j) {
            a[static_cast<size_t>(r)][static_cast<size_t>(r) + static_cast<size_t>(j)] = q.coeff(n - j);
        }
    }
    for (int r = 0; r < n; ++r) {
        for (int j = 0; j <= m; ++j) {
            a[static_cast<size_t>(m) + static_cast<size_t>(r)][static_cast<size_t>(r) + static_cast<size_t>(j)] = p.coeff(m - j);
        }
    }
    // exact Gaussian elimination over Q
    Rational det(1);
    for (int col = 0; col < size; ++col) {
        int pivot = -1;
        for (int r = col; r < size; ++r) {
            if (!a[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(col)]);
            det = -det;
        }
        const Rational& pv = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
        det *= pv;
        for (int r = col + 1; r < size; ++r) {
            Rational& head = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (head.is_zero()) continue;
            Rational factor = head / pv;
            for (int j = col; j < size; ++j) {
                a[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
                    factor * a[static_cast<size_t>(col)][static_cast<size_t>(j)];
            }
        }
    }
    return det;
}

int distinct_root_count(const UniPoly& p) {
    if (p.is_zero()) throw InvalidInput("root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    UniPoly sqfree = p.divmod(poly_gcd(p, p.derivative())).first;
    return sqfree.degree();
}

UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    // Newton form, built incrementally
    UniPoly result;
    UniPoly basis = UniPoly::constant(Rational(1));
    for (const auto& [x, y] : points) {
        Rational basis_at_x = basis.eval(x);
        assert(!basis_at_x.is_zero() && "interpolation nodes must be distinct");
        Rational coeff = (y - result.eval(x)) / basis_at_x;
        result += coeff * basis;
        basis = basis * UniPoly{-x, Rational(1)};
    }
    return result;
}

}  // namespace gwcubic
