#include "gwcubic/cubic_oracle.hpp"

#include <cassert>
#include <random>
#include <vector>

#include "gwcubic/errors.hpp"

namespace gwcubic {

namespace {

// Dense ternary form of fixed total degree; entry (i,j) is the coefficient of
// x^i y^j z^{deg-i-j}.
class Ternary {
public:
    explicit Ternary(int deg) : deg_(deg), c_(index_count(deg)) {}

    int deg() const { return deg_; }

    Rational& at(int i, int j) { return c_[index(i, j)]; }
    const Rational& at(int i, int j) const { return c_[index(i, j)]; }

    Ternary operator*(const Ternary& o) const {
        Ternary out(deg_ + o.deg_);
        for (int i = 0; i <= deg_; ++i) {
            for (int j = 0; i + j <= deg_; ++j) {
                if (at(i, j).is_zero()) continue;
                for (int a = 0; a <= o.deg_; ++a) {
                    for (int b = 0; a + b <= o.deg_; ++b) {
                        if (o.at(a, b).is_zero()) continue;
                        out.at(i + a, j + b) += at(i, j) * o.at(a, b);
                    }
                }
            }
        }
        return out;
    }

    Ternary& operator+=(const Ternary& o) {
        assert(deg_ == o.deg_);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    Ternary scaled(const Rational& s) const {
        Ternary out(deg_);
        for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * s;
        return out;
    }

    Ternary dx() const { return partial(0); }
    Ternary dy() const { return partial(1); }
    Ternary dz() const { return partial(2); }

    Rational eval(const Rational& x, const Rational& y, const Rational& z) const {
        Rational acc(0);
        for (int i = 0; i <= deg_; ++i) {
            for (int j = 0; i + j <= deg_; ++j) {
                if (at(i, j).is_zero()) continue;
                acc += at(i, j) * power(x, i) * power(y, j) * power(z, deg_ - i - j);
            }
        }
        return acc;
    }

    // restriction z = 1, viewed as a polynomial in y with UniPoly-in-x
    // coefficients evaluated at a sample x0
    UniPoly eval_x_as_poly_in_y(const Rational& x0) const {
        std::vector<Rational> coeffs(static_cast<size_t>(deg_) + 1, Rational(0));
        for (int i = 0; i <= deg_; ++i) {
            for (int j = 0; i + j <= deg_; ++j) {
                if (at(i, j).is_zero()) continue;
                coeffs[static_cast<size_t>(j)] += at(i, j) * power(x0, i);
            }
        }
        return UniPoly(std::move(coeffs));
    }

    // restriction y = 1, as a polynomial in z with coefficients evaluated at x0
    UniPoly eval_x_as_poly_in_z(const Rational& x0) const {
        std::vector<Rational> coeffs(static_cast<size_t>(deg_) + 1, Rational(0));
        for (int i = 0; i <= deg_; ++i) {
            for (int j = 0; i + j <= deg_; ++j) {
                if (at(i, j).is_zero()) continue;
                coeffs[static_cast<size_t>(deg_ - i - j)] += at(i, j) * power(x0, i);
            }
        }
        return UniPoly(std::move(coeffs));
    }

    // F(x, 1, 0) as a polynomial in x
    UniPoly on_line_z0() const {
        std::vector<Rational> coeffs(static_cast<size_t>(deg_) + 1, Rational(0));
        for (int i = 0; i <= deg_; ++i) coeffs[static_cast<size_t>(i)] = at(i, deg_ - i);
        return UniPoly(std::move(coeffs));
    }

    Ternary subst(const Matrix3& m) const {
        Ternary lin[3] = {Ternary(1), Ternary(1), Ternary(1)};
        for (int r = 0; r < 3; ++r) {
            lin[r].at(1, 0) = m[static_cast<size_t>(r)][0];
            lin[r].at(0, 1) = m[static_cast<size_t>(r)][1];
            lin[r].at(0, 0) = m[static_cast<size_t>(r)][2];
        }
        Ternary out(deg_);
        for (int i = 0; i <= deg_; ++i) {
            for (int j = 0; i + j <= deg_; ++j) {
                if (at(i, j).is_zero()) continue;
                Ternary term(0);
                term.at(0, 0) = at(i, j);
                for (int n = 0; n < i; ++n) term = term * lin[0];
                for (int n = 0; n < j; ++n) term = term * lin[1];
                for (int n = 0; n < deg_ - i - j; ++n) term = term * lin[2];
                out += term;
            }
        }
        return out;
    }

private:
    static size_t index_count(int deg) {
        return static_cast<size_t>((deg + 1) * (deg + 2) / 2);
    }
    size_t index(int i, int j) const {
        assert(i >= 0 && j >= 0 && i + j <= deg_);
        // row i holds deg - i + 1 entries
        int offset = i * (2 * deg_ + 3 - i) / 2;
        return static_cast<size_t>(offset) + static_cast<size_t>(j);
    }
    static Rational power(const Rational& v, int e) {
        Rational r(1);
        for (int n = 0; n < e; ++n) r *= v;
        return r;
    }

    Ternary partial(int var) const {
        if (deg_ == 0) return Ternary(0);
        Ternary out(deg_ - 1);
        for (int i = 0; i <= deg_; ++i) {
            for (int j = 0; i + j <= deg_; ++j) {
                const int k = deg_ - i - j;
                const Rational& c = at(i, j);
                if (c.is_zero()) continue;
                if (var == 0 && i > 0) out.at(i - 1, j) += Rational(i) * c;
                if (var == 1 && j > 0) out.at(i, j - 1) += Rational(j) * c;
                if (var == 2 && k > 0) out.at(i, j) += Rational(k) * c;
            }
        }
        return out;
    }

    int deg_;
    std::vector<Rational> c_;
};

Ternary to_ternary(const CubicForm& f) {
    static constexpr int kExp[10][2] = {{3, 0}, {2, 1}, {2, 0}, {1, 2}, {1, 1},
                                        {1, 0}, {0, 3}, {0, 2}, {0, 1}, {0, 0}};
    Ternary t(3);
    const auto& c = f.coefficients();
    for (int n = 0; n < 10; ++n) t.at(kExp[n][0], kExp[n][1]) += c[static_cast<size_t>(n)];
    return t;
}

CubicForm from_ternary(const Ternary& t) {
    assert(t.deg() == 3);
    return CubicForm({t.at(3, 0), t.at(2, 1), t.at(2, 0), t.at(1, 2), t.at(1, 1), t.at(1, 0),
                      t.at(0, 3), t.at(0, 2), t.at(0, 1), t.at(0, 0)});
}

Ternary hessian(const Ternary& f) {
    Ternary fx = f.dx(), fy = f.dy(), fz = f.dz();
    Ternary m[3][3] = {{fx.dx(), fx.dy(), fx.dz()},
                       {fy.dx(), fy.dy(), fy.dz()},
                       {fz.dx(), fz.dy(), fz.dz()}};
    Ternary det = m[0][0] * m[1][1] * m[2][2];
    det += m[0][1] * m[1][2] * m[2][0];
    det += m[0][2] * m[1][0] * m[2][1];
    det += (m[0][2] * m[1][1] * m[2][0]).scaled(Rational(-1));
    det += (m[0][1] * m[1][0] * m[2][2]).scaled(Rational(-1));
    det += (m[0][0] * m[1][2] * m[2][1]).scaled(Rational(-1));
    return det;
}

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long small_int() {
        std::uniform_int_distribution<long> dist(-9, 9);
        return dist(rng_);
    }

    ProjPoint point() {
        while (true) {
            ProjPoint p{Rational(small_int()), Rational(small_int()), Rational(small_int())};
            if (!(p.x.is_zero() && p.y.is_zero() && p.z.is_zero())) return p;
        }
    }

    Matrix3 invertible_matrix() {
        while (true) {
            Matrix3 m;
            for (auto& row : m) {
                for (auto& v : row) v = Rational(small_int());
            }
            if (!det3(m).is_zero()) return m;
        }
    }

    static Rational det3(const Matrix3& m) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

private:
    std::mt19937_64 rng_;
};

bool squarefree(const UniPoly& p) {
    return poly_gcd(p, p.derivative()).degree() <= 0;
}

// Res_y of the z = 1 restrictions of two ternary forms, via exact
// interpolation in x. Sound only when both leading y-coefficients are nonzero
// constants (no degree drop at any sample); callers check that first.
UniPoly resultant_in_y(const Ternary& f, const Ternary& g, int point_count) {
    std::vector<std::pair<Rational, Rational>> samples;
    samples.reserve(static_cast<size_t>(point_count));
    for (int n = 0; n < point_count; ++n) {
        Rational x0(n % 2 == 0 ? n / 2 : -(n / 2 + 1));
        samples.emplace_back(x0, resultant(f.eval_x_as_poly_in_y(x0), g.eval_x_as_poly_in_y(x0)));
    }
    return interpolate(samples);
}

constexpr int kMaxFrameAttempts = 32;

}  // namespace

CubicForm::CubicForm(const std::array<Rational, 10>& coeffs) : c_(coeffs) {}

CubicForm CubicForm::default_cubic() {
    // y^2 z - x^3 + x z^2
    return CubicForm({Rational(-1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(1),
                      Rational(0), Rational(1), Rational(0), Rational(0)});
}

CubicForm CubicForm::fermat() {
    return CubicForm({Rational(1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0),
                      Rational(1), Rational(0), Rational(0), Rational(1)});
}

Rational CubicForm::eval(const Rational& x, const Rational& y, const Rational& z) const {
    return to_ternary(*this).eval(x, y, z);
}

CubicForm substitute(const CubicForm& f, const Matrix3& m) {
    return from_ternary(to_ternary(f).subst(m));
}

bool is_smooth(const CubicForm& f, std::uint64_t seed) {
    const Ternary cubic = to_ternary(f);
    Sampler sampler(seed);
    for (int attempt = 0; attempt < kMaxFrameAttempts; ++attempt) {
        Matrix3 m = attempt == 0
                        ? Matrix3{{{Rational(1), Rational(0), Rational(0)},
                                   {Rational(0), Rational(1), Rational(0)},
                                   {Rational(0), Rational(0), Rational(1)}}}
                        : sampler.invertible_matrix();
        Ternary g = cubic.subst(m);
        if (g.at(0, 0).is_zero()) continue;  // projection center [0:0:1] must avoid the curve
        // branch sextic of the projection from [0:0:1]: disc_z(g) restricted
        // to y = 1, by interpolation (leading z-coefficients are the nonzero
        // constants g(0,0,1) and 3 g(0,0,1), so no sample degenerates)
        Ternary gz = g.dz();
        std::vector<std::pair<Rational, Rational>> samples;
        for (int n = 0; n < 17; ++n) {
            Rational x0(n % 2 == 0 ? n / 2 : -(n / 2 + 1));
            samples.emplace_back(x0,
                                 resultant(g.eval_x_as_poly_in_z(x0), gz.eval_x_as_poly_in_z(x0)));
        }
        UniPoly disc = interpolate(samples);
        // a singular point forces a multiple root (or a root at infinity) of
        // the sextic for every center, so this certifies smoothness exactly
        if (disc.degree() == 6 && squarefree(disc)) return true;
    }
    return false;
}

void require_smooth(const CubicForm& f, std::uint64_t seed) {
    if (!is_smooth(f, seed)) throw NonSmoothCubic("the cubic has a singular point");
}

namespace {

// coefficients of F restricted to the pencil line s*p + u*(q0 + t*q1), as
// polynomials in t: returns c[j](t) with F|line = sum c[j] s^{3-j} u^j
std::array<UniPoly, 4> pencil_restriction(const Ternary& f, const ProjPoint& p,
                                          const ProjPoint& q0, const ProjPoint& q1) {
    // binary forms in (s, u) over Q[t], index = power of u
    using BinT = std::vector<UniPoly>;
    auto mul = [](const BinT& a, const BinT& b) {
        BinT out(a.size() + b.size() - 1);
        for (size_t i = 0; i < a.size(); ++i) {
            for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        }
        return out;
    };
    const BinT lin_x{UniPoly::constant(p.x), UniPoly{q0.x, q1.x}};
    const BinT lin_y{UniPoly::constant(p.y), UniPoly{q0.y, q1.y}};
    const BinT lin_z{UniPoly::constant(p.z), UniPoly{q0.z, q1.z}};

    BinT acc(4);
    for (int i = 0; i <= 3; ++i) {
        for (int j = 0; i + j <= 3; ++j) {
            const Rational& c = f.at(i, j);
            if (c.is_zero()) continue;
            BinT term{UniPoly::constant(c)};
            for (int n = 0; n < i; ++n) term = mul(term, lin_x);
            for (int n = 0; n < j; ++n) term = mul(term, lin_y);
            for (int n = 0; n < 3 - i - j; ++n) term = mul(term, lin_z);
            for (size_t k = 0; k < term.size(); ++k) acc[k] += term[k];
        }
    }
    return {acc[0], acc[1], acc[2], acc[3]};
}

UniPoly binary_cubic_disc(const UniPoly& a, const UniPoly& b, const UniPoly& c, const UniPoly& d) {
    return Rational(18) * (a * b * c * d) - Rational(4) * (b * b * b * d) + b * b * c * c -
           Rational(4) * (a * c * c * c) - Rational(27) * (a * a * d * d);
}

}  // namespace

int tangent_count_from_point(const CubicForm& f, const ProjPoint& p, std::uint64_t seed) {
    require_smooth(f, seed);
    if (p.x.is_zero() && p.y.is_zero() && p.z.is_zero()) {
        throw InvalidInput("(0,0,0) is not a projective point");
    }
    const Ternary cubic = to_ternary(f);
    const bool on_curve = f.eval(p).is_zero();
    Sampler sampler(seed ^ 0x74616e67u);
    for (int attempt = 0; attempt < kMaxFrameAttempts; ++attempt) {
        ProjPoint q0 = sampler.point();
        ProjPoint q1 = sampler.point();
        Matrix3 frame{{{p.x, p.y, p.z}, {q0.x, q0.y, q0.z}, {q1.x, q1.y, q1.z}}};
        if (Sampler::det3(frame).is_zero()) continue;
        auto [a, b, c, d] = pencil_restriction(cubic, p, q0, q1);
        if (!on_curve) {
            UniPoly disc = binary_cubic_disc(a, b, c, d);
            // full degree means the frame's t = infinity line carries no
            // tangency, so the affine roots are the whole story
            if (disc.degree() != 6) continue;
            return distinct_root_count(disc);
        }
        // p on the curve: the line always meets E at p; the residual conic is
        // b s^2 + c s u + d u^2
        internal_check(a.is_zero(), "restriction of the cubic should vanish at an on-curve point");
        if (b.is_zero()) continue;
        UniPoly disc = c * c - Rational(4) * (b * d);
        if (disc.degree() != 4) continue;
        // lines with excess contact at p itself (flex tangent at p) satisfy
        // b = c = 0; divide those parameter factors out exactly
        UniPoly excess = poly_gcd(b, c);
        if (excess.degree() >= 1) {
            for (UniPoly g = poly_gcd(disc, excess); g.degree() >= 1; g = poly_gcd(disc, excess)) {
                disc = disc.divmod(g).first;
            }
        }
        if (disc.is_zero()) continue;
        return distinct_root_count(disc);
    }
    throw DegeneratePoint("no usable pencil frame found for the tangency count");
}

int flex_count(const CubicForm& f, std::uint64_t seed) {
    require_smooth(f, seed);
    const Ternary cubic = to_ternary(f);
    Sampler sampler(seed ^ 0x666c6578u);
    for (int attempt = 0; attempt < kMaxFrameAttempts; ++attempt) {
        Matrix3 m = sampler.invertible_matrix();
        Ternary g = cubic.subst(m);
        Ternary h = hessian(g);
        // leading y-coefficients in the z = 1 chart must be nonzero constants
        if (g.at(0, 3).is_zero() || h.at(0, 3).is_zero()) continue;
        // no common zero on the line z = 0
        if (g.eval(Rational(1), Rational(0), Rational(0)).is_zero() &&
            h.eval(Rational(1), Rational(0), Rational(0)).is_zero()) {
            continue;
        }
        UniPoly g_inf = g.on_line_z0();
        UniPoly h_inf = h.on_line_z0();
        if (g_inf.is_zero() || h_inf.is_zero()) continue;
        if (poly_gcd(g_inf, h_inf).degree() >= 1) continue;
        UniPoly res = resultant_in_y(g, h, 19);
        if (res.is_zero()) continue;
        // squarefree means one simple root per common point, so the degree
        // counts the flexes exactly
        if (!squarefree(res)) continue;
        return distinct_root_count(res);
    }
    throw DegeneratePoint("no usable frame found for the flex count");
}

ProjPoint sample_point_off_curve(const CubicForm& f, std::uint64_t seed) {
    Sampler sampler(seed ^ 0x706f696eu);
    for (int attempt = 0; attempt < 256; ++attempt) {
        ProjPoint p = sampler.point();
        if (!f.eval(p).is_zero()) return p;
    }
    throw DegeneratePoint("could not sample a point off the curve");
}

ProjPoint default_on_curve_point() {
    return ProjPoint{Rational(0), Rational(0), Rational(1)};
}

}  // namespace gwcubic
