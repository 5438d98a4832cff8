#pragma once

#include <array>
#include <cstdint>

#include "gwcubic/polynomial.hpp"
#include "gwcubic/rational.hpp"

namespace gwcubic {

inline constexpr std::uint64_t kOracleDefaultSeed = 0x67776375u;

struct ProjPoint {
    Rational x, y, z;
    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

// Ternary cubic form F(x,y,z); the fixed curve E the counts are relative to.
class CubicForm {
public:
    // coefficient order:
    //   x^3, x^2 y, x^2 z, x y^2, x y z, x z^2, y^3, y^2 z, y z^2, z^3
    explicit CubicForm(const std::array<Rational, 10>& coeffs);

    // y^2 z = x^3 - x z^2, the oracle's default smooth Weierstrass cubic.
    static CubicForm default_cubic();
    static CubicForm fermat();

    Rational eval(const Rational& x, const Rational& y, const Rational& z) const;
    Rational eval(const ProjPoint& p) const { return eval(p.x, p.y, p.z); }
    const std::array<Rational, 10>& coefficients() const { return c_; }

private:
    std::array<Rational, 10> c_;
};

// F composed with the linear substitution (x,y,z) -> m * (x,y,z)^T.
CubicForm substitute(const CubicForm& f, const Matrix3& m);

// Certifies smoothness: for a seeded random frame with center off the curve,
// the projection discriminant is a squarefree binary sextic iff the curve has
// no singular point. Throws NonSmoothCubic when no frame certifies.
void require_smooth(const CubicForm& f, std::uint64_t seed = kOracleDefaultSeed);
bool is_smooth(const CubicForm& f, std::uint64_t seed = kOracleDefaultSeed);

// Number of lines through p tangent to the cubic somewhere else than p; for p
// off the curve this is the dual-curve degree (6), for a general point on the
// curve the classical 4. Lines meeting p with excess contact are excluded by
// dividing their parameter factors out of the discriminant exactly. Throws
// NonSmoothCubic, or DegeneratePoint when no sampled pencil frame is usable.
int tangent_count_from_point(const CubicForm& f, const ProjPoint& p,
                             std::uint64_t seed = kOracleDefaultSeed);

// Number of distinct common zeros of F and its Hessian: the flexes (9 for
// every smooth cubic, but computed, not assumed).
int flex_count(const CubicForm& f, std::uint64_t seed = kOracleDefaultSeed);

// Seeded integer point with F(p) != 0, for the generic tangent count.
ProjPoint sample_point_off_curve(const CubicForm& f, std::uint64_t seed = kOracleDefaultSeed);

// A non-flex rational point of the default cubic.
ProjPoint default_on_curve_point();

}  // namespace gwcubic
