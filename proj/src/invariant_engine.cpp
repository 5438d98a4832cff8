#include "gwcubic/invariant_engine.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "gwcubic/errors.hpp"
#include "gwcubic/kontsevich.hpp"

namespace gwcubic {

long InvariantEngine::dimension_defect(int d, const ContactSeq& alpha, const ContactSeq& beta) {
    return alpha.weight() + beta.weight() - 3L * d;
}

std::pair<InvariantKey, Rational> InvariantEngine::normalize_to_canonical(int d,
                                                                          const ContactSeq& alpha,
                                                                          const ContactSeq& beta) {
    assert(dimension_defect(d, alpha, beta) == 0);
    assert(beta.size() >= 1);
    ContactSeq gamma = alpha + beta;
    Integer num = beta.weighted_power() * Integer(beta.weight()) * factorial(beta.size() - 1);
    Integer den = gamma.weighted_power() * Integer(gamma.weight()) * factorial(gamma.size() - 1);
    return {InvariantKey(d, std::move(gamma)), Rational(num, den)};
}

int InvariantEngine::pivot_select(const ContactSeq& gamma) {
    int m = gamma.max_index();
    assert(m >= 2 && "pivot_select called on the base-case profile");
    return m;
}

Rational InvariantEngine::invariant(int d, const ContactSeq& alpha, const ContactSeq& beta) {
    assert(d >= 1);
    if (dimension_defect(d, alpha, beta) != 0 || beta.size() == 0) return Rational(0);
    auto [key, factor] = normalize_to_canonical(d, alpha, beta);
    return factor * canonical_value(key);
}

Rational InvariantEngine::canonical_value(const InvariantKey& key) {
    if (auto hit = table_.find(key)) return *hit;
    Rational value;
    if (key.gamma.max_index() == 1) {
        // gamma = 3d e_1: I_d(0, 3d e_1) = (3d)! K_d
        value = Rational(key.gamma.factorial() * kontsevich_number(key.d));
    } else {
        const int m = pivot_select(key.gamma);
        value = wdvv_expand(key.d, ContactSeq{}, key.gamma.minus_unit(m), m - 1);
    }
    return table_.insert_once(key, value);
}

Rational InvariantEngine::wdvv_expand_at_pivot(int d, const ContactSeq& gamma, int pivot) {
    assert(pivot >= 2 && gamma.at(pivot) > 0);
    return wdvv_expand(d, ContactSeq{}, gamma.minus_unit(pivot), pivot - 1);
}

Rational InvariantEngine::factor_checked(int d, const ContactSeq& alpha, const ContactSeq& beta) {
    if (dimension_defect(d, alpha, beta) != 0) return Rational(0);
    internal_check(beta.size() >= 1,
                   "WDVV term: nonzero coefficient on an invariant with no unassigned contact");
    return invariant(d, alpha, beta);
}

Rational InvariantEngine::large_checked(int d, const ContactSeq& alpha, const ContactSeq& beta,
                                        LargeContact large) {
    internal_check(alpha.weight() + beta.weight() == 3L * d + large.ell,
                   "WDVV term: large-contact factor with inconsistent weight");
    internal_check(beta.size() >= (large.slot == Slot::assigned ? 2 : 1),
                   "WDVV term: nonzero coefficient on an undefined large-contact invariant");
    return large_invariant(d, alpha, beta, large);
}

// The WDVV relation with insertion classes (f_k, f_1, h, h), solved for
// I_d(alpha, beta + e_{k+1}). Bare sums run over d1+d2=d with 0<d1<d and over
// all splits of alpha and beta. The four degree-0-component sums carry a
// contact e_ell on one side and its complement e_{r-ell} on the other; the
// dimension defect
//     delta = 3 d1 - (ordinary insertions on the d1 factor)
// picks the unique ell that survives: delta >= 1 puts the large contact on
// the d2 factor with ell = delta, delta <= -1 puts it on the d1 factor with
// ell = -delta and hands the d2 factor the ordinary entry e_{-delta}, and
// delta = 0 is already accounted for by the ordinary product sums.
Rational InvariantEngine::wdvv_expand(int d, const ContactSeq& alpha, const ContactSeq& beta,
                                      int k) {
    assert(d >= 1);
    assert(1 <= k && k <= 3 * d - 1);
    assert(alpha.weight() + beta.weight() + k + 1 == 3L * d);

    const ContactSeq e1 = ContactSeq::unit(1);
    const ContactSeq ek = ContactSeq::unit(k);

    Rational total = Rational(3L * d) * (invariant(d, alpha + e1, beta + ek) +
                                         invariant(d, alpha + ek, beta + e1)) -
                     invariant(d, alpha, beta + e1 + ek);

    const long nb = beta.size();
    const auto alpha_splits = splits(alpha);
    const auto beta_splits = splits(beta);

    for (int d1 = 1; d1 < d; ++d1) {
        const int d2 = d - d1;
        const Integer dd1(d1), dd2(d2);
        for (const auto& [a1, a2] : alpha_splits) {
            const Integer ca = seq_binom(alpha, a1);
            for (const auto& [b1, b2] : beta_splits) {
                const Integer cab = ca * seq_binom(beta, b1);
                const long nb1 = b1.size();
                const long nb2 = b2.size();

                // ordinary products
                if (Integer c = cab * binomial(nb, nb1) * dd1 * dd1 * dd2 * dd2; c != 0) {
                    total += Rational(c) * factor_checked(d1, a1, b1 + e1) *
                             factor_checked(d2, a2, b2 + ek);
                }
                if (Integer c = cab * binomial(nb, nb1 + 1) * dd1 * dd2 * dd2 * dd2; c != 0) {
                    total -= Rational(c) * factor_checked(d1, a1, b1 + e1 + ek) *
                             factor_checked(d2, a2, b2);
                }

                // degree-0-component sums; dA for the pair carrying e_1 on
                // the d1 factor, dB when it carries e_1 and e_k
                const int dA = static_cast<int>(3L * d1 - (a1.weight() + b1.weight() + 1));
                const int dB = dA - k;

                // e_ell beside alpha^1 / complement beside beta^2 + e_k
                if (dA >= 1) {
                    if (Integer c = cab * binomial(nb, nb1) * dd1 * dd2; c != 0) {
                        total += Rational(c) * factor_checked(d1, a1.plus_unit(dA), b1 + e1) *
                                 large_checked(d2, a2, b2 + ek, {dA, Slot::unassigned});
                    }
                } else if (dA <= -1) {
                    if (Integer c = cab * binomial(nb, nb2 + 1) * dd1 * dd2; c != 0) {
                        total += Rational(c) * large_checked(d1, a1, b1 + e1, {-dA, Slot::assigned}) *
                                 factor_checked(d2, a2, (b2 + ek).plus_unit(-dA));
                    }
                }

                // e_ell beside beta^1 + e_1 / complement beside alpha^2
                if (dA >= 1) {
                    if (Integer c = cab * binomial(nb, nb1 + 1) * dd1 * dd2; c != 0) {
                        total += Rational(c) * factor_checked(d1, a1, (b1 + e1).plus_unit(dA)) *
                                 large_checked(d2, a2, b2 + ek, {dA, Slot::assigned});
                    }
                } else if (dA <= -1) {
                    if (Integer c = cab * binomial(nb, nb2) * dd1 * dd2; c != 0) {
                        total += Rational(c) *
                                 large_checked(d1, a1, b1 + e1, {-dA, Slot::unassigned}) *
                                 factor_checked(d2, a2.plus_unit(-dA), b2 + ek);
                    }
                }

                // e_ell beside alpha^1, with e_1 and e_k both on the d1 factor
                if (dB >= 1) {
                    if (Integer c = cab * binomial(nb, nb1 + 1) * dd2 * dd2; c != 0) {
                        total -= Rational(c) * factor_checked(d1, a1.plus_unit(dB), b1 + e1 + ek) *
                                 large_checked(d2, a2, b2, {dB, Slot::unassigned});
                    }
                } else if (dB <= -1) {
                    if (Integer c = cab * binomial(nb, nb2) * dd2 * dd2; c != 0) {
                        total -= Rational(c) *
                                 large_checked(d1, a1, b1 + e1 + ek, {-dB, Slot::assigned}) *
                                 factor_checked(d2, a2, b2.plus_unit(-dB));
                    }
                }

                // e_ell beside beta^1 + e_1 + e_k / complement beside alpha^2
                if (dB >= 1) {
                    if (Integer c = cab * binomial(nb, nb1 + 2) * dd2 * dd2; c != 0) {
                        total -= Rational(c) * factor_checked(d1, a1, (b1 + e1 + ek).plus_unit(dB)) *
                                 large_checked(d2, a2, b2, {dB, Slot::assigned});
                    }
                } else if (dB <= -1) {
                    if (Integer c = cab * binomial(nb, nb2 - 1) * dd2 * dd2; c != 0) {
                        total -= Rational(c) *
                                 large_checked(d1, a1, b1 + e1 + ek, {-dB, Slot::unassigned}) *
                                 factor_checked(d2, a2.plus_unit(-dB), b2);
                    }
                }
            }
        }
    }
    return total / Rational(Integer(d) * Integer(d));
}

Rational InvariantEngine::large_invariant(int d, const ContactSeq& alpha, const ContactSeq& beta,
                                          LargeContact large) {
    assert(large.ell >= 1);
    assert(alpha.weight() + beta.weight() == 3L * d + large.ell);
    const long ell = large.ell;
    Rational total(0);
    if (large.slot == Slot::assigned) {
        for (auto [k, mult] : beta.entries()) {
            if (k <= ell) continue;
            total += Rational(Integer((k - ell) * static_cast<long>(mult))) *
                     invariant(d, alpha.plus_unit(static_cast<int>(k - ell)), beta.minus_unit(k));
        }
    } else {
        for (auto [k, mult] : beta.entries()) {
            if (k <= ell) continue;
            total += Rational(Integer((k - ell) * static_cast<long>(mult))) *
                     invariant(d, alpha, beta.plus_unit(static_cast<int>(k - ell)).minus_unit(k));
        }
        for (auto [k, mult] : alpha.entries()) {
            if (k <= ell) continue;
            total += Rational(Integer((k - ell) * static_cast<long>(mult))) *
                     invariant(d, alpha.plus_unit(static_cast<int>(k - ell)).minus_unit(k), beta);
        }
    }
    return total;
}

namespace {

std::vector<long> divisors_of(long n) {
    std::vector<long> out;
    for (long s = 1; s * s <= n; ++s) {
        if (n % s) continue;
        out.push_back(s);
        if (s != n / s) out.push_back(n / s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

CountResult InvariantEngine::enumerative_count(int d, const ContactSeq& alpha,
                                               const ContactSeq& beta) {
    if (d < 1) throw InvalidInput("enumerative_count requires d >= 1");
    if (dimension_defect(d, alpha, beta) != 0) {
        throw InvalidInput("contact orders must satisfy weight(alpha) + weight(beta) = 3d");
    }
    if (beta.size() == 0) throw InvalidInput("at least one unassigned contact is required");

    CountResult result;
    result.i_value = invariant(d, alpha, beta);
    const long contacts = alpha.size() + beta.size();

    if (contacts >= 3) {
        result.n_value = result.i_value / Rational(beta.factorial());
        result.enumerative = true;
    } else if (contacts == 2) {
        // invert the multiple-cover corrections over divisors s of gcd(d,k,l)
        if (alpha.size() == 1) {
            const int k = alpha.entries().front().first;
            const int l = beta.entries().front().first;
            Rational n = result.i_value;
            for (long s : divisors_of(std::gcd(std::gcd<long>(d, k), static_cast<long>(l)))) {
                if (s == 1) continue;
                CountResult sub = enumerative_count(static_cast<int>(d / s),
                                                    ContactSeq::unit(static_cast<int>(k / s)),
                                                    ContactSeq::unit(static_cast<int>(l / s)));
                n -= Rational(1, s) * *sub.n_value;
            }
            result.n_value = n;
            result.enumerative = true;
        } else {
            auto es = beta.entries();
            const int k = es.front().first;
            const int l = es.back().first;  // equals k when beta = 2 e_k
            Rational n = result.i_value / Rational(beta.factorial());
            for (long s : divisors_of(std::gcd(std::gcd<long>(d, k), static_cast<long>(l)))) {
                if (s == 1) continue;
                ContactSeq sub_beta = ContactSeq::unit(static_cast<int>(k / s))
                                          .plus_unit(static_cast<int>(l / s));
                CountResult sub = enumerative_count(static_cast<int>(d / s), ContactSeq{}, sub_beta);
                n -= *sub.n_value;
            }
            result.n_value = n;
            result.enumerative = true;
        }
    } else {
        // (alpha, beta) = (0, e_{3d}): the one profile the theory leaves open
        result.enumerative = false;
    }
    return result;
}

Rational InvariantEngine::m_value(int d, const ContactSeq& gamma) {
    if (d < 1 || gamma.weight() != 3L * d) {
        throw InvalidInput("m_value requires weight(gamma) = 3d");
    }
    if (gamma.size() <= 1) {
        throw InvalidInput("m_value requires at least two contacts (N_d(0, e_{3d}) is unknown)");
    }
    Rational n = *enumerative_count(d, ContactSeq{}, gamma).n_value;
    Integer den = gamma.weighted_power() * Integer(gamma.weight()) * factorial(gamma.size() - 1);
    return n * Rational(gamma.factorial(), den);
}

bool InvariantEngine::ch_recursion_check(int d, const ContactSeq& alpha, const ContactSeq& beta) {
    assert(beta.size() > 1);
    Rational lhs = *enumerative_count(d, alpha, beta).n_value;
    Rational rhs(0);
    for (auto [k, mult] : beta.entries()) {
        (void)mult;
        rhs += Rational(static_cast<long>(k)) *
               *enumerative_count(d, alpha.plus_unit(k), beta.minus_unit(k)).n_value;
    }
    return lhs == rhs;
}

}  // namespace gwcubic
