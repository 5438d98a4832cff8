#pragma once

#include <optional>
#include <utility>

#include "gwcubic/contact_seq.hpp"
#include "gwcubic/memo_table.hpp"
#include "gwcubic/rational.hpp"

namespace gwcubic {

// Whether a contact sits among the assigned contacts (alpha, pinned to a
// prescribed point of the cubic) or the unassigned ones (beta).
enum class Slot { assigned, unassigned };

// A contact of type r - ell forced onto a degree-0 component. r itself is
// never instantiated: with r large the dimension bookkeeping pins ell
// uniquely, and the printed r prefactors cancel against the elimination
// identity, so (ell, slot) is all that survives.
struct LargeContact {
    long ell;
    Slot slot;
};

// Result of asking for the enumerative count N_d(alpha,beta). For the one
// excluded profile (alpha,beta) = (0, e_{3d}) the count is unknown and
// n_value is unset, but the invariant i_value is still reported.
struct CountResult {
    Rational i_value;
    std::optional<Rational> n_value;
    bool enumerative = false;
};

// Computes the twisted invariants I_d(alpha,beta) and the counts
// N_d(alpha,beta) by the recursion pipeline: canonicalize to I_d(0,gamma),
// expand by WDVV at a pivot contact, eliminate large contacts symbolically,
// and bottom out in (3d)! K_d. All values exact rationals, memoized per
// canonical key. Safe to drive from several threads; duplicate computation of
// a key is benign because every path is deterministic.
class InvariantEngine {
public:
    InvariantEngine() = default;

    MemoTable& table() { return table_; }
    const MemoTable& table() const { return table_; }

    // weight(alpha) + weight(beta) - 3d; the ordinary invariant exists only
    // at defect 0.
    static long dimension_defect(int d, const ContactSeq& alpha, const ContactSeq& beta);

    // I_d(alpha,beta). Total: returns 0 whenever the invariant is undefined
    // (defect != 0 or no unassigned contact), never throws.
    Rational invariant(int d, const ContactSeq& alpha, const ContactSeq& beta);

    // The canonical reduction I_d(alpha,beta) = factor * I_d(0, alpha+beta),
    //   factor = [I^beta Ibeta (|beta|-1)!] / [I^gamma Igamma (|gamma|-1)!].
    // Preconditions: defect 0 and |beta| >= 1.
    static std::pair<InvariantKey, Rational> normalize_to_canonical(int d, const ContactSeq& alpha,
                                                                    const ContactSeq& beta);

    // Largest index m >= 2 with gamma_m > 0. Precondition: gamma is not
    // concentrated at index 1 (that is the recursion base case).
    static int pivot_select(const ContactSeq& gamma);

    // The WDVV relation solved for its highest-contact invariant: returns
    // I_d(alpha, beta + e_{k+1}). Preconditions: 1 <= k <= 3d-1 and
    // weight(alpha) + weight(beta) + k + 1 = 3d.
    Rational wdvv_expand(int d, const ContactSeq& alpha, const ContactSeq& beta, int k);

    // Convenience for the pivot-independence checks: the expansion of
    // I_d(0, gamma) at a chosen pivot index m (gamma_m > 0, m >= 2).
    Rational wdvv_expand_at_pivot(int d, const ContactSeq& gamma, int pivot);

    // Large-contact elimination, already divided by the printed r prefactor:
    //   slot = assigned   handles I_d(alpha + e_{r-ell}, beta),
    //   slot = unassigned handles I_d(alpha, beta + e_{r-ell}).
    // Sums over all present entries with index > ell (the natural extension
    // of the printed range). Precondition: weight(alpha) + weight(beta) =
    // 3d + ell.
    Rational large_invariant(int d, const ContactSeq& alpha, const ContactSeq& beta,
                             LargeContact large);

    // N_d(alpha,beta) together with I_d(alpha,beta). With three or more
    // contacts N = I / beta!; with exactly two the multiple-cover corrections
    // are inverted recursively over divisors; (0, e_{3d}) is reported
    // non-enumerative. Throws InvalidInput when defect != 0 or |beta| = 0.
    CountResult enumerative_count(int d, const ContactSeq& alpha, const ContactSeq& beta);

    // The split-independent normalized count, as the derived ratio
    //   M_d(gamma) = N_d(0,gamma) gamma! / (I^gamma Igamma (|gamma|-1)!).
    // Throws InvalidInput unless weight(gamma) = 3d and |gamma| >= 2.
    Rational m_value(int d, const ContactSeq& gamma);

    // Checks N_d(alpha,beta) = sum over k with beta_k > 0 of
    // k N_d(alpha+e_k, beta-e_k) exactly. Precondition: |beta| > 1. The
    // identity is a theorem, so false means a bug.
    bool ch_recursion_check(int d, const ContactSeq& alpha, const ContactSeq& beta);

private:
    Rational canonical_value(const InvariantKey& key);
    // Ordinary invariant factor inside a WDVV term whose combinatorial
    // coefficient is already known to be nonzero. Defect != 0 vanishes for
    // dimension reasons; a missing unassigned contact would mean a nonzero
    // coefficient on an undefined bracket, which the recursion's coefficient
    // structure is supposed to make impossible, so that aborts loudly.
    Rational factor_checked(int d, const ContactSeq& alpha, const ContactSeq& beta);
    Rational large_checked(int d, const ContactSeq& alpha, const ContactSeq& beta,
                           LargeContact large);

    MemoTable table_;
};

}  // namespace gwcubic
