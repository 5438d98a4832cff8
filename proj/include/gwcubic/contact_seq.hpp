#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gwcubic/rational.hpp"

namespace gwcubic {

// Finite-support sequence of nonnegative integers indexed from 1: the
// contact profiles alpha, beta, gamma. Stored with no trailing zeros, so two
// sequences are equal iff their stored entries are identical. Index 0 (the
// untwisted markings) never enters this type: the point conditions are |beta|-1
// implicitly.
class ContactSeq {
public:
    ContactSeq() = default;
    // Canonicalizes (trims trailing zeros). Throws InvalidSequence on a
    // negative entry.
    explicit ContactSeq(std::vector<int> entries);

    // e_k, the sequence with a single 1 in position k. Precondition: k >= 1.
    static ContactSeq unit(int k);

    // Textual form "c1,c2,...,cn"; the empty string is the zero sequence.
    // Throws InvalidSequence on anything malformed.
    static ContactSeq parse(std::string_view text);
    std::string str() const;

    // Multiplicity at index i (1-based); 0 beyond the stored range.
    int at(int i) const {
        return (i >= 1 && i <= static_cast<int>(e_.size())) ? e_[i - 1] : 0;
    }
    int max_index() const { return static_cast<int>(e_.size()); }
    bool is_zero() const { return e_.empty(); }

    // |a| = sum of entries: the number of contact points.
    long size() const;
    // Ia = sum of i * a_i: the total contact order.
    long weight() const;
    // I^a = prod of i^{a_i}.
    Integer weighted_power() const;
    // a! = prod of (a_i!).
    Integer factorial() const;

    // Nonzero positions as (index, multiplicity), increasing index.
    std::vector<std::pair<int, int>> entries() const;

    ContactSeq& operator+=(const ContactSeq& o);
    friend ContactSeq operator+(ContactSeq a, const ContactSeq& b) { return a += b; }
    // Componentwise difference; throws InvalidSequence if any entry would go
    // negative.
    ContactSeq operator-(const ContactSeq& o) const;

    ContactSeq plus_unit(int k) const;
    ContactSeq minus_unit(int k) const;  // throws InvalidSequence if a_k = 0

    friend bool operator==(const ContactSeq&, const ContactSeq&) = default;
    friend auto operator<=>(const ContactSeq& a, const ContactSeq& b) {
        return a.e_ <=> b.e_;
    }

private:
    std::vector<int> e_;  // e_[i-1] = multiplicity of contact order i
    void trim();
};

// prod of C(a_i, sub_i); zero unless sub <= a componentwise.
Integer seq_binom(const ContactSeq& a, const ContactSeq& sub);

// Every ordered pair (a1, a2) with a1 + a2 = a, each exactly once, in odometer
// order over positions with position 1 fastest (a1 counts up from zero). The
// pair count is prod of (a_i + 1).
std::vector<std::pair<ContactSeq, ContactSeq>> splits(const ContactSeq& a);

}  // namespace gwcubic
