#pragma once

#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gwcubic/contact_seq.hpp"
#include "gwcubic/rational.hpp"

namespace gwcubic {

// Canonical identifier of the invariant I_d(0, gamma); the memoization unit.
// Every ordinary invariant reduces to one of these.
struct InvariantKey {
    int d;
    ContactSeq gamma;

    InvariantKey(int d_, ContactSeq gamma_);  // asserts weight(gamma) = 3d, gamma nonzero

    friend bool operator==(const InvariantKey&, const InvariantKey&) = default;
    friend auto operator<=>(const InvariantKey& a, const InvariantKey& b) {
        if (auto c = a.d <=> b.d; c != 0) return c;
        return a.gamma <=> b.gamma;
    }
};

// Insert-once map InvariantKey -> Rational with a textual persistence format:
//
//   GWCUBIC-CACHE v1
//   d=<int> gamma=<seq> I=<num>/<den>
//
// entries sorted by (d ascending, gamma textual form lexicographic), the
// denominator printed even when 1. save followed by load reproduces the map
// exactly; equal tables save to byte-identical files.
class MemoTable {
public:
    MemoTable() = default;
    MemoTable(const MemoTable&) = delete;
    MemoTable& operator=(const MemoTable&) = delete;

    std::optional<Rational> find(const InvariantKey& key) const;
    // Keeps the first value; a later insert with a different value for the
    // same key is an internal failure.
    const Rational insert_once(const InvariantKey& key, const Rational& value);
    std::size_t size() const;
    void clear();

    // Entries sorted the way the file format requires.
    std::vector<std::pair<InvariantKey, Rational>> sorted_entries() const;

    void save(std::ostream& out) const;
    // Merges the file into the table. Throws BadCacheVersion on an unknown
    // header, BadCacheLine (with the line number) on anything malformed,
    // including values that are not stored-normalized, keys violating the
    // weight(gamma) = 3d invariant, and duplicate or conflicting keys.
    void load(std::istream& in);

    void save_file(const std::string& path) const;
    void load_file(const std::string& path);

private:
    mutable std::mutex mu_;
    std::map<InvariantKey, Rational> m_;
};

}  // namespace gwcubic
