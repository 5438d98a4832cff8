#pragma once

#include <vector>

#include "gwcubic/contact_seq.hpp"
#include "gwcubic/invariant_engine.hpp"

namespace gwcubic {

// Every ContactSeq gamma with weight(gamma) = w (the partitions of w),
// sorted by the textual form of gamma, matching the cache and table order.
std::vector<ContactSeq> profiles_of_weight(long w);

struct TableRow {
    ContactSeq alpha;
    ContactSeq beta;
    CountResult result;
};

// Every (alpha, beta) with weight(alpha) + weight(beta) = 3d and |beta| >= 1,
// ordered by (gamma textual form lexicographic, then split enumeration
// order). jobs > 1 precomputes the canonical values for the degree in
// parallel; the rows themselves are always assembled deterministically.
std::vector<TableRow> full_table(InvariantEngine& engine, int d, int jobs = 1);

// Computes (and memoizes) I_d(0, gamma) for every profile with d' <= d,
// optionally across threads. Used by the table, the self-tests and the cache
// round-trip.
void compute_all_canonical(InvariantEngine& engine, int max_d, int jobs = 1);

}  // namespace gwcubic
