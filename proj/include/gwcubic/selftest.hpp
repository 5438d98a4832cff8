#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gwcubic/invariant_engine.hpp"

namespace gwcubic {

struct SelfTestItem {
    std::string name;
    bool pass = false;
    long checked = 0;      // instances examined
    std::string detail;    // first failing instance when pass is false
};

struct SelfTestReport {
    std::vector<SelfTestItem> items;
    bool all_pass() const;
};

// The consistency suites behind `gwcubic selftest`: pivot independence, the
// contact-order recursion identity, split consistency of the normalized
// ratio, integrality and nonnegativity of every enumerative count, the
// general-profile WDVV cross-check (capped at degree 2), and agreement with
// the degree-1 geometric oracle. seed drives the oracle's frame sampling.
SelfTestReport run_selftests(InvariantEngine& engine, int max_d, std::uint64_t seed, int jobs = 1);

// Individual suites, also used by the acceptance tests. Each returns a
// filled SelfTestItem.
SelfTestItem check_pivot_independence(InvariantEngine& engine, int max_d);
SelfTestItem check_ch_identity(InvariantEngine& engine, int max_d);
SelfTestItem check_split_consistency(InvariantEngine& engine, int max_d);
SelfTestItem check_integrality(InvariantEngine& engine, int max_d);
SelfTestItem check_general_wdvv(InvariantEngine& engine, int max_d);
SelfTestItem check_oracle_agreement(InvariantEngine& engine, std::uint64_t seed);

}  // namespace gwcubic
