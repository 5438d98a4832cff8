#include "gwcubic/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <thread>

namespace gwcubic {

namespace {

void extend(std::vector<int>& current, long remaining, int max_part,
            std::vector<ContactSeq>& out) {
    if (remaining == 0) {
        out.push_back(ContactSeq(std::vector<int>(current)));
        return;
    }
    for (int part = std::min<long>(max_part, remaining); part >= 1; --part) {
        if (static_cast<int>(current.size()) < part) current.resize(static_cast<size_t>(part), 0);
        ++current[static_cast<size_t>(part) - 1];
        extend(current, remaining - part, part, out);
        --current[static_cast<size_t>(part) - 1];
        while (!current.empty() && current.back() == 0) current.pop_back();
    }
}

}  // namespace

std::vector<ContactSeq> profiles_of_weight(long w) {
    assert(w >= 0);
    std::vector<ContactSeq> out;
    std::vector<int> current;
    extend(current, w, static_cast<int>(w), out);
    std::sort(out.begin(), out.end(),
              [](const ContactSeq& a, const ContactSeq& b) { return a.str() < b.str(); });
    return out;
}

void compute_all_canonical(InvariantEngine& engine, int max_d, int jobs) {
    assert(max_d >= 1);
    std::vector<InvariantKey> keys;
    for (int d = 1; d <= max_d; ++d) {
        for (const auto& gamma : profiles_of_weight(3L * d)) keys.emplace_back(d, gamma);
    }
    if (jobs <= 1) {
        for (const auto& key : keys) engine.invariant(key.d, ContactSeq{}, key.gamma);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < keys.size(); i = next.fetch_add(1)) {
                engine.invariant(keys[i].d, ContactSeq{}, keys[i].gamma);
            }
        });
    }
    for (auto& w : workers) w.join();
}

std::vector<TableRow> full_table(InvariantEngine& engine, int d, int jobs) {
    assert(d >= 1);
    if (jobs > 1) compute_all_canonical(engine, d, jobs);
    std::vector<TableRow> rows;
    for (const auto& gamma : profiles_of_weight(3L * d)) {
        for (const auto& [alpha, beta] : splits(gamma)) {
            if (beta.size() == 0) continue;
            rows.push_back({alpha, beta, engine.enumerative_count(d, alpha, beta)});
        }
    }
    return rows;
}

}  // namespace gwcubic
