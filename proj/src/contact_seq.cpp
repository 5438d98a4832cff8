#include "gwcubic/contact_seq.hpp"

#include <cassert>
#include <charconv>

#include "gwcubic/errors.hpp"

namespace gwcubic {

void ContactSeq::trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
}

ContactSeq::ContactSeq(std::vector<int> entries) : e_(std::move(entries)) {
    for (int v : e_) {
        if (v < 0) throw InvalidSequence("contact sequence entry is negative");
    }
    trim();
}

ContactSeq ContactSeq::unit(int k) {
    assert(k >= 1);
    ContactSeq s;
    s.e_.assign(static_cast<size_t>(k), 0);
    s.e_[static_cast<size_t>(k) - 1] = 1;
    return s;
}

ContactSeq ContactSeq::parse(std::string_view text) {
    ContactSeq s;
    if (text.empty()) return s;
    size_t pos = 0;
    while (true) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                : comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (tok.empty()) throw InvalidSequence("empty entry in contact sequence");
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0) {
            throw InvalidSequence("malformed contact sequence entry '" + std::string(tok) + "'");
        }
        s.e_.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    s.trim();
    return s;
}

std::string ContactSeq::str() const {
    std::string out;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(e_[i]);
    }
    return out;
}

long ContactSeq::size() const {
    long s = 0;
    for (int v : e_) s += v;
    return s;
}

long ContactSeq::weight() const {
    long s = 0;
    for (size_t i = 0; i < e_.size(); ++i) s += static_cast<long>(i + 1) * e_[i];
    return s;
}

Integer ContactSeq::weighted_power() const {
    Integer r(1);
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i]) r *= pow(Integer(static_cast<long>(i + 1)), e_[i]);
    }
    return r;
}

Integer ContactSeq::factorial() const {
    Integer r(1);
    for (int v : e_) {
        if (v > 1) r *= gwcubic::factorial(v);
    }
    return r;
}

std::vector<std::pair<int, int>> ContactSeq::entries() const {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i]) out.emplace_back(static_cast<int>(i + 1), e_[i]);
    }
    return out;
}

ContactSeq& ContactSeq::operator+=(const ContactSeq& o) {
    if (o.e_.size() > e_.size()) e_.resize(o.e_.size(), 0);
    for (size_t i = 0; i < o.e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

ContactSeq ContactSeq::operator-(const ContactSeq& o) const {
    ContactSeq r = *this;
    if (o.e_.size() > r.e_.size()) throw InvalidSequence("sequence difference has a negative entry");
    for (size_t i = 0; i < o.e_.size(); ++i) {
        r.e_[i] -= o.e_[i];
        if (r.e_[i] < 0) throw InvalidSequence("sequence difference has a negative entry");
    }
    r.trim();
    return r;
}

ContactSeq ContactSeq::plus_unit(int k) const {
    assert(k >= 1);
    ContactSeq r = *this;
    if (static_cast<int>(r.e_.size()) < k) r.e_.resize(static_cast<size_t>(k), 0);
    ++r.e_[static_cast<size_t>(k) - 1];
    return r;
}

ContactSeq ContactSeq::minus_unit(int k) const {
    assert(k >= 1);
    if (at(k) == 0) throw InvalidSequence("removing a contact order that is not present");
    ContactSeq r = *this;
    --r.e_[static_cast<size_t>(k) - 1];
    r.trim();
    return r;
}

Integer seq_binom(const ContactSeq& a, const ContactSeq& sub) {
    if (sub.max_index() > a.max_index()) return Integer(0);
    Integer r(1);
    for (int i = 1; i <= sub.max_index(); ++i) {
        if (sub.at(i) == 0) continue;
        Integer c = binomial(a.at(i), sub.at(i));
        if (c == 0) return Integer(0);
        r *= c;
    }
    return r;
}

std::vector<std::pair<ContactSeq, ContactSeq>> splits(const ContactSeq& a) {
    const int n = a.max_index();
    std::vector<int> cur(static_cast<size_t>(n), 0);
    std::vector<std::pair<ContactSeq, ContactSeq>> out;
    while (true) {
        ContactSeq a1{std::vector<int>(cur)};
        out.emplace_back(a1, a - a1);
        int i = 0;
        while (i < n && cur[static_cast<size_t>(i)] == a.at(i + 1)) {
            cur[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == n) break;
        ++cur[static_cast<size_t>(i)];
    }
    return out;
}

}  // namespace gwcubic
