#include "gwcubic/memo_table.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <fstream>
#include <sstream>

#include "gwcubic/errors.hpp"

namespace gwcubic {

namespace {
constexpr const char* kHeader = "GWCUBIC-CACHE v1";
}

InvariantKey::InvariantKey(int d_, ContactSeq gamma_) : d(d_), gamma(std::move(gamma_)) {
    assert(d >= 1);
    assert(!gamma.is_zero());
    assert(gamma.weight() == 3L * d);
}

std::optional<Rational> MemoTable::find(const InvariantKey& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = m_.find(key);
    if (it == m_.end()) return std::nullopt;
    return it->second;
}

const Rational MemoTable::insert_once(const InvariantKey& key, const Rational& value) {
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = m_.emplace(key, value);
    if (!inserted) {
        internal_check(it->second == value, "memo insert-once got a conflicting value for a key");
    }
    return it->second;
}

std::size_t MemoTable::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return m_.size();
}

void MemoTable::clear() {
    std::lock_guard<std::mutex> lock(mu_);
    m_.clear();
}

std::vector<std::pair<InvariantKey, Rational>> MemoTable::sorted_entries() const {
    std::vector<std::pair<InvariantKey, Rational>> out;
    {
        std::lock_guard<std::mutex> lock(mu_);
        out.reserve(m_.size());
        for (const auto& [k, v] : m_) out.emplace_back(k, v);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.d != b.first.d) return a.first.d < b.first.d;
        return a.first.gamma.str() < b.first.gamma.str();
    });
    return out;
}

void MemoTable::save(std::ostream& out) const {
    out << kHeader << '\n';
    for (const auto& [key, value] : sorted_entries()) {
        out << "d=" << key.d << " gamma=" << key.gamma.str() << " I=" << value.str_full() << '\n';
    }
}

namespace {

// "name=value" split for one space-separated field.
std::string_view expect_field(std::string_view& rest, std::string_view name, int line_no) {
    size_t space = rest.find(' ');
    std::string_view field = rest.substr(0, space);
    rest = (space == std::string_view::npos) ? std::string_view{} : rest.substr(space + 1);
    if (field.size() < name.size() + 1 || field.substr(0, name.size()) != name ||
        field[name.size()] != '=') {
        throw BadCacheLine(line_no, "expected '" + std::string(name) + "=...'");
    }
    return field.substr(name.size() + 1);
}

}  // namespace

void MemoTable::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kHeader) {
        throw BadCacheVersion("unrecognized cache header");
    }
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view rest = line;
        std::string_view d_text = expect_field(rest, "d", line_no);
        std::string_view gamma_text = expect_field(rest, "gamma", line_no);
        std::string_view value_text = expect_field(rest, "I", line_no);
        if (!rest.empty()) throw BadCacheLine(line_no, "trailing content");

        int d = 0;
        auto [ptr, ec] = std::from_chars(d_text.data(), d_text.data() + d_text.size(), d);
        if (ec != std::errc{} || ptr != d_text.data() + d_text.size() || d < 1) {
            throw BadCacheLine(line_no, "bad degree");
        }
        ContactSeq gamma;
        try {
            gamma = ContactSeq::parse(gamma_text);
        } catch (const InvalidSequence& e) {
            throw BadCacheLine(line_no, e.what());
        }
        if (gamma.is_zero() || gamma.weight() != 3L * d) {
            throw BadCacheLine(line_no, "gamma does not satisfy weight(gamma) = 3d");
        }
        if (value_text.find('/') == std::string_view::npos) {
            throw BadCacheLine(line_no, "value must be printed as num/den");
        }
        auto value = Rational::parse(value_text);
        if (!value) throw BadCacheLine(line_no, "bad rational value");

        InvariantKey key(d, std::move(gamma));
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = m_.emplace(std::move(key), *value);
        if (!inserted && !(it->second == *value)) {
            throw BadCacheLine(line_no, "conflicting value for an already-loaded key");
        }
    }
}

void MemoTable::save_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot open cache file for writing: " + path);
    save(out);
    out.flush();
    if (!out) throw InvalidInput("failed writing cache file: " + path);
}

void MemoTable::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open cache file: " + path);
    load(in);
}

}  // namespace gwcubic
