#include <doctest.h>

#include <set>

#include "gwcubic/contact_seq.hpp"
#include "gwcubic/errors.hpp"

using namespace gwcubic;

namespace {
const ContactSeq kZero{};
ContactSeq seq(std::vector<int> v) { return ContactSeq(std::move(v)); }
}  // namespace

TEST_CASE("size, weight, weighted power, factorial") {
    ContactSeq a = seq({2, 0, 1});  // 2e1 + e3
    CHECK(a.size() == 3);
    CHECK(a.weight() == 5);
    CHECK(a.factorial() == 2);

    CHECK(kZero.size() == 0);
    CHECK(kZero.weight() == 0);
    CHECK(kZero.weighted_power() == 1);
    CHECK(kZero.factorial() == 1);

    ContactSeq b = seq({0, 3});  // 3e2
    CHECK(b.size() == 3);
    CHECK(b.weight() == 6);

    CHECK(seq({0, 1, 2}).weighted_power() == 18);  // e2 + 2e3 -> 2 * 3^2
    CHECK(seq({3}).weighted_power() == 1);
    CHECK(seq({3}).factorial() == 6);
}

TEST_CASE("unit") {
    CHECK(ContactSeq::unit(1) == seq({1}));
    CHECK(ContactSeq::unit(4) == seq({0, 0, 0, 1}));
    CHECK(ContactSeq::unit(7).weight() == 7);
}

TEST_CASE("canonicalization idempotence") {
    CHECK(seq({1, 2, 0, 0}) == seq({1, 2}));
    CHECK(seq({0, 0}) == kZero);
    CHECK(seq({1, 2, 0, 0}).str() == "1,2");
    CHECK_THROWS_AS(seq({1, -1}), InvalidSequence);
}

TEST_CASE("add and sub") {
    ContactSeq e1 = ContactSeq::unit(1), e2 = ContactSeq::unit(2);
    CHECK(e1 + e2 == seq({1, 1}));
    CHECK((e1 + e2) - e2 == e1);
    CHECK_THROWS_AS(e1 - e2, InvalidSequence);
    CHECK(seq({0, 1}).minus_unit(2) == kZero);
    CHECK_THROWS_AS(kZero.minus_unit(1), InvalidSequence);

    // add/sub inverse on a small grid
    for (int a1 = 0; a1 <= 2; ++a1) {
        for (int b2 = 0; b2 <= 2; ++b2) {
            ContactSeq a = seq({a1, 1});
            ContactSeq b = seq({1, b2});
            CHECK((a + b) - b == a);
        }
    }
}

TEST_CASE("seq_binom") {
    CHECK(seq_binom(seq({2, 1}), seq({1})) == 2);
    CHECK(seq_binom(seq({2, 1}), kZero) == 1);
    CHECK(seq_binom(ContactSeq::unit(1), ContactSeq::unit(2)) == 0);
    CHECK(seq_binom(seq({3, 2}), seq({2, 1})) == 6);
}

TEST_CASE("splits: completeness, determinism, Vandermonde") {
    ContactSeq a = seq({2, 1});
    auto parts = splits(a);
    CHECK(parts.size() == 6);  // (2+1)(1+1)
    std::set<std::string> seen;
    Integer binom_sum(0);
    for (const auto& [a1, a2] : parts) {
        CHECK(a1 + a2 == a);
        seen.insert(a1.str() + "|" + a2.str());
        binom_sum += seq_binom(a, a1);
    }
    CHECK(seen.size() == parts.size());
    CHECK(binom_sum == 8);  // 2^{size(a)}

    CHECK(splits(kZero).size() == 1);
    CHECK(splits(ContactSeq::unit(3)).size() == 2);

    // odometer order: position 1 moves fastest and a1 counts up from zero
    CHECK(parts.front().first == kZero);
    CHECK(parts[1].first == seq({1}));
    CHECK(parts.back().first == a);
}

TEST_CASE("entries") {
    CHECK(seq({2, 0, 1}).entries() == std::vector<std::pair<int, int>>{{1, 2}, {3, 1}});
    CHECK(kZero.entries().empty());
    CHECK(ContactSeq::unit(5).entries() == std::vector<std::pair<int, int>>{{5, 1}});
}

TEST_CASE("textual form") {
    CHECK(ContactSeq::parse("") == kZero);
    CHECK(ContactSeq::parse("2,0,1") == seq({2, 0, 1}));
    CHECK(ContactSeq::parse("2,0,1,0") == seq({2, 0, 1}));
    CHECK(ContactSeq::parse(" 1 , 2 ") == seq({1, 2}));
    CHECK(seq({2, 0, 1}).str() == "2,0,1");
    CHECK(kZero.str().empty());
    CHECK_THROWS_AS(ContactSeq::parse("1,,2"), InvalidSequence);
    CHECK_THROWS_AS(ContactSeq::parse("1,-2"), InvalidSequence);
    CHECK_THROWS_AS(ContactSeq::parse("a"), InvalidSequence);
    CHECK_THROWS_AS(ContactSeq::parse("1,"), InvalidSequence);

    // round trip on a few shapes
    for (const auto& text : {"1", "0,0,1", "3,1,4,1,5", "12"}) {
        CHECK(ContactSeq::parse(text).str() == text);
    }
}
