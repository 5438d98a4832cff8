#include <doctest.h>

#include <sstream>

#include "gwcubic/errors.hpp"
#include "gwcubic/memo_table.hpp"

using namespace gwcubic;

namespace {

InvariantKey key(int d, const char* gamma) { return InvariantKey(d, ContactSeq::parse(gamma)); }

}  // namespace

TEST_CASE("insert-once and lookup") {
    MemoTable table;
    CHECK(table.size() == 0);
    CHECK(!table.find(key(1, "3")));
    table.insert_once(key(1, "3"), Rational(6));
    CHECK(table.size() == 1);
    CHECK(*table.find(key(1, "3")) == Rational(6));
    table.insert_once(key(1, "3"), Rational(6));  // same value: fine
    CHECK(table.size() == 1);
    table.clear();
    CHECK(table.size() == 0);
}

TEST_CASE("save is sorted by (d, textual gamma) and prints /1") {
    MemoTable table;
    table.insert_once(key(1, "3"), Rational(6));
    table.insert_once(key(1, "1,1"), Rational(6));
    table.insert_once(key(1, "0,0,1"), Rational(9));
    table.insert_once(key(2, "6"), Rational(720));
    table.insert_once(key(4, "12"), Rational(1, 2));  // artificial value, format only

    std::ostringstream out;
    table.save(out);
    CHECK(out.str() ==
          "GWCUBIC-CACHE v1\n"
          "d=1 gamma=0,0,1 I=9/1\n"
          "d=1 gamma=1,1 I=6/1\n"
          "d=1 gamma=3 I=6/1\n"
          "d=2 gamma=6 I=720/1\n"
          "d=4 gamma=12 I=1/2\n");
}

TEST_CASE("same-degree ordering is textual, not numeric") {
    MemoTable table;
    table.insert_once(key(4, "2,2,0,0,0,1"), Rational(1));
    table.insert_once(key(4, "12"), Rational(2));  // "12" < "2,..." as strings
    std::ostringstream out;
    table.save(out);
    CHECK(out.str() ==
          "GWCUBIC-CACHE v1\n"
          "d=4 gamma=12 I=2/1\n"
          "d=4 gamma=2,2,0,0,0,1 I=1/1\n");
}

TEST_CASE("round trip reproduces the map and the bytes") {
    MemoTable table;
    table.insert_once(key(1, "3"), Rational(6));
    table.insert_once(key(2, "2,2"), Rational(-7, 3));
    std::ostringstream first;
    table.save(first);

    MemoTable loaded;
    std::istringstream in(first.str());
    loaded.load(in);
    CHECK(loaded.size() == 2);
    CHECK(*loaded.find(key(1, "3")) == Rational(6));
    CHECK(*loaded.find(key(2, "2,2")) == Rational(-7, 3));

    std::ostringstream second;
    loaded.save(second);
    CHECK(first.str() == second.str());
}

TEST_CASE("loader rejects unknown versions") {
    MemoTable table;
    std::istringstream v9("GWCUBIC-CACHE v9\n");
    CHECK_THROWS_AS(table.load(v9), BadCacheVersion);
    std::istringstream empty("");
    CHECK_THROWS_AS(table.load(empty), BadCacheVersion);
}

TEST_CASE("loader rejects malformed lines with their line number") {
    auto load_text = [](const std::string& text) {
        MemoTable table;
        std::istringstream in(text);
        table.load(in);
    };
    const std::string header = "GWCUBIC-CACHE v1\n";
    CHECK_THROWS_AS(load_text(header + "d=1 gamma=3\n"), BadCacheLine);
    CHECK_THROWS_AS(load_text(header + "d=x gamma=3 I=6/1\n"), BadCacheLine);
    CHECK_THROWS_AS(load_text(header + "d=1 gamma=2 I=6/1\n"), BadCacheLine);   // weight != 3d
    CHECK_THROWS_AS(load_text(header + "d=1 gamma= I=6/1\n"), BadCacheLine);    // zero profile
    CHECK_THROWS_AS(load_text(header + "d=1 gamma=3 I=6\n"), BadCacheLine);     // missing /den
    CHECK_THROWS_AS(load_text(header + "d=1 gamma=3 I=12/2\n"), BadCacheLine);  // not normalized
    CHECK_THROWS_AS(load_text(header + "d=1 gamma=3 I=6/1 x\n"), BadCacheLine);
    CHECK_THROWS_AS(load_text(header + "\nd=1 gamma=3 I=6/1\n"), BadCacheLine);
    CHECK_THROWS_AS(
        load_text(header + "d=1 gamma=3 I=6/1\nd=1 gamma=3 I=7/1\n"), BadCacheLine);

    try {
        load_text(header + "d=1 gamma=3 I=6/1\nbroken\n");
        CHECK(false);
    } catch (const BadCacheLine& e) {
        CHECK(e.line == 3);
    }
}
