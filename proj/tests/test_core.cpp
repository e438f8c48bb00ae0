#include <doctest.h>

#include "mrdt/core.hpp"
#include "mrdt/trace.hpp"

using namespace mrdt;

TEST_CASE("canonical set helpers keep arrays sorted and unique") {
    Value s = jset();
    jset_insert(s, "b");
    jset_insert(s, "a");
    jset_insert(s, "b");
    CHECK(s == Value::array({"a", "b"}));
    CHECK(jset_contains(s, "a"));
    CHECK_FALSE(jset_contains(s, "c"));

    Value t = Value::array({"b", "c"});
    CHECK(jset_union(s, t) == Value::array({"a", "b", "c"}));
    CHECK(jset_inter(s, t) == Value::array({"b"}));
    CHECK(jset_diff(s, t) == Value::array({"a"}));
    CHECK(jset_filter(t, [](const Value& x) { return x == "c"; }) == Value::array({"c"}));
}

TEST_CASE("set helpers order structured values deterministically") {
    Value s = jset();
    jset_insert(s, Value::array({"a", 2}));
    jset_insert(s, Value::array({"a", 1}));
    jset_insert(s, Value::array({"a", 2}));
    CHECK(s.size() == 2);
    CHECK(s[0] == Value::array({"a", 1}));
}

TEST_CASE("rng streams are deterministic and independent per derivation") {
    Rng a(42), b(42);
    for (int i = 0; i < 32; ++i) CHECK(a.next() == b.next());

    Rng base(7);
    Rng d1 = base.derive(1), d2 = base.derive(2);
    CHECK(d1.next() != d2.next());

    Rng c(9);
    bool in_range = true;
    for (int i = 0; i < 200; ++i) in_range = in_range && c.below(10) < 10;
    CHECK(in_range);
    CHECK(Rng(1).below(0) == 0);
}

TEST_CASE("hex64 and fnv64 give stable digests") {
    CHECK(hex64(0) == "0000000000000000");
    CHECK(hex64(0xdeadbeefULL) == "00000000deadbeef");
    CHECK(fnv64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv64("abc") == fnv64("abc"));
    CHECK(fnv64("abc") != fnv64("abd"));
}
