#include <doctest.h>

#include "mrdt/datatypes.hpp"

using namespace mrdt;

namespace {
MrdtSpec dt(const std::string& name) {
    auto s = find_datatype(name);
    REQUIRE(s);
    return *s;
}
}  // namespace

TEST_CASE("catalog contains every datatype the suites exercise") {
    auto names = catalog_names();
    for (const auto& n : mrdt_roster())
        CHECK(std::count(names.begin(), names.end(), n) == 1);
    for (const auto& n : crdt_roster())
        CHECK(std::count(names.begin(), names.end(), n) == 1);
    CHECK(std::count(names.begin(), names.end(), "ewflag-buggy") == 1);
    CHECK(std::count(names.begin(), names.end(), "json") == 1);
    CHECK(mrdt_roster().size() == 14);
    CHECK_FALSE(find_datatype("nope"));
}

TEST_CASE("every crdt roster entry has a two-way merge") {
    for (const auto& n : crdt_roster()) CHECK(dt(n).has_merge2());
}

TEST_CASE("counter adds concurrent deltas over the ancestor") {
    auto c = dt("counter");
    CHECK(c.merge3(2, 4, 5) == Value(7));
    Value s = c.apply(c.initial, Op::array({"inc"}), 1, 0);
    CHECK(s == Value(1));
    CHECK(c.query(s, Op::array({"rd"})) == Value(1));
}

TEST_CASE("gcounter tracks per-replica counts in both merge styles") {
    auto g = dt("gcounter");
    Op inc = Op::array({"inc"});
    Value l = g.apply(g.initial, inc, 1, 0);
    Value a = g.apply(g.apply(l, inc, 2, 1), inc, 3, 1);
    Value b = g.apply(l, inc, 4, 2);
    Value m = g.merge3(l, a, b);
    CHECK(g.query(m, {}) == Value(4));
    CHECK(g.merge2(a, b) == g.merge3(l, a, b));  // same keys, max == sum-minus-ancestor here
}

TEST_CASE("pn-counter nets increments against decrements") {
    auto p = dt("pn-counter");
    Value s = p.apply(p.apply(p.initial, Op::array({"inc"}), 1, 0), Op::array({"dec"}), 2, 0);
    CHECK(p.query(s, {}) == Value(0));
    Value t = p.apply(s, Op::array({"inc"}), 3, 1);
    CHECK(p.query(p.merge3(s, t, s), {}) == Value(1));
    CHECK(p.query(p.merge2(t, s), {}) == Value(1));
}

TEST_CASE("orset add wins over concurrent remove of the same element") {
    auto o = dt("orset");
    Value l = jset();
    Value a = o.apply(l, Op::array({"rem", "a"}), 1, 0);
    Value b = o.apply(l, Op::array({"add", "a"}), 2, 1);
    Value m = o.merge3(l, a, b);
    CHECK(jset_contains(m, Value::array({"a", 2})));
    CHECK(o.query(m, {}) == Value::array({"a"}));
    CHECK(o.rc(Op::array({"rem", "a"}), Op::array({"add", "a"})));
    CHECK_FALSE(o.rc(Op::array({"rem", "a"}), Op::array({"add", "b"})));
    CHECK_FALSE(o.commutes(Op::array({"rem", "a"}), Op::array({"add", "a"})));
    CHECK(o.commutes(Op::array({"add", "a"}), Op::array({"add", "a"})));
}

TEST_CASE("orset#crdt keeps removed tags as tombstones") {
    auto o = dt("orset#crdt");
    Value a = o.apply(o.initial, Op::array({"add", "a"}), 1, 0);
    Value b = o.apply(a, Op::array({"rem", "a"}), 2, 1);
    Value m = o.merge2(a, b);
    CHECK(o.query(m, {}) == Value::array());  // the observed tag stays dead
    Value c = o.apply(a, Op::array({"add", "a"}), 3, 0);
    CHECK(o.query(o.merge2(c, b), {}) == Value::array({"a"}));  // fresh tag survives
}

TEST_CASE("2p-set never resurrects removed elements") {
    auto t = dt("2p-set");
    Value s = t.apply(t.initial, Op::array({"add", "a"}), 1, 0);
    s = t.apply(s, Op::array({"rem", "a"}), 2, 0);
    s = t.apply(s, Op::array({"add", "a"}), 3, 0);
    CHECK(t.query(s, {}) == Value::array());
}

TEST_CASE("orset-efficient survives two adds of one element at one replica") {
    auto o = dt("orset-efficient");
    Value l = o.apply(o.initial, Op::array({"add", "a"}), 1, 0);
    Value a = o.apply(l, Op::array({"rem", "a"}), 2, 1);  // removes the observed instance
    Value b = o.apply(l, Op::array({"add", "a"}), 3, 0);  // second add at replica 0
    Value m = o.merge3(l, a, b);
    CHECK(o.query(m, {}) == Value::array({"a"}));
}

TEST_CASE("rwset removes win against concurrent adds") {
    auto r = dt("rwset");
    Value l = r.initial;
    Value a = r.apply(l, Op::array({"add", "a"}), 1, 0);
    Value b = r.apply(l, Op::array({"rem", "a"}), 2, 1);
    CHECK(r.query(r.merge3(l, a, b), {}) == Value::array());
    CHECK(r.rc(Op::array({"add", "a"}), Op::array({"rem", "a"})));
}

TEST_CASE("ewflag enable wins against concurrent disable") {
    auto f = dt("ewflag");
    Op en = Op::array({"enable"}), dis = Op::array({"disable"});
    Value l = f.apply(f.initial, en, 1, 0);
    Value a = f.apply(l, dis, 2, 1);
    Value b = f.apply(l, en, 3, 2);
    CHECK(f.query(f.merge3(l, a, b), {}) == Value(true));
    // a disable at the enabling replica clears it again
    Value c = f.apply(b, dis, 4, 2);
    CHECK(f.query(f.merge3(l, a, c), {}) == Value(false));
}

TEST_CASE("buggy ewflag revives a disabled flag through a counter-sum merge") {
    auto f = dt("ewflag-buggy");
    Op en = Op::array({"enable"}), dis = Op::array({"disable"});
    Value v0 = f.initial;
    Value v1 = f.apply(v0, en, 1, 0);                      // enable, later disabled
    Value va = f.apply(f.apply(v0, en, 2, 1), dis, 3, 1);  // enable+disable elsewhere
    Value v5 = f.merge3(v0, va, v1);                       // intermediate merge
    CHECK(v5 == Value::array({2, true}));                  // flag back on
    Value v3 = f.apply(v1, dis, 4, 0);
    CHECK(f.merge3(v1, v3, v5) == Value::array({2, true}));
    CHECK(f.merge3(v0, v3, va) == Value::array({2, false}));  // same events, other shape
}

TEST_CASE("dwflag disable wins") {
    auto f = dt("dwflag");
    Value l = f.apply(f.initial, Op::array({"enable"}), 1, 0);
    Value a = f.apply(l, Op::array({"enable"}), 2, 1);
    Value b = f.apply(l, Op::array({"disable"}), 3, 2);
    CHECK(f.query(f.merge3(l, a, b), {}) == Value(false));
}

TEST_CASE("swmap set wins over concurrent delete of the key") {
    auto m = dt("swmap");
    Value l = m.initial;
    Value a = m.apply(l, Op::array({"del", "a"}), 1, 0);
    Value b = m.apply(l, Op::array({"set", "a"}), 2, 1);
    CHECK(m.query(m.merge3(l, a, b), {}) == Value::array({"a"}));
    CHECK(m.rc(Op::array({"del", "a"}), Op::array({"set", "a"})));
}

TEST_CASE("rga orders siblings newest-first and unions on merge") {
    auto r = dt("rga");
    Value s = r.apply(r.initial, Op::array({"ins", 0, "a"}), 1, 0);   // a at ts1 under root
    Value t1 = r.apply(s, Op::array({"ins", 1, "b"}), 2, 0);          // b after a
    Value t2 = r.apply(s, Op::array({"ins", 1, "c"}), 3, 1);          // c after a, newer
    Value m = r.merge3(s, t1, t2);
    CHECK(r.query(m, {}) == Value::array({"a", "c", "b"}));
}

TEST_CASE("mvr read returns the latest write and keeps history grow-only") {
    auto m = dt("mvr");
    Value s = m.apply(m.initial, Op::array({"set", "a"}), 1, 0);
    s = m.apply(s, Op::array({"set", "b"}), 2, 0);
    CHECK(m.query(s, {}) == Value::array({"b"}));
    Value t = m.apply(s, Op::array({"set", "c"}), 3, 1);
    CHECK(m.query(m.merge2(s, t), {}) == Value::array({"c"}));
}

TEST_CASE("optreg set wins over concurrent unset") {
    auto r = dt("optreg");
    Value l = r.apply(r.initial, Op::array({"set", "a"}), 1, 0);
    Value a = r.apply(l, Op::array({"unset"}), 2, 1);
    Value b = r.apply(l, Op::array({"set", "b"}), 3, 2);
    CHECK(r.query(r.merge3(l, a, b), {}) == Value("b"));
    CHECK(r.query(r.merge3(l, a, l), {}) == Value(nullptr));
}

TEST_CASE("json document delegates to its fields and isolates conflicts per field") {
    auto j = dt("json");
    Op inc = Op::array({"c", Op::array({"inc"})});
    Op add = Op::array({"s", Op::array({"add", "a"})});
    Op rem = Op::array({"s", Op::array({"rem", "a"})});
    Op en = Op::array({"f", Op::array({"enable"})});
    Value l = j.apply(j.initial, inc, 1, 0);
    Value a = j.apply(l, rem, 2, 1);
    Value b = j.apply(j.apply(l, add, 3, 2), en, 4, 2);
    Value m = j.merge3(l, a, b);
    Value view = j.query(m, {});
    CHECK(view["c"] == Value(1));
    CHECK(view["s"] == Value::array({"a"}));
    CHECK(view["f"] == Value(true));
    CHECK(j.rc(rem, add));
    CHECK(j.commutes(inc, rem));       // different fields never conflict
    CHECK_FALSE(j.commutes(rem, add)); // same field keeps its own relation
}

TEST_CASE("alphabet parameter reshapes the operation pool") {
    auto o = find_datatype("orset", {"x", "y"});
    REQUIRE(o);
    CHECK(o->alphabet.size() == 4);
    CHECK(jset_contains(Value(o->alphabet), Op::array({"add", "x"})));
}

TEST_CASE("declared rc pairs are never declared commutative") {
    for (const auto& sp : make_catalog())
        for (const auto& o1 : sp.alphabet)
            for (const auto& o2 : sp.alphabet)
                if (sp.rc(o1, o2)) CHECK_FALSE(sp.commutes(o1, o2));
}
