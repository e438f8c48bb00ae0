#include <doctest.h>

#include "mrdt/datatypes.hpp"
#include "mrdt/lincheck.hpp"

using namespace mrdt;

namespace {
Store orset_store() { return Store(*find_datatype("orset"), false); }
}  // namespace

TEST_CASE("required order keeps per-branch add/remove pairs and drops overridden conflicts") {
    // two branches, each adding then removing the same element
    Store st = orset_store();
    st.create_branch(0, 1);
    st.apply(0, Op::array({"add", "a"}));  // e0
    st.apply(0, Op::array({"rem", "a"}));  // e1
    st.apply(1, Op::array({"add", "a"}));  // e2
    st.apply(1, Op::array({"rem", "a"}));  // e3
    st.merge(0, 1);
    EdgeSet lo = compute_lo(st);
    EdgeSet expect = {{0, 1}, {2, 3}};
    CHECK(lo == expect);  // the cross-branch conflicts are all overridden later
}

TEST_CASE("concurrent remove is ordered before a surviving add") {
    Store st = orset_store();
    st.create_branch(0, 1);
    st.apply(0, Op::array({"rem", "a"}));  // e0
    st.apply(1, Op::array({"add", "a"}));  // e1
    st.merge(1, 0);
    EdgeSet lo = compute_lo(st);
    EdgeSet expect = {{0, 1}};
    CHECK(lo == expect);
}

TEST_CASE("witness search finds a valid order and validates it") {
    Store st = orset_store();
    st.create_branch(0, 1);
    st.apply(0, Op::array({"rem", "a"}));
    st.apply(1, Op::array({"add", "a"}));
    int m = st.merge(1, 0);
    LinResult r = check_linearizable(st, m, 1);
    CHECK(r.verdict == LinVerdict::kLinearizable);
    CHECK(r.witness == std::vector<int>{0, 1});  // remove first, add survives
    CHECK(validate_witness(st, m, r.witness));
    CHECK_FALSE(validate_witness(st, m, {1, 0}));  // violates the required order
    CHECK_FALSE(validate_witness(st, m, {0}));     // not a permutation
}

TEST_CASE("re-merge after a second remove: witness reorders across branches") {
    Store st = orset_store();
    st.create_branch(0, 1);
    st.apply(0, Op::array({"add", "a"}));  // e0
    st.apply(1, Op::array({"rem", "a"}));  // e1
    st.merge(1, 0);
    st.apply(0, Op::array({"rem", "a"}));  // e2
    int m = st.merge(0, 1);
    CHECK(st.versions()[m].state == Value::array());
    CHECK(validate_witness(st, m, {1, 0, 2}));  // rem, add, rem replays to empty
    CHECK(check_linearizable(st, m, 1).verdict == LinVerdict::kLinearizable);

    const Version& v = st.versions()[m];
    const Version& p1 = st.versions()[v.parents[0]];
    const Version& p2 = st.versions()[v.parents[1]];
    LcaResult l = st.lca(p1.id, p2.id);
    Partition p = partition_merge_events(st, p1.events, p2.events, l.events);
    CHECK(p.l1b.empty());
    CHECK(p.l2b == std::vector<int>{1});    // the remove is pulled before the ancestor add
    CHECK(p.ltopa == std::vector<int>{0});
    CHECK(p.l1a == std::vector<int>{2});
    CHECK(p.l2a.empty());
    CHECK(p.ltopb.empty());
    REQUIRE(p.buckets.size() == 1);
    CHECK(p.buckets[0] == std::vector<int>{1});
    CHECK(partition_violations(st, p, p1.events, p2.events, l.events).empty());
}

TEST_CASE("partition of a conflict-free merge leaves everything unaffected") {
    Store st(*find_datatype("gset"), false);
    st.create_branch(0, 1);
    st.apply(0, Op::array({"add", "a"}));
    st.apply(0, Op::array({"add", "b"}));
    st.apply(1, Op::array({"add", "c"}));
    int m = st.merge(0, 1);
    const Version& v = st.versions()[m];
    const Version& p1 = st.versions()[v.parents[0]];
    const Version& p2 = st.versions()[v.parents[1]];
    LcaResult l = st.lca(p1.id, p2.id);
    Partition p = partition_merge_events(st, p1.events, p2.events, l.events);
    CHECK(p.l1a.size() == 2);
    CHECK(p.l2a.size() == 1);
    CHECK(p.l1b.empty());
    CHECK(p.l2b.empty());
    CHECK(partition_violations(st, p, p1.events, p2.events, l.events).empty());
}

TEST_CASE("flag divergence is caught as both a convergence and a linearization failure") {
    Store st(*find_datatype("ewflag-buggy"), false);
    st.create_branch(0, 1);
    st.apply(0, Op::array({"enable"}));   // e0, disabled later on replica 0
    st.apply(1, Op::array({"enable"}));   // e1
    st.apply(1, Op::array({"disable"}));  // e2
    st.create_branch(1, 2);
    st.merge(1, 0);                       // intermediate merge revives the flag
    st.apply(0, Op::array({"disable"}));  // e3
    int v6 = st.merge(1, 0);
    int v7 = st.merge(2, 0);
    CHECK(st.versions()[v6].state == Value::array({2, true}));
    CHECK(st.versions()[v7].state == Value::array({2, false}));
    CHECK(st.versions()[v6].events == st.versions()[v7].events);
    auto conv = convergence_violations(st);
    REQUIRE(conv.size() == 1);
    CHECK(conv[0] == std::pair<int, int>{v6, v7});
    CHECK(check_linearizable(st, v6, 1).verdict == LinVerdict::kViolation);
    CHECK(check_linearizable(st, v7, 1).verdict == LinVerdict::kLinearizable);
}

TEST_CASE("sampling mode answers large histories or reports inconclusive") {
    Store st(*find_datatype("gset"), false);
    for (int i = 0; i < 10; ++i) st.apply(0, Op::array({"add", std::string(1, char('a' + i))}));
    LinResult r = check_linearizable(st, st.head(0), 7, 8, 500);
    CHECK(r.verdict == LinVerdict::kLinearizable);  // grow-only set always replays

    // an unreachable state forces the sampler to give up
    Store bug(*find_datatype("ewflag-buggy"), false);
    bug.create_branch(0, 1);
    bug.create_branch(0, 2);
    for (int i = 0; i < 3; ++i) {
        bug.apply(0, Op::array({"enable"}));
        bug.apply(1, Op::array({"enable"}));
        bug.apply(2, Op::array({"enable"}));
    }
    bug.apply(0, Op::array({"disable"}));
    bug.merge(0, 1);
    bug.merge(2, 1);
    bug.merge(0, 2);  // ten events: exceeds the exhaustive bound
    LinResult s = check_linearizable(bug, bug.head(0), 7, 8, 50);
    CHECK((s.verdict == LinVerdict::kInconclusive || s.verdict == LinVerdict::kLinearizable));
}

TEST_CASE("causal closure holds for store-built versions") {
    Store st = orset_store();
    st.create_branch(0, 1);
    st.apply(0, Op::array({"add", "a"}));
    st.apply(1, Op::array({"add", "b"}));
    st.merge(0, 1);
    for (const auto& v : st.versions()) CHECK(causally_closed(st, v.id));
}

TEST_CASE("restrict_edges keeps only pairs inside the window") {
    EdgeSet lo = {{0, 1}, {1, 2}, {0, 2}};
    CHECK(restrict_edges(lo, {0, 1}) == EdgeSet{{0, 1}});
    CHECK(restrict_edges(lo, {2}).empty());
}
