#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mrdt/datatypes.hpp"
#include "mrdt/trace.hpp"

using namespace mrdt;

namespace {

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Trace parse_ok(const std::string& text) {
    std::string err;
    auto t = parse_trace(text, &err);
    INFO(err);
    REQUIRE(t);
    return *t;
}

}  // namespace

TEST_CASE("traces round-trip through the text format") {
    Trace t;
    t.datatype = "orset";
    t.mode = "mrdt";
    t.alphabet = {"a", "b"};
    t.seed = 99;
    t.steps = {
        {TraceStep::kFork, 1, 0, {}},
        {TraceStep::kApply, 0, 0, Op::array({"add", "a"})},
        {TraceStep::kMerge, 1, 0, {}},
        {TraceStep::kQuery, 1, 0, Op::array({"rd"})},
    };
    t.digest = "00000000deadbeef";
    Trace t2 = parse_ok(serialize_trace(t));
    CHECK(t2.datatype == t.datatype);
    CHECK(t2.mode == t.mode);
    CHECK(t2.alphabet == t.alphabet);
    CHECK(t2.seed == t.seed);
    CHECK(t2.digest == t.digest);
    REQUIRE(t2.steps.size() == 4);
    CHECK(t2.steps[0].kind == TraceStep::kFork);
    CHECK(t2.steps[1].op == Op::array({"add", "a"}));
    CHECK(t2.steps[3].kind == TraceStep::kQuery);
}

TEST_CASE("parser rejects malformed input with a located message") {
    std::string err;
    CHECK_FALSE(parse_trace("mode mrdt\n---\n---\n", &err));  // missing datatype
    CHECK_FALSE(parse_trace("datatype orset\nmode banana\n---\n---\n", &err));
    CHECK(parse_trace("datatype orset\nbogus x\n---\n---\n", &err) == std::nullopt);
    CHECK(err.find("line 2") != std::string::npos);
    CHECK_FALSE(parse_trace("datatype orset\n---\nwiggle 0\n---\n", &err));
    CHECK_FALSE(parse_trace("datatype orset\n---\napply 0 not-json\n---\n", &err));
    CHECK_FALSE(parse_trace("datatype orset\n---\nfork 1\n---\n", &err));
    CHECK_FALSE(parse_trace("datatype orset\n---\n---\n---\n---\n", &err));
}

TEST_CASE("replaying a trace is deterministic and digest-stable") {
    Trace t = parse_ok(fixture("fig3.trace"));
    RunResult r1 = run_trace(t, true);
    RunResult r2 = run_trace(t, true);
    CHECK(r1.violations.empty());
    CHECK(r1.digest == r2.digest);
    REQUIRE(r1.store);
    CHECK(r1.store->query(1, Op::array({"rd"})) == Value::array({"a"}));
}

TEST_CASE("steps over unknown replicas are skipped rather than fatal") {
    Trace t;
    t.datatype = "orset";
    t.steps = {
        {TraceStep::kApply, 5, 0, Op::array({"add", "a"})},  // replica 5 never forked
        {TraceStep::kMerge, 0, 0, {}},                       // self-merge
        {TraceStep::kFork, 1, 9, {}},                        // source missing
        {TraceStep::kApply, 0, 0, Op::array({"add", "b"})},
        {TraceStep::kQuery, 3, 0, Op::array({"rd"})},
    };
    RunResult r = run_trace(t, true);
    CHECK(r.violations.empty());
    REQUIRE(r.store);
    CHECK(r.store->events().size() == 1);
}

TEST_CASE("unknown datatype or impossible mode surface as errors") {
    Trace t;
    t.datatype = "nope";
    CHECK_FALSE(run_trace(t, false).violations.empty());
    t.datatype = "counter";
    t.mode = "crdt";
    CHECK_FALSE(run_trace(t, false).violations.empty());
}

TEST_CASE("all shipped fixtures parse and the broken one is the only violator") {
    for (const char* name : {"fig3.trace", "fig4.trace", "fig5.trace", "fig12.trace"}) {
        Trace t = parse_ok(fixture(name));
        RunResult r = run_trace(t, true);
        INFO(name);
        if (std::string(name) == "fig12.trace")
            CHECK_FALSE(r.violations.empty());
        else
            CHECK(r.violations.empty());
    }
}

TEST_CASE("random schedules respect the replica and event budgets") {
    auto sp = *find_datatype("orset");
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        Trace t = random_trace(sp, false, FuzzOptions{3, 6}, rng);
        int events = 0, replicas = 1;
        for (auto& s : t.steps) {
            if (s.kind == TraceStep::kApply) ++events;
            if (s.kind == TraceStep::kFork) ++replicas;
        }
        CHECK(events <= 6);
        CHECK(replicas <= 3);
        CHECK(run_trace(t, true).violations.empty());
    }
}

TEST_CASE("shrinking keeps the violation and prunes padding") {
    Trace t = parse_ok(fixture("fig12.trace"));
    // pad the schedule with irrelevant noise
    Trace padded = t;
    for (int i = 0; i < 6; ++i) {
        padded.steps.insert(padded.steps.begin() + 1,
                            TraceStep{TraceStep::kQuery, 0, 0, Op::array({"rd"})});
        padded.steps.push_back(TraceStep{TraceStep::kQuery, 1, 0, Op::array({"rd"})});
    }
    padded.steps.insert(padded.steps.begin() + 4,
                        TraceStep{TraceStep::kApply, 5, 0, Op::array({"enable"})});
    auto failing = [](const Trace& c) { return !run_trace(c, true).violations.empty(); };
    REQUIRE(failing(padded));
    Trace small = shrink_trace(padded, failing);
    CHECK(failing(small));
    CHECK(small.steps.size() <= 12);
    CHECK(small.steps.size() < padded.steps.size());
}

TEST_CASE("digest covers every replica head") {
    Store st(*find_datatype("gset"), false);
    std::string before = digest_heads(st);
    st.apply(0, Op::array({"add", "a"}));
    CHECK(digest_heads(st) != before);
}
