#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mrdt/store.hpp"

namespace mrdt {

struct TraceStep {
    enum Kind { kFork, kApply, kMerge, kQuery } kind;
    int a = 0;  // fork: new replica; apply/query: replica; merge: destination
    int b = 0;  // fork: source replica; merge: source
    Op op;      // apply/query payload
};

struct Trace {
    std::string datatype;
    std::string mode = "mrdt";  // or "crdt"
    std::vector<std::string> alphabet;
    std::uint64_t seed = 0;
    std::vector<TraceStep> steps;
    std::string digest;  // hex fnv64 of the final replica states, empty if unknown
};

std::string serialize_trace(const Trace& t);
std::optional<Trace> parse_trace(const std::string& text, std::string* err);

struct RunResult {
    std::vector<std::string> violations;  // convergence / linearization / partition findings
    bool inconclusive = false;
    std::string digest;
    std::optional<Store> store;
};

// Replays a trace. Steps referring to unknown replicas are skipped, which keeps
// replay total under shrinking. With `check_verdicts`, runs per-transition
// checks: linearizability of each new version, convergence across versions
// with equal histories, ancestor-history agreement and event partitioning on
// merges.
RunResult run_trace(const Trace& t, bool check_verdicts, std::uint64_t lin_seed = 1);

struct FuzzOptions {
    int max_replicas = 3;
    int max_events = 8;
};

// Draws a random schedule: operations dominate, merges and forks interleave,
// queries sprinkle in, and every surviving branch folds back at the end.
Trace random_trace(const MrdtSpec& spec, bool crdt, const FuzzOptions& opt, Rng& rng);

// Greedy delta-debugging: drops chunks of steps while `still_failing` holds.
Trace shrink_trace(const Trace& t, const std::function<bool(const Trace&)>& still_failing);

std::string digest_heads(const Store& st);

}  // namespace mrdt
