#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mrdt/store.hpp"

namespace mrdt {

using EdgeSet = std::set<std::pair<int, int>>;

// Required linearization order over the store's events: visibility edges
// between non-commuting events, plus conflict-resolution edges between
// concurrent events whose target is not already ordered by a later
// non-commuting visible event.
EdgeSet compute_lo(const Store& st);

// lo restricted to both endpoints lying in `evs`
EdgeSet restrict_edges(const EdgeSet& lo, const std::vector<int>& evs);

struct Partition {
    std::vector<int> l1a, l1b, l2a, l2b, ltopa, ltopb;
    std::vector<std::vector<int>> buckets;  // one per ltopa event, ascending timestamp
};

// Splits the events of a merge of histories L1 and L2 (with common ancestor
// events Ltop) into the events un/affected by cross-branch conflicts. Edges
// into an ancestor event only count when no *ancestor* event orders the
// target later; local events of the other branch do not veto them.
Partition partition_merge_events(const Store& st, const std::vector<int>& l1,
                                 const std::vector<int>& l2, const std::vector<int>& ltop);

// Structural facts the partition must satisfy; returns human-readable
// descriptions of any violations.
std::vector<std::string> partition_violations(const Store& st, const Partition& p,
                                              const std::vector<int>& l1,
                                              const std::vector<int>& l2,
                                              const std::vector<int>& ltop);

enum class LinVerdict { kLinearizable = 0, kViolation = 1, kInconclusive = 3 };

struct LinResult {
    LinVerdict verdict = LinVerdict::kLinearizable;
    std::vector<int> witness;  // event ids in linearization order, when found
};

// Searches for a sequential order of the version's events that respects the
// required order and replays to the version's state. Exhaustive up to
// `exhaustive_bound` events; beyond that, samples `budget` random linear
// extensions and reports kInconclusive if none replays.
LinResult check_linearizable(const Store& st, int version, std::uint64_t seed,
                             std::size_t exhaustive_bound = 8, int budget = 10000);

// True when `order` is a permutation of the version's events that extends the
// required order and replays to the version's state.
bool validate_witness(const Store& st, int version, const std::vector<int>& order);

// Pairs of version ids with identical event sets but different states.
std::vector<std::pair<int, int>> convergence_violations(const Store& st);

// Every event visible to an event of `version` must itself be in the version.
bool causally_closed(const Store& st, int version);

}  // namespace mrdt
