#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mrdt/core.hpp"

namespace mrdt {

struct Version {
    int id = 0;
    Value state;
    std::vector<int> events;   // sorted event ids contributing to this version
    std::vector<int> parents;  // version graph edges
};

struct LcaResult {
    std::vector<int> potential;  // maximal common ancestor version ids
    Value state;                 // resolved ancestor state
    std::vector<int> events;     // events of the resolved ancestor
};

// Replicated store: a set of named branches over a version graph. Applying an
// operation extends one branch; merging folds another branch's head in, using
// the datatype's three-way merge against the lowest common ancestor (or the
// two-way merge when running a state-based CRDT).
class Store {
  public:
    Store(MrdtSpec spec, bool crdt_mode);

    // copies `from`'s head into a new version owned by the new replica
    int create_branch(ReplicaId from, ReplicaId fresh);

    // runs one operation at `rep`'s head; returns the new event's id
    int apply(ReplicaId rep, const Op& op);

    // merges `src`'s head into `dst`; returns the new version id
    int merge(ReplicaId dst, ReplicaId src);

    Value query(ReplicaId rep, const Op& q) const;

    LcaResult lca(int v1, int v2) const;

    bool has_replica(ReplicaId r) const { return heads_.count(r) != 0; }
    int head(ReplicaId r) const { return heads_.at(r); }
    const std::map<ReplicaId, int>& heads() const { return heads_; }
    const std::vector<Version>& versions() const { return versions_; }
    const std::vector<Event>& events() const { return events_; }
    const std::set<std::pair<int, int>>& vis() const { return vis_; }
    const MrdtSpec& spec() const { return spec_; }
    bool crdt_mode() const { return crdt_; }

    // ancestor version ids of v, including v itself
    std::set<int> ancestors(int v) const;

  private:
    struct Node {  // possibly-virtual version used while resolving multiple LCAs
        Value state;
        std::vector<int> events;
        std::set<int> anc;
    };
    Node resolve(std::vector<int> ids) const;
    int add_version(Value state, std::vector<int> events, std::vector<int> parents);

    MrdtSpec spec_;
    bool crdt_;
    std::vector<Version> versions_;
    std::vector<Event> events_;
    std::map<ReplicaId, int> heads_;
    std::set<std::pair<int, int>> vis_;
    Timestamp next_ts_ = 1;
};

}  // namespace mrdt
