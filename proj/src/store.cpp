#include "mrdt/store.hpp"

#include <algorithm>
#include <stdexcept>

namespace mrdt {

Store::Store(MrdtSpec spec, bool crdt_mode) : spec_(std::move(spec)), crdt_(crdt_mode) {
    if (crdt_ && !spec_.has_merge2())
        throw std::invalid_argument(spec_.name + " has no two-way merge");
    versions_.push_back(Version{0, spec_.initial, {}, {}});
    heads_[0] = 0;
}

int Store::add_version(Value state, std::vector<int> events, std::vector<int> parents) {
    int id = static_cast<int>(versions_.size());
    versions_.push_back(Version{id, std::move(state), std::move(events), std::move(parents)});
    return id;
}

int Store::create_branch(ReplicaId from, ReplicaId fresh) {
    if (!has_replica(from) || has_replica(fresh))
        throw std::invalid_argument("bad fork");
    const Version& src = versions_[heads_.at(from)];
    int id = add_version(src.state, src.events, {src.id});
    heads_[fresh] = id;
    return id;
}

int Store::apply(ReplicaId rep, const Op& op) {
    const Version& h = versions_[heads_.at(rep)];
    int eid = static_cast<int>(events_.size());
    Event e{next_ts_++, rep, op};
    events_.push_back(e);
    for (int prev : h.events) vis_.insert({prev, eid});
    std::vector<int> evs = h.events;
    evs.push_back(eid);  // fresh id is larger than everything in h.events
    add_version(spec_.step(h.state, e), std::move(evs), {h.id});
    heads_[rep] = static_cast<int>(versions_.size()) - 1;
    return eid;
}

int Store::merge(ReplicaId dst, ReplicaId src) {
    const Version& a = versions_[heads_.at(dst)];
    const Version& b = versions_[heads_.at(src)];
    Value merged;
    if (crdt_) {
        merged = spec_.merge2(a.state, b.state);
    } else {
        LcaResult l = lca(a.id, b.id);
        merged = spec_.merge3(l.state, a.state, b.state);
    }
    std::vector<int> evs;
    std::set_union(a.events.begin(), a.events.end(), b.events.begin(), b.events.end(),
                   std::back_inserter(evs));
    int id = add_version(std::move(merged), std::move(evs), {a.id, b.id});
    heads_[dst] = id;
    return id;
}

Value Store::query(ReplicaId rep, const Op& q) const {
    return spec_.query(versions_[heads_.at(rep)].state, q);
}

std::set<int> Store::ancestors(int v) const {
    std::set<int> out;
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (!out.insert(x).second) continue;
        for (int p : versions_[x].parents) stack.push_back(p);
    }
    return out;
}

namespace {
// maximal elements of `ids` under the ancestry preorder (reachability in the
// version graph): drop everything that is a strict ancestor of another member
std::vector<int> maximal(const Store& st, const std::set<int>& ids) {
    std::vector<int> out;
    for (int c : ids) {
        bool dominated = false;
        for (int d : ids) {
            if (d == c) continue;
            auto anc = st.ancestors(d);
            if (anc.count(c)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}
}  // namespace

// When the version graph gives several incomparable common ancestors, merge
// them pairwise in ascending id order; the ancestor of such an intermediate
// (virtual) merge is found by intersecting the ancestor sets it accumulated.
Store::Node Store::resolve(std::vector<int> ids) const {
    Node acc;
    {
        const Version& v = versions_[ids[0]];
        acc = Node{v.state, v.events, ancestors(v.id)};
    }
    for (std::size_t i = 1; i < ids.size(); ++i) {
        const Version& v = versions_[ids[i]];
        std::set<int> common;
        auto vanc = ancestors(v.id);
        for (int x : acc.anc)
            if (vanc.count(x)) common.insert(x);
        Node base = resolve(maximal(*this, common));
        Value merged = spec_.merge3(base.state, acc.state, v.state);
        std::vector<int> evs;
        std::set_union(acc.events.begin(), acc.events.end(), v.events.begin(), v.events.end(),
                       std::back_inserter(evs));
        acc.state = std::move(merged);
        acc.events = std::move(evs);
        for (int x : vanc) acc.anc.insert(x);
    }
    return acc;
}

LcaResult Store::lca(int v1, int v2) const {
    std::set<int> common;
    auto a1 = ancestors(v1), a2 = ancestors(v2);
    for (int x : a1)
        if (a2.count(x)) common.insert(x);
    LcaResult out;
    out.potential = maximal(*this, common);
    Node n = resolve(out.potential);
    out.state = std::move(n.state);
    out.events = std::move(n.events);
    return out;
}

}  // namespace mrdt
