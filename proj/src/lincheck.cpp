#include "mrdt/lincheck.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace mrdt {

namespace {

bool visible(const Store& st, int i, int j) { return st.vis().count({i, j}) != 0; }

bool concurrent(const Store& st, int i, int j) {
    return !visible(st, i, j) && !visible(st, j, i);
}

bool noncomm(const Store& st, int i, int j) {
    return !st.spec().commutes(st.events()[i].op, st.events()[j].op);
}

bool rc_edge(const Store& st, int i, int j) {
    return st.spec().rc(st.events()[i].op, st.events()[j].op);
}

}  // namespace

EdgeSet compute_lo(const Store& st) {
    const int n = static_cast<int>(st.events().size());
    EdgeSet lo;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (visible(st, i, j) && noncomm(st, i, j)) {
                lo.insert({i, j});
                continue;
            }
            if (concurrent(st, i, j) && rc_edge(st, i, j)) {
                // skip the edge when the target is already ordered before some
                // later non-commuting event it sees
                bool suppressed = false;
                for (int k = 0; k < n && !suppressed; ++k)
                    if (k != j && visible(st, j, k) && noncomm(st, j, k)) suppressed = true;
                if (!suppressed) lo.insert({i, j});
            }
        }
    }
    return lo;
}

EdgeSet restrict_edges(const EdgeSet& lo, const std::vector<int>& evs) {
    EdgeSet out;
    for (auto& e : lo)
        if (std::count(evs.begin(), evs.end(), e.first) && std::count(evs.begin(), evs.end(), e.second))
            out.insert(e);
    return out;
}

namespace {

// Required order local to one merge. The suppression quantifier is scoped by
// the target's role: an edge into an ancestor event is only vetoed by other
// ancestor events, while an edge into a branch-local event is vetoed by
// anything in the merged history.
EdgeSet merge_local_lo(const Store& st, const std::vector<int>& all, const std::vector<int>& ltop) {
    EdgeSet lo;
    auto in_ltop = [&](int e) { return std::count(ltop.begin(), ltop.end(), e) != 0; };
    for (int i : all) {
        for (int j : all) {
            if (i == j) continue;
            if (visible(st, i, j) && noncomm(st, i, j)) {
                lo.insert({i, j});
                continue;
            }
            if (concurrent(st, i, j) && rc_edge(st, i, j)) {
                const std::vector<int>& range = in_ltop(j) ? ltop : all;
                bool suppressed = false;
                for (int k : range)
                    if (k != j && visible(st, j, k) && noncomm(st, j, k)) {
                        suppressed = true;
                        break;
                    }
                if (!suppressed) lo.insert({i, j});
            }
        }
    }
    return lo;
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    for (int x : a)
        if (!std::count(b.begin(), b.end(), x)) out.push_back(x);
    return out;
}

}  // namespace

Partition partition_merge_events(const Store& st, const std::vector<int>& l1,
                                 const std::vector<int>& l2, const std::vector<int>& ltop) {
    std::vector<int> all;
    std::set_union(l1.begin(), l1.end(), l2.begin(), l2.end(), std::back_inserter(all));
    EdgeSet lo = merge_local_lo(st, all, ltop);
    auto edge = [&](int i, int j) { return lo.count({i, j}) != 0; };

    std::vector<int> p1 = set_minus(l1, ltop), p2 = set_minus(l2, ltop);

    // events ordered (directly or through one sibling) before an ancestor event
    auto blocked = [&](const std::vector<int>& prime, int e, int* target) {
        for (int t : ltop) {
            if (edge(e, t)) {
                if (target) *target = t;
                return true;
            }
            for (int m : prime)
                if (m != e && edge(e, m) && edge(m, t)) {
                    if (target) *target = t;
                    return true;
                }
        }
        return false;
    };

    Partition out;
    for (int e : p1) (blocked(p1, e, nullptr) ? out.l1b : out.l1a).push_back(e);
    for (int e : p2) (blocked(p2, e, nullptr) ? out.l2b : out.l2a).push_back(e);

    for (int t : ltop) {
        bool hit = false;
        for (int e : out.l1b)
            if (edge(e, t)) hit = true;
        for (int e : out.l2b)
            if (edge(e, t)) hit = true;
        (hit ? out.ltopa : out.ltopb).push_back(t);
    }
    std::sort(out.ltopa.begin(), out.ltopa.end());  // event ids ascend with timestamps

    out.buckets.assign(out.ltopa.size(), {});
    auto assign = [&](const std::vector<int>& prime, int e) {
        for (std::size_t i = 0; i < out.ltopa.size(); ++i) {
            int t = out.ltopa[i];
            bool direct = edge(e, t);
            bool via = false;
            for (int m : prime)
                if (m != e && edge(e, m) && edge(m, t)) via = true;
            if (direct || via) {
                out.buckets[i].push_back(e);
                return;
            }
        }
    };
    for (int e : out.l1b) assign(p1, e);
    for (int e : out.l2b) assign(p2, e);
    return out;
}

std::vector<std::string> partition_violations(const Store& st, const Partition& p,
                                              const std::vector<int>& l1,
                                              const std::vector<int>& l2,
                                              const std::vector<int>& ltop) {
    std::vector<int> all;
    std::set_union(l1.begin(), l1.end(), l2.begin(), l2.end(), std::back_inserter(all));
    EdgeSet lo = merge_local_lo(st, all, ltop);
    auto edge = [&](int i, int j) { return lo.count({i, j}) != 0; };
    std::vector<std::string> out;

    std::vector<int> a_side = p.l1a, b_side = p.l1b;
    a_side.insert(a_side.end(), p.l2a.begin(), p.l2a.end());
    b_side.insert(b_side.end(), p.l2b.begin(), p.l2b.end());

    for (int a : a_side)
        for (int b : b_side)
            if (edge(a, b))
                out.push_back("unaffected event " + std::to_string(a) +
                              " ordered before affected event " + std::to_string(b));
    for (int a : p.ltopa)
        for (int b : p.ltopb)
            if (edge(a, b))
                out.push_back("conflicting ancestor event " + std::to_string(a) +
                              " ordered before clean ancestor event " + std::to_string(b));
    for (int a : p.ltopa)
        for (int b : p.ltopa)
            if (a != b && edge(a, b))
                out.push_back("order between ancestor conflict targets " + std::to_string(a) +
                              "," + std::to_string(b));
    for (std::size_t i = 0; i < p.buckets.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            for (int a : p.buckets[i])
                for (int b : p.buckets[j])
                    if (edge(a, b))
                        out.push_back("later bucket event " + std::to_string(a) +
                                      " ordered before earlier bucket event " + std::to_string(b));
    return out;
}

namespace {

struct SearchCtx {
    const Store& st;
    const std::vector<int>& evs;
    std::map<int, std::uint64_t> pred_mask;  // event -> mask of required predecessors
    const Value* target;
    std::unordered_set<std::uint64_t> dead;  // (mask, state) pairs that cannot finish
    std::vector<int> order;
};

bool dfs(SearchCtx& c, std::uint64_t placed, const Value& state) {
    const std::size_t n = c.evs.size();
    if (c.order.size() == n) return state == *c.target;
    std::uint64_t key = fnv64(state.dump() + "#" + std::to_string(placed));
    if (c.dead.count(key)) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (placed & (1ULL << i)) continue;
        if ((c.pred_mask[c.evs[i]] & ~placed) != 0) continue;
        c.order.push_back(c.evs[i]);
        if (dfs(c, placed | (1ULL << i), c.st.spec().step(state, c.st.events()[c.evs[i]])))
            return true;
        c.order.pop_back();
    }
    c.dead.insert(key);
    return false;
}

}  // namespace

LinResult check_linearizable(const Store& st, int version, std::uint64_t seed,
                             std::size_t exhaustive_bound, int budget) {
    const Version& v = st.versions()[version];
    const std::vector<int>& evs = v.events;
    EdgeSet lo = restrict_edges(compute_lo(st), evs);

    LinResult res;
    if (evs.empty()) {
        res.verdict = (st.spec().initial == v.state) ? LinVerdict::kLinearizable : LinVerdict::kViolation;
        return res;
    }

    std::map<int, std::uint64_t> preds;
    for (std::size_t i = 0; i < evs.size(); ++i) preds[evs[i]] = 0;
    for (auto& e : lo) {
        std::size_t i = std::find(evs.begin(), evs.end(), e.first) - evs.begin();
        preds[e.second] |= 1ULL << i;
    }

    if (evs.size() <= exhaustive_bound) {
        SearchCtx ctx{st, evs, preds, &v.state, {}, {}};
        if (dfs(ctx, 0, st.spec().initial)) {
            res.witness = ctx.order;
            res.verdict = LinVerdict::kLinearizable;
        } else {
            res.verdict = LinVerdict::kViolation;
        }
        return res;
    }

    // too many events to enumerate: sample random linear extensions
    Rng rng(seed);
    for (int it = 0; it < budget; ++it) {
        std::uint64_t placed = 0;
        Value state = st.spec().initial;
        std::vector<int> order;
        while (order.size() < evs.size()) {
            std::vector<std::size_t> ready;
            for (std::size_t i = 0; i < evs.size(); ++i)
                if (!(placed & (1ULL << i)) && (preds[evs[i]] & ~placed) == 0) ready.push_back(i);
            std::size_t pick = ready[rng.below(ready.size())];
            placed |= 1ULL << pick;
            state = st.spec().step(state, st.events()[evs[pick]]);
            order.push_back(evs[pick]);
        }
        if (state == v.state) {
            res.witness = order;
            res.verdict = LinVerdict::kLinearizable;
            return res;
        }
    }
    res.verdict = LinVerdict::kInconclusive;
    return res;
}

bool validate_witness(const Store& st, int version, const std::vector<int>& order) {
    const Version& v = st.versions()[version];
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != v.events) return false;
    EdgeSet lo = restrict_edges(compute_lo(st), v.events);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (lo.count({order[j], order[i]})) return false;
    Value state = st.spec().initial;
    for (int e : order) state = st.spec().step(state, st.events()[e]);
    return state == v.state;
}

std::vector<std::pair<int, int>> convergence_violations(const Store& st) {
    std::vector<std::pair<int, int>> out;
    std::map<std::vector<int>, std::vector<int>> by_events;
    for (const auto& v : st.versions()) by_events[v.events].push_back(v.id);
    for (auto& [evs, ids] : by_events)
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                if (st.versions()[ids[i]].state != st.versions()[ids[j]].state)
                    out.push_back({ids[i], ids[j]});
    return out;
}

bool causally_closed(const Store& st, int version) {
    const Version& v = st.versions()[version];
    for (int e : v.events)
        for (auto& edge : st.vis())
            if (edge.second == e && !std::count(v.events.begin(), v.events.end(), edge.first))
                return false;
    return true;
}

}  // namespace mrdt
