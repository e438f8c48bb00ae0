#include "mrdt/trace.hpp"

#include <algorithm>
#include <sstream>

#include "mrdt/datatypes.hpp"
#include "mrdt/lincheck.hpp"

namespace mrdt {

std::string hex64(std::uint64_t v) {
    static const char* d = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) out[i] = d[v & 0xf];
    return out;
}

std::string digest_heads(const Store& st) {
    std::string blob;
    for (auto& [rep, vid] : st.heads())
        blob += std::to_string(rep) + "=" + st.versions()[vid].state.dump() + ";";
    return hex64(fnv64(blob));
}

std::string serialize_trace(const Trace& t) {
    std::ostringstream out;
    out << "# mrdt trace\n";
    out << "datatype " << t.datatype << "\n";
    out << "mode " << t.mode << "\n";
    if (!t.alphabet.empty()) {
        out << "alphabet";
        for (auto& a : t.alphabet) out << " " << a;
        out << "\n";
    }
    out << "seed " << t.seed << "\n";
    out << "---\n";
    for (const auto& s : t.steps) {
        switch (s.kind) {
            case TraceStep::kFork:
                out << "fork " << s.a << " " << s.b << "\n";
                break;
            case TraceStep::kApply:
                out << "apply " << s.a << " " << s.op.dump() << "\n";
                break;
            case TraceStep::kMerge:
                out << "merge " << s.a << " " << s.b << "\n";
                break;
            case TraceStep::kQuery:
                out << "query " << s.a << " " << s.op.dump() << "\n";
                break;
        }
    }
    out << "---\n";
    if (!t.digest.empty()) out << "digest " << t.digest << "\n";
    return out.str();
}

std::optional<Trace> parse_trace(const std::string& text, std::string* err) {
    auto fail = [&](const std::string& m) {
        if (err) *err = m;
        return std::nullopt;
    };
    Trace t;
    std::istringstream in(text);
    std::string line;
    int section = 0;  // 0 header, 1 steps, 2 trailer
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (line == "---") {
            ++section;
            if (section > 2) return fail("too many section markers");
            continue;
        }
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        auto rest_json = [&]() -> std::optional<Op> {
            std::string rest;
            std::getline(ls, rest);
            Op op = Op::parse(rest, nullptr, false);
            if (op.is_discarded()) return std::nullopt;
            return op;
        };
        if (section == 0) {
            if (word == "datatype")
                ls >> t.datatype;
            else if (word == "mode")
                ls >> t.mode;
            else if (word == "seed")
                ls >> t.seed;
            else if (word == "alphabet") {
                std::string sym;
                while (ls >> sym) t.alphabet.push_back(sym);
            } else
                return fail("line " + std::to_string(lineno) + ": unknown header " + word);
        } else if (section == 1) {
            TraceStep s;
            if (word == "fork") {
                s.kind = TraceStep::kFork;
                if (!(ls >> s.a >> s.b)) return fail("line " + std::to_string(lineno) + ": bad fork");
            } else if (word == "merge") {
                s.kind = TraceStep::kMerge;
                if (!(ls >> s.a >> s.b)) return fail("line " + std::to_string(lineno) + ": bad merge");
            } else if (word == "apply" || word == "query") {
                s.kind = word == "apply" ? TraceStep::kApply : TraceStep::kQuery;
                if (!(ls >> s.a)) return fail("line " + std::to_string(lineno) + ": bad " + word);
                auto op = rest_json();
                if (!op) return fail("line " + std::to_string(lineno) + ": bad operation payload");
                s.op = *op;
            } else {
                return fail("line " + std::to_string(lineno) + ": unknown step " + word);
            }
            t.steps.push_back(std::move(s));
        } else {
            if (word == "digest")
                ls >> t.digest;
            else
                return fail("line " + std::to_string(lineno) + ": unknown trailer " + word);
        }
    }
    if (t.datatype.empty()) return fail("missing datatype header");
    if (t.mode != "mrdt" && t.mode != "crdt") return fail("mode must be mrdt or crdt");
    return t;
}

namespace {

// per-version checks run right after a version appears
void check_new_version(Store& st, int vid, bool merged, std::uint64_t lin_seed, RunResult& out) {
    const Version& v = st.versions()[vid];
    LinResult lin = check_linearizable(st, vid, lin_seed + vid);
    if (lin.verdict == LinVerdict::kViolation)
        out.violations.push_back("version " + std::to_string(vid) +
                                 " has no valid linearization of its history");
    else if (lin.verdict == LinVerdict::kInconclusive)
        out.inconclusive = true;
    if (!causally_closed(st, vid))
        out.violations.push_back("version " + std::to_string(vid) + " is not causally closed");
    for (const auto& w : st.versions()) {
        if (w.id == vid || w.events != v.events) continue;
        if (w.state != v.state)
            out.violations.push_back("versions " + std::to_string(w.id) + " and " + std::to_string(vid) +
                                     " saw the same events but hold different states");
    }
    if (merged && !st.crdt_mode()) {
        const Version& p1 = st.versions()[v.parents[0]];
        const Version& p2 = st.versions()[v.parents[1]];
        LcaResult l = st.lca(p1.id, p2.id);
        std::vector<int> inter;
        std::set_intersection(p1.events.begin(), p1.events.end(), p2.events.begin(), p2.events.end(),
                              std::back_inserter(inter));
        if (l.potential.size() == 1 && l.events != inter)
            out.violations.push_back("ancestor of version " + std::to_string(vid) +
                                     " does not hold the common history");
        Partition part = partition_merge_events(st, p1.events, p2.events, l.events);
        for (auto& msg : partition_violations(st, part, p1.events, p2.events, l.events))
            out.violations.push_back("merge " + std::to_string(vid) + ": " + msg);
    }
}

}  // namespace

RunResult run_trace(const Trace& t, bool check_verdicts, std::uint64_t lin_seed) {
    RunResult out;
    auto spec = find_datatype(t.datatype, t.alphabet);
    if (!spec) {
        out.violations.push_back("unknown datatype " + t.datatype);
        return out;
    }
    bool crdt = t.mode == "crdt";
    if (crdt && !spec->has_merge2()) {
        out.violations.push_back(t.datatype + " has no two-way merge");
        return out;
    }
    Store st(*spec, crdt);
    for (const auto& s : t.steps) {
        switch (s.kind) {
            case TraceStep::kFork:
                if (!st.has_replica(s.b) || st.has_replica(s.a)) continue;
                st.create_branch(s.b, s.a);
                break;
            case TraceStep::kApply: {
                if (!st.has_replica(s.a)) continue;
                st.apply(s.a, s.op);
                if (check_verdicts)
                    check_new_version(st, st.head(s.a), false, lin_seed, out);
                break;
            }
            case TraceStep::kMerge: {
                if (!st.has_replica(s.a) || !st.has_replica(s.b) || s.a == s.b) continue;
                st.merge(s.a, s.b);
                if (check_verdicts)
                    check_new_version(st, st.head(s.a), true, lin_seed, out);
                break;
            }
            case TraceStep::kQuery:
                if (!st.has_replica(s.a)) continue;
                st.query(s.a, s.op);
                break;
        }
    }
    out.digest = digest_heads(st);
    out.store.emplace(std::move(st));
    return out;
}

Trace random_trace(const MrdtSpec& spec, bool crdt, const FuzzOptions& opt, Rng& rng) {
    Trace t;
    t.datatype = spec.name;
    t.mode = crdt ? "crdt" : "mrdt";
    int replicas = 1;
    int events = 0;
    int attempts = 6 * opt.max_events + 8;
    for (int i = 0; i < attempts && events < opt.max_events; ++i) {
        std::uint64_t roll = rng.below(100);
        TraceStep s;
        if (roll < 50) {  // apply
            s.kind = TraceStep::kApply;
            s.a = static_cast<int>(rng.below(replicas));
            s.op = rng.pick(spec.alphabet);
            ++events;
        } else if (roll < 75) {  // merge
            if (replicas < 2) continue;
            s.kind = TraceStep::kMerge;
            s.a = static_cast<int>(rng.below(replicas));
            do {
                s.b = static_cast<int>(rng.below(replicas));
            } while (s.b == s.a);
        } else if (roll < 90) {  // fork
            if (replicas >= opt.max_replicas) continue;
            s.kind = TraceStep::kFork;
            s.a = replicas;
            s.b = static_cast<int>(rng.below(replicas));
            ++replicas;
        } else {  // query
            s.kind = TraceStep::kQuery;
            s.a = static_cast<int>(rng.below(replicas));
            s.op = rng.pick(spec.queries);
        }
        t.steps.push_back(std::move(s));
    }
    // fold every branch back so full histories meet
    for (int r = 1; r < replicas; ++r)
        t.steps.push_back(TraceStep{TraceStep::kMerge, 0, r, {}});
    for (int r = 1; r < replicas; ++r)
        t.steps.push_back(TraceStep{TraceStep::kMerge, r, 0, {}});
    return t;
}

Trace shrink_trace(const Trace& t, const std::function<bool(const Trace&)>& still_failing) {
    Trace best = t;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t chunk = std::max<std::size_t>(best.steps.size() / 2, 1); chunk >= 1;
             chunk /= 2) {
            for (std::size_t i = 0; i + 1 <= best.steps.size();) {
                Trace cand = best;
                std::size_t take = std::min(chunk, cand.steps.size() - i);
                cand.steps.erase(cand.steps.begin() + i, cand.steps.begin() + i + take);
                if (!cand.steps.empty() && still_failing(cand)) {
                    best = std::move(cand);
                    progress = true;
                } else {
                    i += chunk;
                }
            }
            if (chunk == 1) break;
        }
    }
    return best;
}

}  // namespace mrdt
