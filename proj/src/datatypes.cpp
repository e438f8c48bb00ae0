#include "mrdt/datatypes.hpp"

#include <algorithm>

namespace mrdt {
namespace {

const std::vector<std::string> kDefaultAlphabet = {"a", "b", "c", "d", "e"};

std::string rk(ReplicaId r) { return std::to_string(r); }

Op rd() { return Op::array({"rd"}); }

bool never(const Op&, const Op&) { return false; }
bool always(const Op&, const Op&) { return true; }

// --- counter: scalar increment-only, merge adds the two deltas over the ancestor ---
MrdtSpec mk_counter() {
    MrdtSpec s;
    s.name = "counter";
    s.initial = 0;
    s.apply = [](const Value& st, const Op&, Timestamp, ReplicaId) { return Value(st.get<long>() + 1); };
    s.merge3 = [](const Value& l, const Value& a, const Value& b) {
        return Value(a.get<long>() + b.get<long>() - l.get<long>());
    };
    s.query = [](const Value& st, const Op&) { return st; };
    s.rc = never;
    s.commutes = always;
    s.alphabet = {Op::array({"inc"})};
    s.queries = {rd()};
    return s;
}

// --- gcounter: per-replica counts; three-way merge is pointwise a+b-l, two-way is pointwise max ---
MrdtSpec mk_gcounter() {
    MrdtSpec s;
    s.name = "gcounter";
    s.initial = Value::object();
    s.apply = [](const Value& st, const Op&, Timestamp, ReplicaId r) {
        Value out = st;
        out[rk(r)] = out.value(rk(r), 0L) + 1;
        return out;
    };
    s.merge3 = [](const Value& l, const Value& a, const Value& b) {
        Value out = Value::object();
        auto keys = [&](const Value& m) {
            for (auto it = m.begin(); it != m.end(); ++it)
                out[it.key()] = a.value(it.key(), 0L) + b.value(it.key(), 0L) - l.value(it.key(), 0L);
        };
        keys(l);
        keys(a);
        keys(b);
        return out;
    };
    s.merge2 = [](const Value& a, const Value& b) {
        Value out = a;
        for (auto it = b.begin(); it != b.end(); ++it)
            out[it.key()] = std::max(out.value(it.key(), 0L), it.value().get<long>());
        return out;
    };
    s.query = [](const Value& st, const Op&) {
        long total = 0;
        for (auto& kv : st.items()) total += kv.value().get<long>();
        return Value(total);
    };
    s.rc = never;
    s.commutes = always;
    s.alphabet = {Op::array({"inc"})};
    s.queries = {rd()};
    return s;
}

// --- pn-counter: per-replica [incs,decs] pairs ---
MrdtSpec mk_pncounter() {
    MrdtSpec s;
    s.name = "pn-counter";
    s.initial = Value::object();
    s.apply = [](const Value& st, const Op& op, Timestamp, ReplicaId r) {
        Value out = st;
        Value cell = out.contains(rk(r)) ? out[rk(r)] : Value::array({0, 0});
        if (op[0] == "inc")
            cell[0] = cell[0].get<long>() + 1;
        else
            cell[1] = cell[1].get<long>() + 1;
        out[rk(r)] = cell;
        return out;
    };
    auto get = [](const Value& m, const std::string& k) {
        return m.contains(k) ? m.at(k) : Value::array({0, 0});
    };
    s.merge3 = [get](const Value& l, const Value& a, const Value& b) {
        Value out = Value::object();
        auto visit = [&](const Value& m) {
            for (auto it = m.begin(); it != m.end(); ++it) {
                Value lv = get(l, it.key()), av = get(a, it.key()), bv = get(b, it.key());
                out[it.key()] = Value::array({av[0].get<long>() + bv[0].get<long>() - lv[0].get<long>(),
                                              av[1].get<long>() + bv[1].get<long>() - lv[1].get<long>()});
            }
        };
        visit(l);
        visit(a);
        visit(b);
        return out;
    };
    s.merge2 = [get](const Value& a, const Value& b) {
        Value out = a;
        for (auto it = b.begin(); it != b.end(); ++it) {
            Value av = get(out, it.key());
            out[it.key()] = Value::array({std::max(av[0].get<long>(), it.value()[0].get<long>()),
                                          std::max(av[1].get<long>(), it.value()[1].get<long>())});
        }
        return out;
    };
    s.query = [](const Value& st, const Op&) {
        long total = 0;
        for (auto& kv : st.items()) total += kv.value()[0].get<long>() - kv.value()[1].get<long>();
        return Value(total);
    };
    s.rc = never;
    s.commutes = always;
    s.alphabet = {Op::array({"inc"}), Op::array({"dec"})};
    s.queries = {rd()};
    return s;
}

// --- gset / gmap: grow-only, merge is union in both modes ---
MrdtSpec mk_gset(const std::vector<std::string>& al) {
    MrdtSpec s;
    s.name = "gset";
    s.initial = jset();
    s.apply = [](const Value& st, const Op& op, Timestamp, ReplicaId) {
        Value out = st;
        jset_insert(out, op[1]);
        return out;
    };
    s.merge3 = [](const Value&, const Value& a, const Value& b) { return jset_union(a, b); };
    s.merge2 = [](const Value& a, const Value& b) { return jset_union(a, b); };
    s.query = [](const Value& st, const Op&) { return st; };
    s.rc = never;
    s.commutes = always;
    for (const auto& x : al) s.alphabet.push_back(Op::array({"add", x}));
    s.queries = {rd()};
    return s;
}

MrdtSpec mk_gmap(const std::vector<std::string>& al) {
    MrdtSpec s;
    s.name = "gmap";
    s.initial = jset();
    s.apply = [](const Value& st, const Op& op, Timestamp, ReplicaId) {
        Value out = st;
        jset_insert(out, Value::array({op[1], op[2]}));
        return out;
    };
    s.merge3 = [](const Value&, const Value& a, const Value& b) { return jset_union(a, b); };
    s.merge2 = [](const Value& a, const Value& b) { return jset_union(a, b); };
    s.query = [](const Value& st, const Op&) { return st; };
    s.rc = never;
    s.commutes = always;
    for (std::size_t i = 0; i < al.size() && i < 2; ++i)
        for (std::size_t j = 0; j < al.size() && j < 2; ++j)
            s.alphabet.push_back(Op::array({"put", al[i], al[j]}));
    s.queries = {rd()};
    return s;
}

// shared add/rem relations: remove conflicts with a concurrent add of the same
// element (add wins); only same-element add/rem pairs fail to commute
bool addrem_rc(const Op& o1, const Op& o2) {
    return o1[0] == "rem" && o2[0] == "add" && o1[1] == o2[1];
}
bool addrem_comm(const Op& o1, const Op& o2) {
    return !(o1[1] == o2[1] && o1[0] != o2[0]);
}

Value distinct_firsts(const Value& pairs) {
    Value out = jset();
    for (const auto& p : pairs) jset_insert(out, p[0]);
    return out;
}

// --- orset: elements tagged with the timestamp of their add ---
MrdtSpec mk_orset(const std::vector<std::string>& al) {
    MrdtSpec s;
    s.name = "orset";
    s.initial = jset();
    s.apply = [](const Value& st, const Op& op, Timestamp t, ReplicaId) {
        if (op[0] == "add") {
            Value out = st;
            jset_insert(out, Value::array({op[1], t}));
            return out;
        }
        return jset_filter(st, [&](const Value& p) { return p[0] != op[1]; });
    };
    s.merge3 = [](const Value& l, const Value& a, const Value& b) {
        return jset_union(jset_inter(jset_inter(l, a), b), jset_union(jset_diff(a, l), jset_diff(b, l)));
    };
    s.query = [](const Value& st, const Op&) { return distinct_firsts(st); };
    s.rc = addrem_rc;
    s.commutes = addrem_comm;
    for (const char* v : {"add", "rem"})
        for (const auto& x : al) s.alphabet.push_back(Op::array({v, x}));
    s.queries = {rd()};
    return s;
}

// --- orset#crdt: two-way variant with tombstoned tags ---
MrdtSpec mk_orset_crdt(const std::vector<std::string>& al) {
    MrdtSpec s;
    s.name = "orset#crdt";
    s.initial = Value{{"e", jset()}, {"t", jset()}};
    s.apply = [](const Value& st, const Op& op, Timestamp t, ReplicaId) {
        Value out = st;
        if (op[0] == "add") {
            jset_insert(out["e"], Value::array({op[1], t}));
            return out;
        }
        Value keep = jset(), tomb = out["t"];
        for (const auto& p : out["e"]) {
            if (p[0] == op[1])
                jset_insert(tomb, p[1]);
            else
                jset_insert(keep, p);
        }
        out["e"] = keep;
        out["t"] = tomb;
        return out;
    };
    s.merge2 = [](const Value& a, const Value& b) {
        Value tomb = jset_union(a["t"], b["t"]);
        Value elems = jset_filter(jset_union(a["e"], b["e"]),
                                  [&](const Value& p) { return !jset_contains(tomb, p[1]); });
        return Value{{"e", elems}, {"t", tomb}};
    };
    s.merge3 = [m2 = s.merge2](const Value&, const Value& a, const Value& b) { return m2(a, b); };
    s.query = [](const Value& st, const Op&) { return distinct_firsts(st["e"]); };
    s.rc = addrem_rc;
    s.commutes = addrem_comm;
    for (const char* v : {"add", "rem"})
        for (const auto& x : al) s.alphabet.push_back(Op::array({v, x}));
    s.queries = {rd()};
    return s;
}

// --- 2p-set: added set + removed set, no re-add ---
MrdtSpec mk_2pset(const std::vector<std::string>& al) {
    MrdtSpec s;
    s.name = "2p-set";
    s.initial = Value{{"a", jset()}, {"r", jset()}};
    s.apply = [](const Value& st, const Op& op, Timestamp, ReplicaId) {
        Value out = st;
        jset_insert(out[op[0] == "add" ? "a" : "r"], op[1]);
        return out;
    };
    s.merge2 = [](const Value& a, const Value& b) {
        return Value{{"a", jset_union(a["a"], b["a"])}, {"r", jset_union(a["r"], b["r"])}};
    };
    s.merge3 = [m2 = s.merge2](const Value&, const Value& a, const Value& b) { return m2(a, b); };
    s.query = [](const Value& st, const Op&) { return jset_diff(st["a"], st["r"]); };
    s.rc = never;
    s.commutes = always;
    for (const char* v : {"add", "rem"})
        for (const auto& x : al) s.alphabet.push_back(Op::array({v, x}));
    s.queries = {rd()};
    return s;
}

// --- orset-efficient: per (element, replica) counters instead of per-add tags ---
MrdtSpec mk_orset_eff(const std::vector<std::string>& al) {
    MrdtSpec s;
    s.name = "orset-efficient";
    s.initial = Value{{"t", jset()}, {"c", Value::object()}};
    auto ckey = [](const Value& elem, long r) { return elem.get<std::string>() + "#" + std::to_string(r); };
    s.apply = [ckey](const Value& st, const Op& op, Timestamp, ReplicaId r) {
        Value out = st;
        if (op[0] == "add") {
            long k = out["c"].value(ckey(op[1], r), 0L) + 1;
            out["c"][ckey(op[1], r)] = k;
            jset_insert(out["t"], Value::array({op[1], r, k}));
            return out;
        }
        out["t"] = jset_filter(out["t"], [&](const Value& x) { return x[0] != op[1]; });
        return out;
    };
    s.merge3 = [ckey](const Value& l, const Value& a, const Value& b) {
        auto fresh = [&](const Value& x) {
            return x[2].get<long>() > l["c"].value(ckey(x[0], x[1].get<long>()), 0L);
        };
        Value keep = jset_inter(jset_inter(l["t"], a["t"]), b["t"]);
        keep = jset_union(keep, jset_filter(a["t"], fresh));
        keep = jset_union(keep, jset_filter(b["t"], fresh));
        Value ctr = Value::object();
        for (const Value* m : {&l, &a, &b})
            for (auto it = (*m)["c"].begin(); it != (*m)["c"].end(); ++it)
                ctr[it.key()] = std::max(ctr.value(it.key(), 0L), it.value().get<long>());
        return Value{{"t", keep}, {"c", ctr}};
    };
    s.query = [](const Value& st, const Op&) { return distinct_firsts(st["t"]); };
    s.rc = addrem_rc;
    s.commutes = addrem_comm;
    for (const char* v : {"add", "rem"})
        for (const auto& x : al) s.alphabet.push_back(Op::array({v, x}));
    s.queries = {rd()};
    return s;
}

// or-set three-way formula, used componentwise by several datatypes below
Value orset_m3(const Value& l, const Value& a, const Value& b) {
    return jset_union(jset_inter(jset_inter(l, a), b), jset_union(jset_diff(a, l), jset_diff(b, l)));
}

// --- rwset: remove-wins set; grow-only element set plus timestamped remove marks,
// an add clears the marks it has observed ---
MrdtSpec mk_rwset(const std::vector<std::string>& al) {
    MrdtSpec s;
    s.name = "rwset";
    s.initial = Value{{"a", jset()}, {"m", jset()}};
    s.apply = [](const Value& st, const Op& op, Timestamp t, ReplicaId) {
        Value out = st;
        if (op[0] == "add") {
            jset_insert(out["a"], op[1]);
            out["m"] = jset_filter(out["m"], [&](const Value& p) { return p[0] != op[1]; });
        } else {
            jset_insert(out["m"], Value::array({op[1], t}));
        }
        return out;
    };
    s.merge3 = [](const Value& l, const Value& a, const Value& b) {
        return Value{{"a", orset_m3(l["a"], a["a"], b["a"])}, {"m", orset_m3(l["m"], a["m"], b["m"])}};
    };
    s.query = [](const Value& st, const Op&) {
        return jset_filter(st["a"], [&](const Value& x) {
            for (const auto& p : st["m"])
                if (p[0] == x) return false;
            return true;
        });
    };
    s.rc = [](const Op& o1, const Op& o2) { return o1[0] == "add" && o2[0] == "rem" && o1[1] == o2[1]; };
    s.commutes = addrem_comm;
    for (const char* v : {"add", "rem"})
        for (const auto& x : al) s.alphabet.push_back(Op::array({v, x}));
    s.queries = {rd()};
    return s;
}

// flag merge rule: a flag survives only if its side's counter moved past the ancestor
bool flag_merge(long lc, long ac, bool af, long bc, bool bf) {
    if (af && bf) return true;
    if (!af && !bf) return false;
    return af ? ac > lc : bc > lc;
}

// --- ewflag: enable-wins flag, per-replica (count, flag) entries;
// disable clears every entry's flag ---
MrdtSpec mk_ewflag() {
    MrdtSpec s;
    s.name = "ewflag";
    s.initial = Value::object();
    s.apply = [](const Value& st, const Op& op, Timestamp, ReplicaId r) {
        Value out = st;
        if (op[0] == "enable") {
            long c = out.contains(rk(r)) ? out[rk(r)][0].get<long>() : 0;
            out[rk(r)] = Value::array({c + 1, true});
        } else {
            for (auto it = out.begin(); it != out.end(); ++it) it.value()[1] = false;
        }
        return out;
    };
    s.merge3 = [](const Value& l, const Value& a, const Value& b) {
        auto get = [](const Value& m, const std::string& k) {
            return m.contains(k) ? m.at(k) : Value::array({0, false});
        };
        Value out = Value::object();
        auto visit = [&](const Value& m) {
            for (auto it = m.begin(); it != m.end(); ++it) {
                Value le = get(l, it.key()), ae = get(a, it.key()), be = get(b, it.key());
                long ac = ae[0].get<long>(), bc = be[0].get<long>();
                if (ac > bc)
                    out[it.key()] = ae;
                else if (bc > ac)
                    out[it.key()] = be;
                else
                    out[it.key()] = Value::array(
                        {ac, flag_merge(le[0].get<long>(), ac, ae[1].get<bool>(), bc, be[1].get<bool>())});
            }
        };
        visit(l);
        visit(a);
        visit(b);
        return out;
    };
    s.query = [](const Value& st, const Op&) {
        for (auto& kv : st.items())
            if (kv.value()[1].get<bool>()) return Value(true);
        return Value(false);
    };
    s.rc = [](const Op& o1, const Op& o2) { return o1[0] == "disable" && o2[0] == "enable"; };
    s.commutes = [](const Op& o1, const Op& o2) { return o1 == o2; };
    s.alphabet = {Op::array({"enable"}), Op::array({"disable"})};
    s.queries = {rd()};
    return s;
}

// --- ewflag-buggy: single (count, flag) pair; counter-sum merge loses track of
// which branch an enable happened on ---
MrdtSpec mk_ewflag_buggy() {
    MrdtSpec s;
    s.name = "ewflag-buggy";
    s.initial = Value::array({0, false});
    s.apply = [](const Value& st, const Op& op, Timestamp, ReplicaId) {
        if (op[0] == "enable") return Value::array({st[0].get<long>() + 1, true});
        return Value::array({st[0], false});
    };
    s.merge3 = [](const Value& l, const Value& a, const Value& b) {
        long lc = l[0].get<long>(), ac = a[0].get<long>(), bc = b[0].get<long>();
        return Value::array(
            {ac + bc - lc, flag_merge(lc, ac, a[1].get<bool>(), bc, b[1].get<bool>())});
    };
    s.query = [](const Value& st, const Op&) { return st[1]; };
    s.rc = [](const Op& o1, const Op& o2) { return o1[0] == "disable" && o2[0] == "enable"; };
    s.commutes = [](const Op& o1, const Op& o2) { return o1 == o2; };
    s.alphabet = {Op::array({"enable"}), Op::array({"disable"})};
    s.queries = {rd()};
    return s;
}

// --- dwflag: disable-wins flag as a remove-wins set over one token ---
MrdtSpec mk_dwflag() {
    MrdtSpec rw = mk_rwset({"x"});
    MrdtSpec s;
    s.name = "dwflag";
    s.initial = rw.initial;
    s.apply = [rw](const Value& st, const Op& op, Timestamp t, ReplicaId r) {
        return rw.apply(st, Op::array({op[0] == "enable" ? "add" : "rem", "x"}), t, r);
    };
    s.merge3 = rw.merge3;
    s.query = [rw](const Value& st, const Op& q) { return Value(!rw.query(st, q).empty()); };
    s.rc = [](const Op& o1, const Op& o2) { return o1[0] == "enable" && o2[0] == "disable"; };
    s.commutes = [](const Op& o1, const Op& o2) { return o1 == o2; };
    s.alphabet = {Op::array({"enable"}), Op::array({"disable"})};
    s.queries = {rd()};
    return s;
}

// --- swmap: set-wins map keyed like an or-set ---
MrdtSpec mk_swmap(const std::vector<std::string>& al) {
    std::vector<std::string> keys(al.begin(), al.begin() + std::min<std::size_t>(al.size(), 3));
    MrdtSpec o = mk_orset(keys);
    MrdtSpec s;
    s.name = "swmap";
    s.initial = o.initial;
    s.apply = [o](const Value& st, const Op& op, Timestamp t, ReplicaId r) {
        return o.apply(st, Op::array({op[0] == "set" ? "add" : "rem", op[1]}), t, r);
    };
    s.merge3 = o.merge3;
    s.query = o.query;
    s.rc = [](const Op& o1, const Op& o2) { return o1[0] == "del" && o2[0] == "set" && o1[1] == o2[1]; };
    s.commutes = [](const Op& o1, const Op& o2) { return !(o1[1] == o2[1] && o1[0] != o2[0]); };
    for (const char* v : {"set", "del"})
        for (const auto& k : keys) s.alphabet.push_back(Op::array({v, k}));
    s.queries = {rd()};
    return s;
}

// --- rga: insert-after sequence; nodes are (id=timestamp, parent id, element),
// merge is union, read is the tree traversal with newer siblings first ---
MrdtSpec mk_rga(const std::vector<std::string>& al) {
    std::vector<std::string> elems(al.begin(), al.begin() + std::min<std::size_t>(al.size(), 3));
    MrdtSpec s;
    s.name = "rga";
    s.initial = jset();
    s.apply = [](const Value& st, const Op& op, Timestamp t, ReplicaId) {
        Value out = st;
        jset_insert(out, Value::array({t, op[1], op[2]}));
        return out;
    };
    s.merge3 = [](const Value&, const Value& a, const Value& b) { return jset_union(a, b); };
    s.merge2 = [](const Value& a, const Value& b) { return jset_union(a, b); };
    s.query = [](const Value& st, const Op&) {
        Value out = Value::array();
        std::vector<long> seen;
        std::function<void(long)> walk = [&](long parent) {
            // children in descending id order: later inserts win the earlier slot
            std::vector<const Value*> kids;
            for (const auto& n : st)
                if (n[1].get<long>() == parent) kids.push_back(&n);
            std::sort(kids.begin(), kids.end(),
                      [](const Value* x, const Value* y) { return (*x)[0].get<long>() > (*y)[0].get<long>(); });
            for (const Value* n : kids) {
                out.push_back((*n)[2]);
                seen.push_back((*n)[0].get<long>());
                walk((*n)[0].get<long>());
            }
        };
        walk(0);
        for (const auto& n : st)  // orphans (parent never inserted) go last
            if (std::find(seen.begin(), seen.end(), n[0].get<long>()) == seen.end()) out.push_back(n[2]);
        return out;
    };
    s.rc = never;
    s.commutes = always;
    for (long p : {0L, 1L, 2L})
        for (const auto& x : elems) s.alphabet.push_back(Op::array({"ins", p, x}));
    s.queries = {rd()};
    return s;
}

// --- mvr: multi-value register kept as the grow-only history of (value, ts)
// writes; the read resolves overwrites by maximal timestamp ---
MrdtSpec mk_mvr(const std::vector<std::string>& al) {
    std::vector<std::string> vals(al.begin(), al.begin() + std::min<std::size_t>(al.size(), 3));
    MrdtSpec s;
    s.name = "mvr";
    s.initial = jset();
    s.apply = [](const Value& st, const Op& op, Timestamp t, ReplicaId) {
        Value out = st;
        jset_insert(out, Value::array({op[1], t}));
        return out;
    };
    s.merge3 = orset_m3;
    s.merge2 = [](const Value& a, const Value& b) { return jset_union(a, b); };
    s.query = [](const Value& st, const Op&) {
        long best = -1;
        for (const auto& p : st) best = std::max(best, p[1].get<long>());
        Value out = jset();
        for (const auto& p : st)
            if (p[1].get<long>() == best) jset_insert(out, p[0]);
        return out;
    };
    s.rc = never;
    s.commutes = always;
    for (const auto& v : vals) s.alphabet.push_back(Op::array({"set", v}));
    s.queries = {rd()};
    return s;
}

// --- optreg: optional register; set records a (value, ts) write, unset clears
// everything it has observed ---
MrdtSpec mk_optreg(const std::vector<std::string>& al) {
    std::vector<std::string> vals(al.begin(), al.begin() + std::min<std::size_t>(al.size(), 3));
    MrdtSpec s;
    s.name = "optreg";
    s.initial = jset();
    s.apply = [](const Value& st, const Op& op, Timestamp t, ReplicaId) {
        if (op[0] == "set") {
            Value out = st;
            jset_insert(out, Value::array({op[1], t}));
            return out;
        }
        return jset();
    };
    s.merge3 = orset_m3;
    s.query = [](const Value& st, const Op&) {
        Value best = nullptr;
        long bt = -1;
        for (const auto& p : st)
            if (p[1].get<long>() > bt) {
                bt = p[1].get<long>();
                best = p[0];
            }
        return best;
    };
    s.rc = [](const Op& o1, const Op& o2) { return o1[0] == "unset" && o2[0] == "set"; };
    s.commutes = [](const Op& o1, const Op& o2) { return (o1[0] == "set") == (o2[0] == "set"); };
    for (const auto& v : vals) s.alphabet.push_back(Op::array({"set", v}));
    s.alphabet.push_back(Op::array({"unset"}));
    s.queries = {rd()};
    return s;
}

// --- json: fixed-shape document composing a counter, an or-set and an
// enable-wins flag; operations delegate to the addressed field ---
MrdtSpec mk_json(const std::vector<std::string>& al) {
    std::vector<std::string> elems(al.begin(), al.begin() + std::min<std::size_t>(al.size(), 2));
    MrdtSpec cnt = mk_counter(), set = mk_orset(elems), flg = mk_ewflag();
    auto sub = [cnt, set, flg](const std::string& tag) -> const MrdtSpec& {
        if (tag == "c") return cnt;
        return tag == "s" ? set : flg;
    };
    MrdtSpec s;
    s.name = "json";
    s.initial = Value{{"c", cnt.initial}, {"s", set.initial}, {"f", flg.initial}};
    s.apply = [sub](const Value& st, const Op& op, Timestamp t, ReplicaId r) {
        std::string tag = op[0];
        Value out = st;
        out[tag] = sub(tag).apply(st.at(tag), op[1], t, r);
        return out;
    };
    s.merge3 = [sub](const Value& l, const Value& a, const Value& b) {
        Value out = Value::object();
        for (const char* tag : {"c", "s", "f"})
            out[tag] = sub(tag).merge3(l.at(tag), a.at(tag), b.at(tag));
        return out;
    };
    s.query = [sub](const Value& st, const Op&) {
        Value out = Value::object();
        for (const char* tag : {"c", "s", "f"}) out[tag] = sub(tag).query(st.at(tag), Op::array({"rd"}));
        return out;
    };
    s.rc = [sub](const Op& o1, const Op& o2) {
        return o1[0] == o2[0] && sub(o1[0]).rc(o1[1], o2[1]);
    };
    s.commutes = [sub](const Op& o1, const Op& o2) {
        return o1[0] != o2[0] || sub(o1[0]).commutes(o1[1], o2[1]);
    };
    for (const char* tag : {"c", "s", "f"})
        for (const auto& op : sub(tag).alphabet) s.alphabet.push_back(Op::array({tag, op}));
    s.queries = {rd()};
    return s;
}

}  // namespace

std::vector<MrdtSpec> make_catalog(const std::vector<std::string>& alphabet) {
    const auto& al = alphabet.empty() ? kDefaultAlphabet : alphabet;
    return {mk_counter(),    mk_gcounter(),  mk_pncounter(),    mk_gset(al),  mk_gmap(al),
            mk_orset(al),    mk_orset_crdt(al), mk_2pset(al),   mk_orset_eff(al), mk_rwset(al),
            mk_ewflag(),     mk_ewflag_buggy(), mk_dwflag(),    mk_swmap(al), mk_rga(al),
            mk_mvr(al),      mk_optreg(al),  mk_json(al)};
}

std::optional<MrdtSpec> find_datatype(const std::string& name, const std::vector<std::string>& alphabet) {
    for (auto& s : make_catalog(alphabet))
        if (s.name == name) return s;
    return std::nullopt;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (auto& s : make_catalog()) out.push_back(s.name);
    return out;
}

std::vector<std::string> mrdt_roster() {
    return {"counter", "gcounter", "pn-counter", "gset",  "gmap",   "orset", "orset-efficient",
            "rwset",   "ewflag",   "dwflag",     "swmap", "rga",    "mvr",   "optreg"};
}

std::vector<std::string> crdt_roster() {
    return {"gcounter", "pn-counter", "gset", "gmap", "orset#crdt", "2p-set", "mvr"};
}

}  // namespace mrdt
