#include "mrdt/vcsuite.hpp"

#include <algorithm>
#include <map>

#include "mrdt/datatypes.hpp"

namespace mrdt {

namespace {
const char* kRoleNames[kRoleCount] = {"e1", "e2", "etop", "etop2", "eb", "e", "e1p", "e2p"};
}

const char* role_name(Role r) { return kRoleNames[r]; }

namespace {

enum Base { L = 0, A = 1, B = 2, S0 = 3 };

VcTerm T(Base base, std::initializer_list<Role> roles = {}) {
    return VcTerm{base, std::vector<Role>(roles)};
}

VcEquation EQ(std::initializer_list<VcTerm> args, std::initializer_list<VcTerm> inner) {
    return VcEquation{std::vector<VcTerm>(args), std::vector<VcTerm>(inner)};
}

std::vector<VcRowDef> build_rows() {
    std::vector<VcRowDef> rows;
    auto add = [&](VcRowDef r) { rows.push_back(std::move(r)); };

    {
        VcRowDef r;
        r.name = "MergeCommutativity";
        r.kind = 1;
        add(r);
    }
    {
        VcRowDef r;
        r.name = "MergeIdempotence";
        r.kind = 2;
        add(r);
    }

    auto eq_row = [&](std::string name, bool has_pre, VcEquation pre, VcEquation post) {
        VcRowDef r;
        r.name = std::move(name);
        r.has_pre = has_pre;
        r.pre = std::move(pre);
        r.post = std::move(post);
        return r;
    };

    // --- two fresh conflicting operations ---
    {
        auto r = eq_row("psi[Ltop_b]_base-2op", false, {},
                        EQ({T(S0), T(S0, {kE1}), T(S0, {kE2})}, {T(S0), T(S0), T(S0, {kE2})}));
        r.side_2op = true;
        add(r);
    }
    {
        auto r = eq_row("psi[Ltop_b]_ind-2op", true,
                        EQ({T(L), T(L, {kE1}), T(L, {kE2})}, {T(L), T(L), T(L, {kE2})}),
                        EQ({T(L, {kEtop}), T(L, {kEtop, kE1}), T(L, {kEtop, kE2})},
                           {T(L, {kEtop}), T(L, {kEtop}), T(L, {kEtop, kE2})}));
        r.side_2op = true;
        add(r);
    }
    {
        auto r = eq_row("psi[Ltop_a]_ind-2op", true,
                        EQ({T(L), T(A, {kE1}), T(B, {kE2})}, {T(L), T(A), T(B, {kE2})}),
                        EQ({T(L, {kEtop}), T(A, {kEtop, kE1}), T(B, {kEtop, kE2})},
                           {T(L, {kEtop}), T(A, {kEtop}), T(B, {kEtop, kE2})}));
        r.side_2op = true;
        r.need_rc_target = true;
        add(r);
    }
    VcEquation pre_top2 = EQ({T(L, {kEtop}), T(A, {kEtop, kE1}), T(B, {kEtop, kE2})},
                             {T(L, {kEtop}), T(A, {kEtop}), T(B, {kEtop, kE2})});
    VcEquation post_l1b1_2op = EQ({T(L, {kEtop}), T(A, {kEb, kEtop, kE1}), T(B, {kEtop, kE2})},
                                  {T(L, {kEtop}), T(A, {kEb, kEtop}), T(B, {kEtop, kE2})});
    {
        auto r = eq_row("psi[L1_b]_ind1-2op", true, pre_top2, post_l1b1_2op);
        r.side_2op = r.side_b = true;
        add(r);
    }
    {
        auto r = eq_row("psi[L1_b]_ind2-2op", true, post_l1b1_2op,
                        EQ({T(L, {kEtop}), T(A, {kE, kEb, kEtop, kE1}), T(B, {kEtop, kE2})},
                           {T(L, {kEtop}), T(A, {kE, kEb, kEtop}), T(B, {kEtop, kE2})}));
        r.side_2op = r.side_b = r.side_ind2 = true;
        add(r);
    }
    {
        auto r = eq_row("psi[L2_b]_ind1-2op", true, pre_top2,
                        EQ({T(L, {kEtop}), T(A, {kEtop, kE1}), T(B, {kEb, kEtop, kE2})},
                           {T(L, {kEtop}), T(A, {kEtop}), T(B, {kEb, kEtop, kE2})}));
        r.side_2op = r.side_b = true;
        add(r);
    }
    {
        // published table repeats the first-branch shape here; kept as printed
        auto r = eq_row("psi[L2_b]_ind2-2op", true, pre_top2, post_l1b1_2op);
        r.side_2op = r.side_b = true;
        add(r);
    }
    VcEquation pre_flat_2op = EQ({T(L), T(A, {kE1}), T(B, {kE2})}, {T(L), T(A), T(B, {kE2})});
    {
        auto r = eq_row("psi[L1_a]_ind-2op", true, pre_flat_2op,
                        EQ({T(L), T(A, {kE1p, kE1}), T(B, {kE2})}, {T(L), T(A, {kE1p}), T(B, {kE2})}));
        r.side_2op = true;
        add(r);
    }
    {
        auto r = eq_row("psi[L2_a]_ind-2op", true, pre_flat_2op,
                        EQ({T(L), T(A, {kE1}), T(B, {kE2p, kE2})}, {T(L), T(A), T(B, {kE2p, kE2})}));
        r.side_2op = true;
        r.conc_e2p = true;
        add(r);
    }

    // --- one fresh operation ---
    add(eq_row("psi[Ltop_b]_base-1op", false, {},
               EQ({T(S0), T(S0, {kE1}), T(S0)}, {T(S0), T(S0), T(S0)})));
    add(eq_row("psi[Ltop_b]_ind-1op", true,
               EQ({T(L), T(L, {kE1}), T(L)}, {T(L), T(L), T(L)}),
               EQ({T(L, {kEtop}), T(L, {kEtop, kE1}), T(L, {kEtop})},
                  {T(L, {kEtop}), T(L, {kEtop}), T(L, {kEtop})})));
    {
        auto r = eq_row("psi[Ltop_a]_ind-1op", true,
                        EQ({T(L, {kEtop2}), T(A, {kE1}), T(B, {kEtop2})},
                           {T(L, {kEtop2}), T(A), T(B, {kEtop2})}),
                        EQ({T(L, {kEtop2, kEtop}), T(A, {kEtop, kE1}), T(B, {kEtop2, kEtop})},
                           {T(L, {kEtop2, kEtop}), T(A, {kEtop}), T(B, {kEtop2, kEtop})}));
        r.need_rc_target = true;
        add(r);
    }
    VcEquation pre_top1 = EQ({T(L, {kEtop}), T(A, {kEtop, kE1}), T(B, {kEtop})},
                             {T(L, {kEtop}), T(A, {kEtop}), T(B, {kEtop})});
    VcEquation post_l1b1_1op = EQ({T(L, {kEtop}), T(A, {kEb, kEtop, kE1}), T(B, {kEtop})},
                                  {T(L, {kEtop}), T(A, {kEb, kEtop}), T(B, {kEtop})});
    {
        auto r = eq_row("psi[L1_b]_ind1-1op", true, pre_top1, post_l1b1_1op);
        r.side_b = true;
        add(r);
    }
    {
        auto r = eq_row("psi[L1_b]_ind2-1op", true, post_l1b1_1op,
                        EQ({T(L, {kEtop}), T(A, {kE, kEb, kEtop, kE1}), T(B, {kEtop})},
                           {T(L, {kEtop}), T(A, {kE, kEb, kEtop}), T(B, {kEtop})}));
        r.side_b = r.side_ind2 = true;
        add(r);
    }
    VcEquation post_l2b1_1op = EQ({T(L, {kEtop}), T(A, {kEtop, kE1}), T(B, {kEb, kEtop})},
                                  {T(L, {kEtop}), T(A, {kEtop}), T(B, {kEb, kEtop})});
    {
        auto r = eq_row("psi[L2_b]_ind1-1op", true, pre_top1, post_l2b1_1op);
        r.side_b = true;
        add(r);
    }
    {
        auto r = eq_row("psi[L2_b]_ind2-1op", true, post_l2b1_1op,
                        EQ({T(L, {kEtop}), T(A, {kEtop, kE1}), T(B, {kE, kEb, kEtop})},
                           {T(L, {kEtop}), T(A, {kEtop}), T(B, {kE, kEb, kEtop})}));
        r.side_b = r.side_ind2 = true;
        add(r);
    }
    add(eq_row("psi[L1_a]_ind-1op", true,
               EQ({T(L, {kEtop}), T(A, {kE1}), T(B, {kEtop})}, {T(L, {kEtop}), T(A), T(B, {kEtop})}),
               EQ({T(L, {kEtop}), T(A, {kE1p, kE1}), T(B, {kEtop})},
                  {T(L, {kEtop}), T(A, {kE1p}), T(B, {kEtop})})));

    // --- no fresh operation: e1 is shared by every argument ---
    add(eq_row("psi[Ltop_b]_base-0op", false, {},
               EQ({T(S0, {kE1}), T(S0, {kE1}), T(S0, {kE1})}, {T(S0), T(S0), T(S0)})));
    add(eq_row("psi[Ltop_b]_ind-0op", true,
               EQ({T(L, {kE1}), T(L, {kE1}), T(L, {kE1})}, {T(L), T(L), T(L)}),
               EQ({T(L, {kEtop, kE1}), T(L, {kEtop, kE1}), T(L, {kEtop, kE1})},
                  {T(L, {kEtop}), T(L, {kEtop}), T(L, {kEtop})})));
    {
        auto r = eq_row("psi[Ltop_a]_ind-0op", true,
                        EQ({T(L, {kE1}), T(A, {kE1}), T(B, {kE1})}, {T(L), T(A), T(B)}),
                        EQ({T(L, {kEtop, kE1}), T(A, {kEtop, kE1}), T(B, {kEtop, kE1})},
                           {T(L, {kEtop}), T(A, {kEtop}), T(B, {kEtop})}));
        r.need_rc_target = true;
        add(r);
    }
    VcEquation pre_flat_0op = EQ({T(L, {kE1}), T(A, {kE1}), T(B, {kE1})}, {T(L), T(A), T(B)});
    VcEquation post_l1b1_0op =
        EQ({T(L, {kE1}), T(A, {kEb, kE1}), T(B, {kE1})}, {T(L), T(A, {kEb}), T(B)});
    add(eq_row("psi[L1_b]_ind1-0op", true, pre_flat_0op, post_l1b1_0op));
    {
        auto r = eq_row("psi[L1_b]_ind2-0op", true, post_l1b1_0op,
                        EQ({T(L, {kE1}), T(A, {kE, kEb, kE1}), T(B, {kE1})},
                           {T(L), T(A, {kE, kEb}), T(B)}));
        r.side_ind2_0op = true;
        add(r);
    }
    VcEquation post_l2b1_0op =
        EQ({T(L, {kE1}), T(A, {kE1}), T(B, {kEb, kE1})}, {T(L), T(A), T(B, {kEb})});
    add(eq_row("psi[L2_b]_ind1-0op", true, pre_flat_0op, post_l2b1_0op));
    {
        auto r = eq_row("psi[L2_b]_ind2-0op", true, post_l2b1_0op,
                        EQ({T(L, {kE1}), T(A, {kE1}), T(B, {kE, kEb, kE1})},
                           {T(L), T(A), T(B, {kE, kEb})}));
        r.side_ind2_0op = true;
        add(r);
    }
    return rows;
}

struct Env {
    const MrdtSpec* spec;
    bool crdt;
    Value states[4];       // l, a, b, initial
    Event roles[kRoleCount];
};

Value eval_term(const Env& env, const VcTerm& t) {
    Value s = env.states[t.base];
    for (Role r : t.roles) s = env.spec->step(s, env.roles[r]);
    return s;
}

bool eval_equation(const Env& env, const VcEquation& eq, Value* lhs_out = nullptr,
                   Value* rhs_out = nullptr) {
    std::vector<Value> args, inner;
    for (auto& t : eq.args) args.push_back(eval_term(env, t));
    for (auto& t : eq.inner) inner.push_back(eval_term(env, t));
    Value lhs, minner;
    if (env.crdt) {
        lhs = env.spec->merge2(args[1], args[2]);
        minner = env.spec->merge2(inner[1], inner[2]);
    } else {
        lhs = env.spec->merge3(args[0], args[1], args[2]);
        minner = env.spec->merge3(inner[0], inner[1], inner[2]);
    }
    Value rhs = env.spec->step(minner, env.roles[kE1]);
    if (lhs_out) *lhs_out = lhs;
    if (rhs_out) *rhs_out = rhs;
    return lhs == rhs;
}

// Operation candidates for a role, given already-chosen earlier roles.
std::vector<Op> candidates(const MrdtSpec& sp, const VcRowDef& row, Role role, const Op ops[kRoleCount]) {
    std::vector<Op> out;
    for (const Op& o : sp.alphabet) {
        bool ok = true;
        switch (role) {
            case kE2:
                if (row.side_2op) ok = sp.rc(o, ops[kE1]) || sp.commutes(o, ops[kE1]);
                break;
            case kEtop:
                if (row.need_rc_target || row.side_b) {
                    bool target = false;
                    for (const Op& x : sp.alphabet)
                        if (sp.rc(x, o)) target = true;
                    ok = target || !row.need_rc_target;
                    if (row.side_b && !target) ok = false;  // rc(eb,etop) needs a source
                }
                break;
            case kEb:
                if (row.side_b) ok = sp.rc(o, ops[kEtop]);
                break;
            case kE:
                if (row.side_ind2)
                    ok = !sp.commutes(o, ops[kEb]) || sp.rc(o, ops[kEtop]);
                else if (row.side_ind2_0op)
                    ok = !sp.commutes(o, ops[kEb]) || sp.rc(o, ops[kE1]);
                break;
            case kE2p:
                if (row.conc_e2p) ok = sp.rc(o, ops[kE1]) || sp.commutes(o, ops[kE1]);
                break;
            default:
                break;
        }
        if (ok) out.push_back(o);
    }
    return out;
}

const Role kChoiceOrder[] = {kE1, kE2, kEtop, kEtop2, kEb, kE, kE1p, kE2p};

bool choose_ops(const MrdtSpec& sp, const VcRowDef& row, Rng& rng, Op ops[kRoleCount]) {
    for (Role role : kChoiceOrder) {
        std::vector<Op> cand = candidates(sp, row, role, ops);
        if (cand.empty()) return false;
        ops[role] = cand[rng.below(cand.size())];
    }
    return true;
}

bool row_satisfiable(const MrdtSpec& sp, const VcRowDef& row) {
    Op ops[kRoleCount];
    std::vector<Role> constrained = {kE1, kE2, kEtop, kEb, kE, kE2p};
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
        if (i == constrained.size()) return true;
        Role role = constrained[i];
        for (const Op& o : candidates(sp, row, role, ops)) {
            ops[role] = o;
            if (go(i + 1)) return true;
        }
        return false;
    };
    return go(0);
}

struct GenTriple {
    Value l, a, b;
    Timestamp max_ts = 0;
    std::vector<Value> lgen, agen, bgen;  // [op, ts, rep] entries
};

GenTriple gen_triple(const MrdtSpec& sp, Rng& rng) {
    GenTriple g;
    Timestamp ts = 0;
    auto grow = [&](Value s, ReplicaId rep, std::vector<Value>& log) {
        std::uint64_t n = rng.below(3);
        for (std::uint64_t i = 0; i < n; ++i) {
            const Op& op = rng.pick(sp.alphabet);
            ++ts;
            s = sp.apply(s, op, ts, rep);
            log.push_back(Value::array({op, ts, rep}));
        }
        return s;
    };
    g.l = grow(sp.initial, 0, g.lgen);
    g.a = grow(g.l, 1, g.agen);
    g.b = grow(g.l, 2, g.bgen);
    g.max_ts = ts;
    return g;
}

Value make_record(const MrdtSpec& sp, bool crdt, const VcRowDef& row, const GenTriple& g,
                  const Env& env, const Value& lhs, const Value& rhs) {
    Value roles = Value::object();
    for (int r = 0; r < kRoleCount; ++r)
        roles[kRoleNames[r]] = Value::array({env.roles[r].op, env.roles[r].ts, env.roles[r].rep});
    return Value{{"type", "vc-case"}, {"datatype", sp.name},   {"mode", crdt ? "crdt" : "mrdt"},
                 {"row", row.name},   {"lgen", g.lgen},        {"agen", g.agen},
                 {"bgen", g.bgen},    {"roles", roles},        {"lhs", lhs},
                 {"rhs", rhs}};
}

}  // namespace

const std::vector<VcRowDef>& vc_rows() {
    static const std::vector<VcRowDef> rows = build_rows();
    return rows;
}

std::vector<VcRowReport> run_vc(const MrdtSpec& sp, bool crdt, int cases, std::uint64_t seed) {
    std::vector<VcRowReport> out;
    Rng root(seed);
    for (const VcRowDef& row : vc_rows()) {
        VcRowReport rep;
        rep.row = row.name;
        rep.cases = cases;
        Rng rng = root.derive(fnv64(row.name));
        if (row.kind == 0 && !row_satisfiable(sp, row)) {
            rep.skipped = true;
            out.push_back(std::move(rep));
            continue;
        }
        for (int c = 0; c < cases; ++c) {
            GenTriple g = gen_triple(sp, rng);
            if (row.kind == 1) {  // merge arguments can swap
                bool ok = crdt ? (sp.merge2(g.a, g.b) == sp.merge2(g.b, g.a))
                               : (sp.merge3(g.l, g.a, g.b) == sp.merge3(g.l, g.b, g.a));
                ++rep.satisfied;
                if (!ok) ++rep.failed;
                continue;
            }
            if (row.kind == 2) {  // merging a state with itself is the identity
                bool ok = crdt ? (sp.merge2(g.a, g.a) == g.a) : (sp.merge3(g.a, g.a, g.a) == g.a);
                ++rep.satisfied;
                if (!ok) ++rep.failed;
                continue;
            }
            Op ops[kRoleCount];
            bool chosen = false;
            for (int attempt = 0; attempt < 40 && !chosen; ++attempt)
                chosen = choose_ops(sp, row, rng, ops);
            if (!chosen) continue;
            Env env;
            env.spec = &sp;
            env.crdt = crdt;
            env.states[0] = g.l;
            env.states[1] = g.a;
            env.states[2] = g.b;
            env.states[3] = sp.initial;
            // fresh events: timestamps above the generated history, one replica per role
            for (int r = 0; r < kRoleCount; ++r)
                env.roles[r] = Event{g.max_ts + 1 + r, 10 + r, ops[r]};
            if (row.has_pre && !eval_equation(env, row.pre)) continue;
            ++rep.satisfied;
            Value lhs, rhs;
            if (!eval_equation(env, row.post, &lhs, &rhs)) {
                ++rep.failed;
                if (rep.examples.size() < 3) {
                    VcCounterexample ce;
                    ce.record = make_record(sp, crdt, row, g, env, lhs, rhs);
                    ce.summary = sp.name + " " + row.name + ": " + lhs.dump() + " != " + rhs.dump();
                    rep.examples.push_back(std::move(ce));
                }
            }
        }
        out.push_back(std::move(rep));
    }
    return out;
}

Value vc_report_json(const MrdtSpec& spec, bool crdt, const std::vector<VcRowReport>& reports) {
    Value rows = Value::array();
    for (const auto& r : reports) {
        Value row{{"row", r.row},       {"cases", r.cases},   {"satisfied", r.satisfied},
                  {"failed", r.failed}, {"skipped", r.skipped}};
        Value exs = Value::array();
        for (const auto& e : r.examples) exs.push_back(e.record);
        row["counterexamples"] = exs;
        rows.push_back(row);
    }
    return Value{{"datatype", spec.name}, {"mode", crdt ? "crdt" : "mrdt"}, {"rows", rows}};
}

bool replay_vc_case(const Value& record, std::string* msg) {
    auto fail = [&](const std::string& m) {
        if (msg) *msg = m;
        return false;
    };
    if (!record.is_object() || record.value("type", "") != "vc-case") return fail("not a vc-case record");
    auto spec = find_datatype(record.at("datatype"));
    if (!spec) return fail("unknown datatype " + record.at("datatype").dump());
    bool crdt = record.value("mode", "mrdt") == "crdt";
    const VcRowDef* row = nullptr;
    for (const auto& r : vc_rows())
        if (r.name == record.at("row")) row = &r;
    if (!row || row->kind != 0) return fail("unknown row " + record.at("row").dump());

    Env env;
    env.spec = &*spec;
    env.crdt = crdt;
    auto fold = [&](const Value& start, const Value& log) {
        Value s = start;
        for (const auto& step : log)
            s = spec->apply(s, step[0], step[1].get<Timestamp>(), step[2].get<int>());
        return s;
    };
    env.states[0] = fold(spec->initial, record.at("lgen"));
    env.states[1] = fold(env.states[0], record.at("agen"));
    env.states[2] = fold(env.states[0], record.at("bgen"));
    env.states[3] = spec->initial;
    for (int r = 0; r < kRoleCount; ++r) {
        const Value& e = record.at("roles").at(kRoleNames[r]);
        env.roles[r] = Event{e[1].get<Timestamp>(), e[2].get<int>(), e[0]};
    }
    Value lhs, rhs;
    bool holds = eval_equation(env, row->post, &lhs, &rhs);
    if (msg) {
        *msg = record.at("datatype").get<std::string>() + " " + record.at("row").get<std::string>() +
               (holds ? ": equation holds (violation did not reproduce)"
                      : ": " + lhs.dump() + " != " + rhs.dump());
    }
    return !holds;
}

std::vector<std::string> check_rc_non_comm(const MrdtSpec& sp, int samples, std::uint64_t seed) {
    std::vector<std::string> out;
    Rng rng(seed);
    auto sample_state = [&](Rng& r) {
        Value s = sp.initial;
        Timestamp ts = 0;
        std::uint64_t n = r.below(4);
        for (std::uint64_t i = 0; i < n; ++i) s = sp.apply(s, r.pick(sp.alphabet), ++ts, 0);
        return std::pair<Value, Timestamp>{s, ts};
    };
    for (const Op& o1 : sp.alphabet) {
        for (const Op& o2 : sp.alphabet) {
            if (sp.rc(o1, o2)) {
                if (sp.commutes(o1, o2))
                    out.push_back("rc pair declared commuting: " + o1.dump() + "," + o2.dump());
                if (sp.rc(o2, o1))
                    out.push_back("rc holds in both directions: " + o1.dump() + "," + o2.dump());
            }
            bool behav_diff = false;
            for (int c = 0; c < samples && !behav_diff; ++c) {
                auto [s, ts] = sample_state(rng);
                Value x = sp.apply(sp.apply(s, o1, ts + 1, 8), o2, ts + 2, 9);
                Value y = sp.apply(sp.apply(s, o2, ts + 2, 9), o1, ts + 1, 8);
                if (x != y) behav_diff = true;
            }
            if (sp.commutes(o1, o2)) {
                if (behav_diff)
                    out.push_back("declared commuting but order-dependent: " + o1.dump() + "," + o2.dump());
            } else {
                bool related = sp.rc(o1, o2) != sp.rc(o2, o1);
                if (!related)
                    out.push_back("non-commuting pair without a unique rc direction: " + o1.dump() +
                                  "," + o2.dump());
                if (!behav_diff && o1 != o2)
                    out.push_back("declared non-commuting but no order-dependent state found: " +
                                  o1.dump() + "," + o2.dump());
            }
        }
    }
    return out;
}

std::vector<std::string> check_cond_comm(const MrdtSpec& sp, int samples, std::uint64_t seed) {
    std::vector<std::string> out;
    Rng rng(seed);
    for (const Op& o1 : sp.alphabet)
        for (const Op& o2 : sp.alphabet) {
            if (!sp.rc(o1, o2)) continue;
            for (const Op& o3 : sp.alphabet) {
                if (sp.commutes(o2, o3)) continue;
                // both resolutions of the conflict must agree once o3 lands
                for (int c = 0; c < samples; ++c) {
                    Value s = sp.initial;
                    Timestamp ts = 0;
                    std::uint64_t n = rng.below(3);
                    for (std::uint64_t i = 0; i < n; ++i) s = sp.apply(s, rng.pick(sp.alphabet), ++ts, 0);
                    Value x = sp.apply(sp.apply(s, o2, ts + 1, 8), o1, ts + 2, 9);
                    Value y = sp.apply(sp.apply(s, o1, ts + 2, 9), o2, ts + 1, 8);
                    std::uint64_t m = rng.below(3);
                    Timestamp t2 = ts + 3;
                    for (std::uint64_t i = 0; i < m; ++i) {
                        const Op& op = rng.pick(sp.alphabet);
                        x = sp.apply(x, op, t2, 0);
                        y = sp.apply(y, op, t2, 0);
                        ++t2;
                    }
                    x = sp.apply(x, o3, t2, 1);
                    y = sp.apply(y, o3, t2, 1);
                    if (x != y) {
                        out.push_back("conflict resolution not erased by " + o3.dump() + " after " +
                                      o1.dump() + "," + o2.dump());
                        break;
                    }
                }
            }
        }
    return out;
}

std::vector<std::string> check_no_rc_chain(const MrdtSpec& sp) {
    std::vector<std::string> out;
    for (const Op& o1 : sp.alphabet)
        for (const Op& o2 : sp.alphabet) {
            if (!sp.rc(o1, o2)) continue;
            for (const Op& o3 : sp.alphabet)
                if (sp.rc(o2, o3))
                    out.push_back("rc chain: " + o1.dump() + " -> " + o2.dump() + " -> " + o3.dump());
            if (sp.rc(o2, o1) && sp.rc(o1, o2))
                out.push_back("rc cycle: " + o1.dump() + " <-> " + o2.dump());
        }
    for (const Op& o : sp.alphabet)
        if (sp.rc(o, o)) out.push_back("rc reflexive: " + o.dump());
    return out;
}

}  // namespace mrdt
