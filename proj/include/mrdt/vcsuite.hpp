#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mrdt/core.hpp"

namespace mrdt {

// Roles of the fresh events a row draws on top of the generated state triple.
enum Role { kE1, kE2, kEtop, kEtop2, kEb, kE, kE1p, kE2p, kRoleCount };
const char* role_name(Role r);

struct VcTerm {
    int base = 0;  // 0=l 1=a 2=b 3=initial
    std::vector<Role> roles;
};

struct VcEquation {
    std::vector<VcTerm> args;   // merge(args) ...
    std::vector<VcTerm> inner;  // ... == step(merge(inner), e1)
};

struct VcRowDef {
    std::string name;
    int kind = 0;  // 0 equation, 1 merge commutativity, 2 merge idempotence
    bool has_pre = false;
    VcEquation pre, post;
    // side conditions over the drawn operations
    bool side_2op = false;       // rc(e2,e1) or commute
    bool side_b = false;         // rc(eb, etop)
    bool side_ind2 = false;      // !commute(e,eb) or rc(e,etop)
    bool side_ind2_0op = false;  // !commute(e,eb) or rc(e,e1)
    bool need_rc_target = false; // etop must be the target of some rc pair
    bool conc_e2p = false;       // rc(e2p,e1) or commute (realizability of peeling e1 last)
};

const std::vector<VcRowDef>& vc_rows();

struct VcCounterexample {
    Value record;  // self-contained replayable description
    std::string summary;
};

struct VcRowReport {
    std::string row;
    int cases = 0;
    int satisfied = 0;  // non-vacuous: side conditions and induction hypothesis held
    int failed = 0;
    bool skipped = false;  // side conditions unsatisfiable over this alphabet
    std::vector<VcCounterexample> examples;
};

std::vector<VcRowReport> run_vc(const MrdtSpec& spec, bool crdt, int cases, std::uint64_t seed);

Value vc_report_json(const MrdtSpec& spec, bool crdt, const std::vector<VcRowReport>& reports);

// Re-evaluates a recorded counterexample; returns true when the violation
// still reproduces. `msg` receives a description either way.
bool replay_vc_case(const Value& record, std::string* msg);

// --- declared-relation sanity checks ---

// Cross-validates declared commutativity behaviorally and checks that rc pairs
// are declared non-commuting, hold in exactly one direction, and that rc has
// no cycles over the alphabet.
std::vector<std::string> check_rc_non_comm(const MrdtSpec& spec, int samples, std::uint64_t seed);

// Conditional commutativity: an rc edge must stay resolvable after any third
// operation runs.
std::vector<std::string> check_cond_comm(const MrdtSpec& spec, int samples, std::uint64_t seed);

// Rejects alphabets whose rc relation chains (a before b before c).
std::vector<std::string> check_no_rc_chain(const MrdtSpec& spec);

}  // namespace mrdt
