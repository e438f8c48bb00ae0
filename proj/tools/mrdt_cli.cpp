#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mrdt/datatypes.hpp"
#include "mrdt/lincheck.hpp"
#include "mrdt/trace.hpp"
#include "mrdt/vcsuite.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

std::string read_file(const std::string& path, bool* ok) {
    std::ifstream in(path);
    *ok = static_cast<bool>(in);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
    return static_cast<bool>(out);
}

struct CommonOpts {
    std::string datatype = "orset";
    std::string mode = "mrdt";
    std::vector<std::string> alphabet;
    std::uint64_t seed = 1;
    std::string out_path;
};

int run_fuzz(const CommonOpts& c, int replicas, int events, int iters) {
    auto spec = mrdt::find_datatype(c.datatype, c.alphabet);
    if (!spec) {
        std::cerr << "unknown datatype: " << c.datatype << "\n";
        return kUsage;
    }
    bool crdt = c.mode == "crdt";
    if (crdt && !spec->has_merge2()) {
        std::cerr << c.datatype << " has no two-way merge\n";
        return kUsage;
    }
    mrdt::FuzzOptions opt{replicas, events};
    mrdt::Rng rng(c.seed);
    bool any_inconclusive = false;
    for (int i = 0; i < iters; ++i) {
        mrdt::Rng it = rng.derive(i + 1);
        mrdt::Trace t = mrdt::random_trace(*spec, crdt, opt, it);
        t.seed = c.seed;
        t.alphabet = c.alphabet;
        mrdt::RunResult r = mrdt::run_trace(t, true, c.seed + i);
        if (!r.violations.empty()) {
            std::cout << "violation at iteration " << i << ":\n";
            for (auto& v : r.violations) std::cout << "  " << v << "\n";
            t.digest = r.digest;
            auto still_failing = [&](const mrdt::Trace& cand) {
                return !mrdt::run_trace(cand, true, c.seed + i).violations.empty();
            };
            mrdt::Trace small = mrdt::shrink_trace(t, still_failing);
            small.digest = mrdt::run_trace(small, false).digest;
            std::string body = mrdt::serialize_trace(small);
            if (!c.out_path.empty() && write_file(c.out_path, body))
                std::cout << "shrunk trace (" << small.steps.size() << " steps) written to "
                          << c.out_path << "\n";
            else
                std::cout << body;
            return kViolation;
        }
        if (r.inconclusive) any_inconclusive = true;
    }
    std::cout << "fuzz: " << iters << " executions of " << c.datatype << " (" << c.mode
              << "), no violations\n";
    return any_inconclusive ? kInconclusive : kOk;
}

int run_vc_cmd(const CommonOpts& c, int cases) {
    auto spec = mrdt::find_datatype(c.datatype, c.alphabet);
    if (!spec) {
        std::cerr << "unknown datatype: " << c.datatype << "\n";
        return kUsage;
    }
    bool crdt = c.mode == "crdt";
    if (crdt && !spec->has_merge2()) {
        std::cerr << c.datatype << " has no two-way merge\n";
        return kUsage;
    }
    for (auto& msg : mrdt::check_no_rc_chain(*spec)) std::cout << "relation check: " << msg << "\n";
    auto reports = mrdt::run_vc(*spec, crdt, cases, c.seed);
    int failures = 0;
    for (const auto& r : reports) {
        std::cout << r.row << ": ";
        if (r.skipped) {
            std::cout << "skipped (side conditions unsatisfiable)\n";
            continue;
        }
        std::cout << r.satisfied << "/" << r.cases << " non-vacuous, " << r.failed << " failed\n";
        failures += r.failed;
        for (const auto& e : r.examples) std::cout << "  counterexample: " << e.summary << "\n";
    }
    if (!c.out_path.empty()) {
        mrdt::Value j = mrdt::vc_report_json(*spec, crdt, reports);
        if (!write_file(c.out_path, j.dump(2) + "\n")) {
            std::cerr << "cannot write " << c.out_path << "\n";
            return kUsage;
        }
        std::cout << "report written to " << c.out_path << "\n";
    }
    return failures ? kViolation : kOk;
}

int run_replay(const std::string& path, std::uint64_t seed) {
    bool ok = false;
    std::string text = read_file(path, &ok);
    if (!ok) {
        std::cerr << "cannot read " << path << "\n";
        return kUsage;
    }
    // a counterexample report from `vc` replays differently from a trace
    mrdt::Value j = mrdt::Value::parse(text, nullptr, false);
    if (j.is_object() && j.value("type", "") == "vc-case") {
        std::string msg;
        bool reproduced = mrdt::replay_vc_case(j, &msg);
        std::cout << msg << "\n";
        return reproduced ? kViolation : kOk;
    }
    std::string err;
    auto t = mrdt::parse_trace(text, &err);
    if (!t) {
        std::cerr << "parse error: " << err << "\n";
        return kUsage;
    }
    mrdt::RunResult r = mrdt::run_trace(*t, true, seed);
    for (auto& v : r.violations) std::cout << "violation: " << v << "\n";
    if (!t->digest.empty() && t->digest != r.digest) {
        std::cout << "digest mismatch: expected " << t->digest << ", got " << r.digest << "\n";
        return kViolation;
    }
    std::cout << "replayed " << t->steps.size() << " steps, digest " << r.digest << "\n";
    if (!r.violations.empty()) return kViolation;
    return r.inconclusive ? kInconclusive : kOk;
}

int run_shrink(const std::string& path, const std::string& out_path, std::uint64_t seed) {
    bool ok = false;
    std::string text = read_file(path, &ok);
    if (!ok) {
        std::cerr << "cannot read " << path << "\n";
        return kUsage;
    }
    std::string err;
    auto t = mrdt::parse_trace(text, &err);
    if (!t) {
        std::cerr << "parse error: " << err << "\n";
        return kUsage;
    }
    auto still_failing = [&](const mrdt::Trace& cand) {
        return !mrdt::run_trace(cand, true, seed).violations.empty();
    };
    if (!still_failing(*t)) {
        std::cout << "trace does not exhibit a violation; nothing to shrink\n";
        return kOk;
    }
    mrdt::Trace small = mrdt::shrink_trace(*t, still_failing);
    small.digest = mrdt::run_trace(small, false).digest;
    std::string body = mrdt::serialize_trace(small);
    std::cout << "shrunk from " << t->steps.size() << " to " << small.steps.size() << " steps\n";
    if (!out_path.empty()) {
        if (!write_file(out_path, body)) {
            std::cerr << "cannot write " << out_path << "\n";
            return kUsage;
        }
        std::cout << "written to " << out_path << "\n";
    } else {
        std::cout << body;
    }
    return kViolation;  // the (shrunk) trace still demonstrates the violation
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"replicated datatype simulator, linearizability checker and property suite"};
    app.require_subcommand(1);

    CommonOpts c;
    int replicas = 3, events = 8, iters = 100, cases = 1000;
    std::string path, out_path;

    auto add_common = [&](CLI::App* cmd, bool with_mode = true) {
        cmd->add_option("--datatype", c.datatype, "datatype name from the catalog");
        if (with_mode)
            cmd->add_option("--mode", c.mode, "mrdt or crdt")->check(CLI::IsMember({"mrdt", "crdt"}));
        cmd->add_option("--alphabet", c.alphabet, "element symbols for parameterized operations");
        cmd->add_option("--seed", c.seed, "random seed");
        cmd->add_option("--out", c.out_path, "output file");
    };

    CLI::App* fuzz = app.add_subcommand("fuzz", "run random executions and check each version");
    add_common(fuzz);
    fuzz->add_option("--replicas", replicas, "max replicas per execution")->check(CLI::Range(1, 16));
    fuzz->add_option("--events", events, "max update events per execution")->check(CLI::Range(0, 24));
    fuzz->add_option("--iters", iters, "number of executions");

    CLI::App* vc = app.add_subcommand("vc", "run the property suite for one datatype");
    add_common(vc);
    vc->add_option("--cases", cases, "cases per property row");

    CLI::App* replay = app.add_subcommand("replay", "re-run a trace or counterexample file");
    replay->add_option("file", path, "trace or vc counterexample file")->required();
    replay->add_option("--seed", c.seed, "random seed for the witness search");

    CLI::App* shrink = app.add_subcommand("shrink", "minimize a violating trace");
    shrink->add_option("file", path, "trace file")->required();
    shrink->add_option("--out", out_path, "where to write the shrunk trace");
    shrink->add_option("--seed", c.seed, "random seed for the witness search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    if (fuzz->parsed()) return run_fuzz(c, replicas, events, iters);
    if (vc->parsed()) return run_vc_cmd(c, cases);
    if (replay->parsed()) return run_replay(path, c.seed);
    if (shrink->parsed()) return run_shrink(path, out_path, c.seed);
    return kUsage;
}
