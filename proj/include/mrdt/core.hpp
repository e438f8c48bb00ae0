#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace mrdt {

// States and operations are represented as canonical JSON values: sets are
// sorted arrays without duplicates, maps are objects with string keys. All
// equality checks in the library are structural equality on these values.
using Value = nlohmann::json;
using Op = nlohmann::json;

using Timestamp = std::int64_t;
using ReplicaId = int;

struct Event {
    Timestamp ts = 0;
    ReplicaId rep = 0;
    Op op;
};

// A replicated datatype: sequential step function, three-way merge against a
// common ancestor, optional two-way merge (state-based CRDT mode), a read
// query, and the declared conflict-resolution / commutativity relations over
// operations.
struct MrdtSpec {
    std::string name;
    Value initial;
    std::function<Value(const Value&, const Op&, Timestamp, ReplicaId)> apply;
    std::function<Value(const Value&, const Value&, const Value&)> merge3;
    std::function<Value(const Value&, const Value&)> merge2;  // null if unsupported
    std::function<Value(const Value&, const Op&)> query;
    std::function<bool(const Op&, const Op&)> rc;        // rc(o1,o2): o1 ordered before o2
    std::function<bool(const Op&, const Op&)> commutes;  // declared commutativity
    std::vector<Op> alphabet;  // update operations
    std::vector<Op> queries;   // read-only operations

    bool has_merge2() const { return static_cast<bool>(merge2); }

    Value step(const Value& s, const Event& e) const { return apply(s, e.op, e.ts, e.rep); }
};

// --- canonical set helpers (sorted unique arrays) ---

inline Value jset() { return Value::array(); }

inline bool jset_contains(const Value& s, const Value& v) {
    for (const auto& x : s)
        if (x == v) return true;
    return false;
}

inline void jset_insert(Value& s, const Value& v) {
    auto it = s.begin();
    for (; it != s.end(); ++it) {
        if (*it == v) return;
        if (v < *it) break;
    }
    s.insert(it, v);
}

inline Value jset_union(const Value& a, const Value& b) {
    Value out = a;
    for (const auto& x : b) jset_insert(out, x);
    return out;
}

inline Value jset_inter(const Value& a, const Value& b) {
    Value out = jset();
    for (const auto& x : a)
        if (jset_contains(b, x)) jset_insert(out, x);
    return out;
}

inline Value jset_diff(const Value& a, const Value& b) {
    Value out = jset();
    for (const auto& x : a)
        if (!jset_contains(b, x)) jset_insert(out, x);
    return out;
}

template <class Pred>
inline Value jset_filter(const Value& a, Pred p) {
    Value out = jset();
    for (const auto& x : a)
        if (p(x)) jset_insert(out, x);
    return out;
}

// --- deterministic RNG (identical streams on every platform) ---

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    bool chance(unsigned percent) { return below(100) < percent; }

    template <class T>
    const T& pick(const std::vector<T>& xs) {
        return xs[below(xs.size())];
    }

    Rng derive(std::uint64_t salt) const {
        return Rng(state_ ^ (salt * 0xd6e8feb86659fd93ULL + 0x2545f4914f6cdd1dULL));
    }

  private:
    std::uint64_t state_;
};

// FNV-1a over the canonical dump; used for trace digests.
inline std::uint64_t fnv64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v);

}  // namespace mrdt
