#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bdm {

/*
 * A machine state: M battery charges b[0..M-1], a drain charge d and the
 * main-cycle index (layer) in 0..M.  Canonical states satisfy
 *
 *     layer + d + sum(b) == 0
 *
 * which pins d given (b, layer); we keep d explicit because the subcycle
 * phase mutates it battery by battery.
 */
struct State {
    std::vector<int32_t> b;
    int32_t d = 0;
    int32_t layer = 0;

    State() = default;
    State(std::vector<int32_t> batteries, int32_t drain, int32_t t)
        : b(std::move(batteries)), d(drain), layer(t) {}

    int m() const { return static_cast<int>(b.size()); }

    int64_t charge_sum() const {
        return std::accumulate(b.begin(), b.end(), static_cast<int64_t>(d));
    }

    bool satisfies_invariant() const {
        return !b.empty() && layer >= 0 && layer <= m() && layer + charge_sum() == 0;
    }

    bool operator==(const State& o) const {
        return d == o.d && layer == o.layer && b == o.b;
    }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < b.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(b[i]);
        }
        s += ";";
        s += std::to_string(d);
        s += ")_";
        s += std::to_string(layer);
        return s;
    }
};

/// The unique zero-inhibition state of a layer: b[i] = -1 for i < T, else 0, d = 0.
inline State base_state(int m, int layer) {
    if (m < 1) throw std::invalid_argument("base_state: M must be >= 1");
    if (layer < 0 || layer > m) throw std::invalid_argument("base_state: layer out of range");
    std::vector<int32_t> b(static_cast<size_t>(m), 0);
    for (int i = 0; i < layer; ++i) b[static_cast<size_t>(i)] = -1;
    return State(std::move(b), 0, layer);
}

inline State origin_state(int m) { return base_state(m, 0); }

struct StateHash {
    size_t operator()(const State& s) const {
        uint64_t h = 0x9e3779b97f4a7c15ULL ^ (static_cast<uint64_t>(s.layer) << 32 |
                                              static_cast<uint32_t>(s.d));
        for (int32_t v : s.b) {
            h ^= static_cast<uint64_t>(static_cast<uint32_t>(v)) + 0x9e3779b97f4a7c15ULL +
                 (h << 6) + (h >> 2);
            h *= 0xbf58476d1ce4e5b9ULL;
        }
        h ^= h >> 31;
        return static_cast<size_t>(h);
    }
};

inline void require_valid_state(const State& s, const char* where) {
    if (s.m() < 1) throw std::invalid_argument(std::string(where) + ": M must be >= 1");
    if (!s.satisfies_invariant())
        throw std::invalid_argument(std::string(where) + ": state " + s.to_string() +
                                    " violates layer invariant T + d + sum(b) == 0");
}

/// Strict ordering used for canonical layer lists: lexicographic b, then d.
inline bool state_lex_less(const State& a, const State& b) {
    if (a.b != b.b) return a.b < b.b;
    return a.d < b.d;
}

}  // namespace bdm
