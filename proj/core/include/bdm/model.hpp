#pragma once

#include "bdm/classes.hpp"
#include "bdm/dynamics.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bdm {

struct StateRef {
    int32_t layer = -1;
    int32_t idx = -1;
    bool operator==(const StateRef&) const = default;
};

/// Compact stored transition: one decision path. Discharge records live in
/// the model's shared pool.
struct ModelEdge {
    int32_t to = -1;           // index within the successor layer
    uint32_t dischargeOfs = 0; // into BoundedModel::dischargePool
    uint8_t a = 0;             // (q-1) exponent
    uint8_t bExp = 0;          // 1/q exponent
    uint8_t inhibitions = 0;
    uint8_t nDischarges = 0;
};

struct LayerEdges {
    std::vector<uint32_t> rowStart;  // per source state, size states+1
    std::vector<ModelEdge> edges;    // grouped by source state, DFS order
};

/*
 * The finite model for accuracy K0: every state of class <= K0 in all M+1
 * layers, with the forced-discharge transition structure.  States are kept
 * in canonical order (class, lexicographic b, d) per layer, so indices are
 * stable across builds.
 */
struct BoundedModel {
    int m = 0;
    int k0 = 0;
    std::vector<std::vector<State>> layers;     // [T][idx]
    std::vector<std::vector<int>> classOfIdx;   // [T][idx] -> K
    ClassMap classes;                           // includes every stored state
    std::vector<LayerEdges> transitions;        // [T]: edges into layer T+1 (mod M+1)
    std::vector<Discharge> dischargePool;
    std::unordered_map<State, StateRef, StateHash> index;

    int layer_count() const { return m + 1; }
    size_t layer_size(int t) const { return layers[static_cast<size_t>(t)].size(); }
    size_t state_count() const {
        size_t n = 0;
        for (const auto& l : layers) n += l.size();
        return n;
    }
    int next_layer(int t) const { return t == m ? 0 : t + 1; }

    const State& state_at(StateRef r) const {
        return layers[static_cast<size_t>(r.layer)][static_cast<size_t>(r.idx)];
    }
    int class_at(StateRef r) const {
        return classOfIdx[static_cast<size_t>(r.layer)][static_cast<size_t>(r.idx)];
    }
    StateRef find(const State& s) const {
        auto it = index.find(s);
        return it == index.end() ? StateRef{} : it->second;
    }

    std::span<const ModelEdge> outcomes_of(int layer, int idx) const {
        const auto& le = transitions[static_cast<size_t>(layer)];
        return {le.edges.data() + le.rowStart[static_cast<size_t>(idx)],
                le.edges.data() + le.rowStart[static_cast<size_t>(idx) + 1]};
    }
    std::span<const Discharge> discharges_of(const ModelEdge& e) const {
        return {dischargePool.data() + e.dischargeOfs,
                dischargePool.data() + e.dischargeOfs + e.nDischarges};
    }
    Monomial monomial_of(const ModelEdge& e) const {
        return Monomial{e.a, e.bExp, 1};
    }
};

/// Builds the (M, K0) model. Verifies the structural facts the rest of the
/// code relies on: per-layer class sizes equal p_K(M), one base state per
/// layer, successor closure.
BoundedModel build_bounded_model(int m, int k0, const ClassSearchLimits& limits = {});

/// Counts the layer-T states by (class K, drain d).
std::map<std::pair<int, int>, int64_t> class_deviation_histogram(const BoundedModel& model,
                                                                 int layer);

}  // namespace bdm
