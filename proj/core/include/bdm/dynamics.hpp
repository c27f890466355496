#pragma once

#include "bdm/state.hpp"
#include "bdm/weight.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace bdm {

/// Class labels: minimum number of inhibitions over all paths from the origin.
using ClassMap = std::unordered_map<State, int, StateHash>;

/// One swap of an eligible battery into the drain. Heights are measured
/// against the drain value current at the moment of the swap.
struct Discharge {
    int32_t battery = 0;  // 1-based
    int32_t height = 0;   // b_t - d just before the swap, always >= 1

    bool operator==(const Discharge&) const = default;
};

/// One surviving decision path of a subcycle phase.
struct Outcome {
    State state;
    Weight weight;  // single monomial for a decision path
    std::vector<Discharge> discharges;
    int inhibitions = 0;

    bool operator==(const Outcome&) const = default;
};

/*
 * Budget policy for the subcycle phase.  Unbounded keeps every decision
 * branch.  When a class map is given, a branch survives only if some
 * completion of the decision path ends in a state present in the map
 * (class <= K0); a lone surviving branch is forced and takes factor 1.
 */
struct SubcyclePolicy {
    const ClassMap* classes = nullptr;

    static SubcyclePolicy unbounded() { return {}; }
    static SubcyclePolicy bounded_by(const ClassMap& map) { return {&map}; }
    bool bounded() const { return classes != nullptr; }
};

/*
 * Deterministic phase. For T < M the drain is decremented and the layer
 * advances; for T = M every battery is incremented and the layer wraps to 0.
 * Preserves the layer invariant.
 */
State update_phase(const State& s);

/*
 * Stochastic phase on a post-update state: batteries are visited in index
 * order 1..M with the drain mutated by earlier swaps in the same pass.
 * An eligible battery (b_t > d) discharges with weight (q-1)/q or is
 * inhibited with weight 1/q; an ineligible battery does nothing.
 * Returns one Outcome per surviving decision path, discharge branch first,
 * in depth-first order.  The weights sum to 1 identically in q.
 */
std::vector<Outcome> subcycle_phase(const State& postUpdate,
                                    const SubcyclePolicy& policy = SubcyclePolicy::unbounded());

/// update_phase followed by subcycle_phase.
std::vector<Outcome> step(const State& s,
                          const SubcyclePolicy& policy = SubcyclePolicy::unbounded());

/// Polynomial identity check: evaluates the outcome weights at 2M+2 distinct
/// rational points q > 1 and tests that they sum to exactly 1 at each.
bool weights_sum_to_one(const std::vector<Outcome>& outcomes, int m);

}  // namespace bdm
