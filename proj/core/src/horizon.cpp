#include "bdm/horizon.hpp"

#include "bdm/solver.hpp"

#include <utility>

namespace bdm {

HorizonDistribution horizon_distribution(const BoundedModel& model, const BigRat& q, long steps) {
    require_q_above_one(q);
    if (steps < 0) throw std::invalid_argument("horizon_distribution: steps must be >= 0");
    const EvaluatedTransitions<BigRat> ev = evaluate_transitions(model, q);

    // Joint law over (state index in the current layer, jumps so far).
    std::map<std::pair<int32_t, long>, BigRat> joint;
    joint[{0, 0}] = 1;

    HorizonDistribution out;
    out.steps = steps;

    int t = 0;
    for (long n = 0; n < steps; ++n) {
        std::map<std::pair<int32_t, long>, BigRat> next;
        const auto& le = model.transitions[static_cast<size_t>(t)];
        const auto& w = ev.perLayer[static_cast<size_t>(t)];
        for (const auto& [key, p] : joint) {
            const auto [src, jumps] = key;
            for (uint32_t e = le.rowStart[static_cast<size_t>(src)];
                 e < le.rowStart[static_cast<size_t>(src) + 1]; ++e) {
                const ModelEdge& edge = le.edges[e];
                const BigRat mass = p * w[e];
                next[{edge.to, jumps + edge.nDischarges}] += mass;
                for (const Discharge& d : model.discharges_of(edge))
                    out.heightExpectation[d.height] += mass;
            }
        }
        joint = std::move(next);
        t = model.next_layer(t);
    }
    out.finalLayer = t;

    const long offset = typical_complexity(model.m, steps);
    for (const auto& [key, p] : joint) {
        const State& s = model.layers[static_cast<size_t>(t)][static_cast<size_t>(key.first)];
        out.lPmf[s.d + offset] += p;
        out.deviationPmf[s.d] += p;
        out.jumpCountPmf[key.second] += p;
    }
    return out;
}

}  // namespace bdm
