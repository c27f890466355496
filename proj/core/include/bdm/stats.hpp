#pragma once

#include "bdm/model.hpp"
#include "bdm/solver.hpp"

#include <map>
#include <vector>

namespace bdm {

/*
 * Chain statistics over a per-layer distribution (stationary or finite
 * horizon).  Jump quantities are indexed by the source layer of the
 * transition; layer averages weigh all M+1 layers equally.
 */
template <class Scalar>
struct StatReport {
    std::vector<Scalar> dBarPerLayer;
    Scalar dBar{};
    std::vector<std::map<int, Scalar>> devPmfPerLayer;
    std::map<int, Scalar> devPmf;  // layer-averaged
    std::vector<Scalar> jumpRatePerLayer;
    Scalar jumpRate{};
    std::map<int, Scalar> jumpHeights;  // expected height-h jumps per step
    int supportMinD = 0;  // drain support present in the bounded model;
    int supportMaxD = 0;  // pmf mass outside is a truncation artifact
};

template <class Scalar>
std::pair<std::vector<Scalar>, Scalar> mean_deviation(const BoundedModel& model,
                                                      const ChainDistribution<Scalar>& dist) {
    std::vector<Scalar> perLayer;
    perLayer.reserve(static_cast<size_t>(model.layer_count()));
    Scalar total{0};
    for (int t = 0; t <= model.m; ++t) {
        const auto& x = dist.perLayer[static_cast<size_t>(t)];
        const auto& states = model.layers[static_cast<size_t>(t)];
        Scalar acc{0};
        for (size_t i = 0; i < x.size(); ++i) acc += x[i] * Scalar(states[i].d);
        perLayer.push_back(acc);
        total += acc;
    }
    total /= Scalar(model.layer_count());
    return {perLayer, total};
}

template <class Scalar>
std::pair<std::vector<std::map<int, Scalar>>, std::map<int, Scalar>> deviation_pmf(
    const BoundedModel& model, const ChainDistribution<Scalar>& dist) {
    std::vector<std::map<int, Scalar>> perLayer(static_cast<size_t>(model.layer_count()));
    std::map<int, Scalar> averaged;
    const Scalar layerWeight = Scalar(1) / Scalar(model.layer_count());
    for (int t = 0; t <= model.m; ++t) {
        const auto& x = dist.perLayer[static_cast<size_t>(t)];
        const auto& states = model.layers[static_cast<size_t>(t)];
        auto& pmf = perLayer[static_cast<size_t>(t)];
        for (size_t i = 0; i < x.size(); ++i) pmf[states[i].d] += x[i];
        for (const auto& [d, p] : pmf) averaged[d] += p * layerWeight;
    }
    return {perLayer, averaged};
}

template <class Scalar>
std::pair<std::vector<Scalar>, Scalar> jump_rate(const BoundedModel& model, const Scalar& q,
                                                 const ChainDistribution<Scalar>& dist) {
    const EvaluatedTransitions<Scalar> ev = evaluate_transitions(model, q);
    std::vector<Scalar> perLayer;
    perLayer.reserve(static_cast<size_t>(model.layer_count()));
    Scalar total{0};
    for (int t = 0; t <= model.m; ++t) {
        const auto& x = dist.perLayer[static_cast<size_t>(t)];
        const auto& le = model.transitions[static_cast<size_t>(t)];
        const auto& w = ev.perLayer[static_cast<size_t>(t)];
        Scalar acc{0};
        for (size_t src = 0; src < x.size(); ++src) {
            if (x[src] == Scalar{0}) continue;
            for (uint32_t e = le.rowStart[src]; e < le.rowStart[src + 1]; ++e)
                if (le.edges[e].nDischarges)
                    acc += x[src] * w[e] * Scalar(le.edges[e].nDischarges);
        }
        perLayer.push_back(acc);
        total += acc;
    }
    total /= Scalar(model.layer_count());
    return {perLayer, total};
}

template <class Scalar>
std::map<int, Scalar> jump_height_profile(const BoundedModel& model, const Scalar& q,
                                          const ChainDistribution<Scalar>& dist) {
    const EvaluatedTransitions<Scalar> ev = evaluate_transitions(model, q);
    std::map<int, Scalar> heights;
    for (int t = 0; t <= model.m; ++t) {
        const auto& x = dist.perLayer[static_cast<size_t>(t)];
        const auto& le = model.transitions[static_cast<size_t>(t)];
        const auto& w = ev.perLayer[static_cast<size_t>(t)];
        for (size_t src = 0; src < x.size(); ++src) {
            if (x[src] == Scalar{0}) continue;
            for (uint32_t e = le.rowStart[src]; e < le.rowStart[src + 1]; ++e) {
                const ModelEdge& edge = le.edges[e];
                if (!edge.nDischarges) continue;
                const Scalar mass = x[src] * w[e];
                for (const Discharge& d : model.discharges_of(edge))
                    heights[d.height] += mass;
            }
        }
    }
    const Scalar layerWeight = Scalar(1) / Scalar(model.layer_count());
    for (auto& [h, v] : heights) v *= layerWeight;
    return heights;
}

template <class Scalar>
StatReport<Scalar> compute_stat_report(const BoundedModel& model, const Scalar& q,
                                       const ChainDistribution<Scalar>& dist) {
    StatReport<Scalar> rep;
    std::tie(rep.dBarPerLayer, rep.dBar) = mean_deviation(model, dist);
    std::tie(rep.devPmfPerLayer, rep.devPmf) = deviation_pmf(model, dist);
    std::tie(rep.jumpRatePerLayer, rep.jumpRate) = jump_rate(model, q, dist);
    rep.jumpHeights = jump_height_profile(model, q, dist);
    bool first = true;
    for (const auto& layer : model.layers)
        for (const State& s : layer) {
            if (first || s.d < rep.supportMinD) rep.supportMinD = s.d;
            if (first || s.d > rep.supportMaxD) rep.supportMaxD = s.d;
            first = false;
        }
    return rep;
}

}  // namespace bdm
