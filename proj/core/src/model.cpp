#include "bdm/model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bdm {

BoundedModel build_bounded_model(int m, int k0, const ClassSearchLimits& limits) {
    BoundedModel model;
    model.m = m;
    model.k0 = k0;
    model.classes = compute_classes(m, k0, limits);

    model.layers.assign(static_cast<size_t>(m) + 1, {});
    for (const auto& [state, k] : model.classes)
        model.layers[static_cast<size_t>(state.layer)].push_back(state);

    for (auto& layer : model.layers)
        std::sort(layer.begin(), layer.end(), [&](const State& x, const State& y) {
            const int kx = model.classes.at(x), ky = model.classes.at(y);
            if (kx != ky) return kx < ky;
            return state_lex_less(x, y);
        });

    // Structural verification: p_K(M) states of class K per layer, the unique
    // class-0 state is the base state.
    std::vector<BigInt> expected(static_cast<size_t>(k0) + 1);
    for (int k = 0; k <= k0; ++k) expected[static_cast<size_t>(k)] = partition_count(k, m);
    for (int t = 0; t <= m; ++t) {
        std::vector<int64_t> sizes(static_cast<size_t>(k0) + 1, 0);
        for (const State& s : model.layers[static_cast<size_t>(t)])
            sizes[static_cast<size_t>(model.classes.at(s))] += 1;
        for (int k = 0; k <= k0; ++k)
            if (expected[static_cast<size_t>(k)] != sizes[static_cast<size_t>(k)])
                throw std::runtime_error(
                    "build_bounded_model: layer " + std::to_string(t) + " has " +
                    std::to_string(sizes[static_cast<size_t>(k)]) + " states of class " +
                    std::to_string(k) + ", expected p_K(M) = " +
                    expected[static_cast<size_t>(k)].str());
        if (!(model.layers[static_cast<size_t>(t)][0] == base_state(m, t)))
            throw std::runtime_error("build_bounded_model: layer " + std::to_string(t) +
                                     " class-0 state is not the base state");
    }

    model.classOfIdx.assign(static_cast<size_t>(m) + 1, {});
    for (int t = 0; t <= m; ++t) {
        auto& layer = model.layers[static_cast<size_t>(t)];
        auto& ks = model.classOfIdx[static_cast<size_t>(t)];
        ks.reserve(layer.size());
        for (size_t i = 0; i < layer.size(); ++i) {
            ks.push_back(model.classes.at(layer[i]));
            model.index.emplace(layer[i],
                                StateRef{t, static_cast<int32_t>(i)});
        }
    }

    const SubcyclePolicy policy = SubcyclePolicy::bounded_by(model.classes);
    model.transitions.assign(static_cast<size_t>(m) + 1, {});
    for (int t = 0; t <= m; ++t) {
        auto& le = model.transitions[static_cast<size_t>(t)];
        const auto& layer = model.layers[static_cast<size_t>(t)];
        le.rowStart.reserve(layer.size() + 1);
        le.rowStart.push_back(0);
        for (const State& s : layer) {
            for (const Outcome& o : step(s, policy)) {
                const StateRef ref = model.find(o.state);
                if (ref.idx < 0 || ref.layer != model.next_layer(t))
                    throw std::runtime_error("build_bounded_model: successor " +
                                             o.state.to_string() + " not closed in model");
                ModelEdge e;
                e.to = ref.idx;
                e.a = static_cast<uint8_t>(o.weight.monomials[0].a);
                e.bExp = static_cast<uint8_t>(o.weight.monomials[0].bExp);
                e.inhibitions = static_cast<uint8_t>(o.inhibitions);
                e.nDischarges = static_cast<uint8_t>(o.discharges.size());
                e.dischargeOfs = static_cast<uint32_t>(model.dischargePool.size());
                model.dischargePool.insert(model.dischargePool.end(), o.discharges.begin(),
                                           o.discharges.end());
                le.edges.push_back(e);
            }
            le.rowStart.push_back(static_cast<uint32_t>(le.edges.size()));
        }
    }
    return model;
}

std::map<std::pair<int, int>, int64_t> class_deviation_histogram(const BoundedModel& model,
                                                                 int layer) {
    if (layer < 0 || layer > model.m)
        throw std::invalid_argument("class_deviation_histogram: layer out of range");
    std::map<std::pair<int, int>, int64_t> out;
    const auto& states = model.layers[static_cast<size_t>(layer)];
    const auto& ks = model.classOfIdx[static_cast<size_t>(layer)];
    for (size_t i = 0; i < states.size(); ++i)
        out[{ks[i], states[i].d}] += 1;
    return out;
}

}  // namespace bdm
