#include "bdm/model_json.hpp"

namespace bdm {

using nlohmann::ordered_json;

ordered_json model_to_json(const BoundedModel& model) {
    ordered_json root;
    root["m"] = model.m;
    root["k0"] = model.k0;

    ordered_json layers = ordered_json::array();
    for (int t = 0; t <= model.m; ++t) {
        ordered_json states = ordered_json::array();
        for (size_t i = 0; i < model.layer_size(t); ++i) {
            const State& s = model.layers[static_cast<size_t>(t)][i];
            ordered_json js;
            js["b"] = s.b;
            js["d"] = s.d;
            js["k"] = model.classOfIdx[static_cast<size_t>(t)][i];
            states.push_back(std::move(js));
        }
        ordered_json layer;
        layer["t"] = t;
        layer["states"] = std::move(states);
        layers.push_back(std::move(layer));
    }
    root["layers"] = std::move(layers);

    ordered_json edges = ordered_json::array();
    for (int t = 0; t <= model.m; ++t) {
        const int toLayer = model.next_layer(t);
        for (size_t i = 0; i < model.layer_size(t); ++i) {
            ordered_json group;
            group["from"] = {{"t", t}, {"idx", static_cast<int>(i)}};
            ordered_json outcomes = ordered_json::array();
            for (const ModelEdge& e : model.outcomes_of(t, static_cast<int>(i))) {
                ordered_json o;
                o["to"] = {{"t", toLayer}, {"idx", e.to}};
                o["monomials"] = ordered_json::array(
                    {ordered_json::array({e.a, e.bExp, 1})});
                ordered_json ds = ordered_json::array();
                for (const Discharge& d : model.discharges_of(e))
                    ds.push_back(ordered_json::array({d.battery, d.height}));
                o["discharges"] = std::move(ds);
                o["inhibitions"] = e.inhibitions;
                outcomes.push_back(std::move(o));
            }
            group["outcomes"] = std::move(outcomes);
            edges.push_back(std::move(group));
        }
    }
    root["edges"] = std::move(edges);
    return root;
}

}  // namespace bdm
