#pragma once

#include "bdm/model.hpp"

#include <json.hpp>

namespace bdm {

/*
 * Wire dump of a bounded model. Schema (field names are normative):
 *   {m, k0,
 *    layers: [{t, states: [{b: [...], d, k}]}],
 *    edges:  [{from: {t, idx},
 *              outcomes: [{to: {t, idx}, monomials: [[a, bExp, mult], ...],
 *                          discharges: [[battery, height], ...], inhibitions}]}]}
 */
nlohmann::ordered_json model_to_json(const BoundedModel& model);

}  // namespace bdm
