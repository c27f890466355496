#pragma once

#include "bdm/dynamics.hpp"
#include "bdm/rational.hpp"

#include <cstdint>

namespace bdm {

/// Number of partitions of K into at most M parts (equivalently, parts of
/// size at most M).
BigInt partition_count(int k, int m);

struct ClassSearchLimits {
    // Guard against runaway searches on the infinite graph; exceeding the
    // cap raises with the offending (M, K0, level).
    size_t maxStatesPerClass = 10'000'000;
};

/*
 * Labels every state of class <= K0 with its class: level 0 is the closure of
 * the origin under zero-inhibition transitions, level k adds states reachable
 * from lower levels by transitions raising the inhibition total to exactly k,
 * closed again under zero-inhibition transitions.  Equivalent to a shortest-
 * path search with inhibition counts as edge weights.
 */
ClassMap compute_classes(int m, int k0, const ClassSearchLimits& limits = {});

}  // namespace bdm
