#pragma once

#include "bdm/model.hpp"
#include "bdm/rational.hpp"

#include <map>

namespace bdm {

/*
 * Exact finite-horizon law of the chain started from the origin, augmented
 * with the running jump count.  L values use the typical-growth offset:
 * L = d + ceil(n*M/(M+1)) at step n.
 *
 * Exact agreement with symbol-by-symbol enumeration requires K0 >= steps*M
 * (a single step can add up to M inhibitions).
 */
struct HorizonDistribution {
    long steps = 0;
    int finalLayer = 0;
    std::map<long, BigRat> lPmf;               // final joint linear complexity
    std::map<long, BigRat> deviationPmf;       // final drain value
    std::map<long, BigRat> jumpCountPmf;       // total discharges over the run
    std::map<long, BigRat> heightExpectation;  // expected # of height-h jumps over the run
};

HorizonDistribution horizon_distribution(const BoundedModel& model, const BigRat& q, long steps);

/// Smallest K0 that makes the bounded chain exact up to the given horizon.
inline int exact_horizon_k0(int m, long steps) { return static_cast<int>(steps) * m; }

inline long typical_complexity(int m, long n) { return (n * m + m) / (m + 1); }

}  // namespace bdm
