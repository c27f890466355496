#pragma once

#include "bdm/rational.hpp"

#include <vector>

namespace bdm {

enum class SeriesStat {
    MeanDeviation,  // dBar(T)
};

struct SeriesOptions {
    int safetyMargin = 3;  // model accuracy is K0 = depth + safetyMargin
    int digitWidth = 4;    // w: evaluation at q = 10^w
};

/*
 * Integer coefficients of the statistic's power series in 1/q, read off as
 * balanced base-10^w digits of the exact value at q = 10^w.  The extraction
 * is repeated at width w+2; disagreement means the series is not integer-
 * coefficient at this depth and raises an error, as does any digit close to
 * the balanced-digit boundary.
 */
std::vector<long long> series_coefficients(SeriesStat stat, int m, int layerT, int depth,
                                           const SeriesOptions& options = {});

/// Digit extraction helper; exposed for direct testing. |value| must be < 1/2.
std::vector<long long> extract_balanced_digits(const BigRat& value, int w, int depth);

}  // namespace bdm
