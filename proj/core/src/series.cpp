#include "bdm/series.hpp"

#include "bdm/model.hpp"
#include "bdm/solver.hpp"
#include "bdm/stats.hpp"

#include <stdexcept>
#include <string>

namespace bdm {

std::vector<long long> extract_balanced_digits(const BigRat& value, int w, int depth) {
    if (w < 1 || w > 18) throw std::invalid_argument("extract_balanced_digits: w out of range");
    if (depth < 1) throw std::invalid_argument("extract_balanced_digits: depth must be >= 1");

    const BigInt base = big_pow(BigInt(10), static_cast<unsigned>(w));
    const BigInt half = base / 2;
    // 90% of the half-range; digits beyond are too close to the boundary to
    // attribute reliably.
    const BigInt guard = (9 * half) / 10;

    BigInt scaled = round_to_nearest(value * BigRat(big_pow(base, static_cast<unsigned>(depth))));
    std::vector<long long> coeffs(static_cast<size_t>(depth));
    for (int k = depth; k >= 1; --k) {
        BigInt r = scaled % base;
        if (r < 0) r += base;
        BigInt digit = r > half ? r - base : r;
        if (boost::multiprecision::abs(digit) > guard)
            throw std::runtime_error("series digit at q^-" + std::to_string(k) +
                                     " is near the balanced boundary; increase w");
        coeffs[static_cast<size_t>(k - 1)] = digit.convert_to<long long>();
        scaled = (scaled - digit) / base;
    }
    if (scaled != 0)
        throw std::runtime_error("series value has mass beyond the digit budget; increase w");
    return coeffs;
}

namespace {

BigRat dbar_exact(int m, int layerT, int k0, int w) {
    const BigRat q(big_pow(BigInt(10), static_cast<unsigned>(w)));
    const BoundedModel model = build_bounded_model(m, k0);
    const StationaryResult<BigRat> st = stationary_exact(model, q);
    auto [perLayer, overall] = mean_deviation(model, st.dist);
    (void)overall;
    return perLayer[static_cast<size_t>(layerT)];
}

}  // namespace

std::vector<long long> series_coefficients(SeriesStat stat, int m, int layerT, int depth,
                                           const SeriesOptions& options) {
    if (stat != SeriesStat::MeanDeviation)
        throw std::invalid_argument("series_coefficients: unsupported statistic");
    if (m < 1) throw std::invalid_argument("series_coefficients: M must be >= 1");
    if (layerT < 0 || layerT > m)
        throw std::invalid_argument("series_coefficients: T out of range");
    if (depth < 1) throw std::invalid_argument("series_coefficients: depth must be >= 1");

    const int k0 = depth + options.safetyMargin;
    const int w = options.digitWidth;

    const std::vector<long long> first =
        extract_balanced_digits(dbar_exact(m, layerT, k0, w), w, depth);
    const std::vector<long long> second =
        extract_balanced_digits(dbar_exact(m, layerT, k0, w + 2), w + 2, depth);
    if (first != second)
        throw std::runtime_error(
            "series not integer-coefficient at this depth (digit pattern unstable between w and "
            "w+2)");
    return first;
}

}  // namespace bdm
