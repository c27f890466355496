#pragma once

#include "bdm/prime_field.hpp"

#include <cstdint>
#include <map>

namespace bdm {

/*
 * Counter-based symbol generator. The value at (seed, sampleIndex, position)
 * is
 *
 *     mix(mix(seed + G*(sampleIndex+1)) ^ (G*(position+1))) mod q
 *
 * with mix the splitmix64 finalizer and G = 0x9e3779b97f4a7c15. Streams for
 * different samples are independent and any position can be evaluated
 * directly, so results do not depend on evaluation order.
 */
struct CounterRng {
    static uint64_t mix(uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    static uint64_t sample_key(uint64_t seed, uint64_t sampleIndex) {
        return mix(seed + 0x9e3779b97f4a7c15ULL * (sampleIndex + 1));
    }
    static int32_t symbol(uint64_t sampleKey, uint64_t position, int32_t q) {
        return static_cast<int32_t>(mix(sampleKey ^ (0x9e3779b97f4a7c15ULL * (position + 1))) %
                                    static_cast<uint64_t>(q));
    }
};

struct Estimate {
    double mean = 0;
    double stderror = 0;
};

struct MonteCarloReport {
    int m = 0;
    int n = 0;
    int q = 0;
    int64_t samples = 0;
    uint64_t seed = 0;
    int tailColumns = 0;               // columns used for the deviation pmf
    Estimate jumpRate;                 // jumps per step over the whole run
    std::map<long, Estimate> jumpHeights;   // height-h jumps per step
    std::map<long, Estimate> deviationPmf;  // deviation over the final columns
};

struct MonteCarloOptions {
    int threads = 1;
};

/*
 * Empirical complexity statistics of uniform i.i.d. multisequences drawn
 * from the counter generator.  Each drawn symbol is consumed through the
 * expansion correspondence: at a position where a jump is possible, exactly
 * one symbol value leaves the complexity unchanged, and for uniform inputs
 * that event has probability 1/q independently of the past; the walk
 * therefore advances the mapped battery/drain state directly, using
 * "symbol == 0" as the non-jump event.  Per-sample tallies are integers, so
 * aggregated results are identical for any partitioning into workers.
 */
MonteCarloReport monte_carlo(const PrimeField& field, int m, int n, int64_t samples,
                             uint64_t seed, const MonteCarloOptions& options = {});

}  // namespace bdm
