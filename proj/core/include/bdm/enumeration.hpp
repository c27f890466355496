#pragma once

#include "bdm/linear_complexity.hpp"
#include "bdm/prime_field.hpp"

#include <cstdint>
#include <map>

namespace bdm {

/// Exact integer counts over all q^(M*N) inputs.
struct ExhaustiveDistribution {
    int m = 0;
    int n = 0;
    int q = 0;
    int64_t total = 0;                        // q^(M*N)
    std::map<long, int64_t> lCounts;          // final joint linear complexity
    std::map<long, int64_t> deviationCounts;  // final L - ceil(N*M/(M+1))
    std::map<long, int64_t> jumpCountCounts;  // jumps per input
    std::map<long, int64_t> heightCounts;     // total height-h jumps across inputs
};

struct EnumerationOptions {
    int64_t cap = int64_t{1} << 24;  // refuse larger spaces; sample instead
    int threads = 1;
};

ExhaustiveDistribution exhaustive_distribution(const PrimeField& field, int m, int n,
                                               const EnumerationOptions& options = {});

}  // namespace bdm
