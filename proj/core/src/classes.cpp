#include "bdm/classes.hpp"

#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

namespace bdm {

BigInt partition_count(int k, int m) {
    if (k < 0) throw std::invalid_argument("partition_count: K must be >= 0");
    if (m < 1) throw std::invalid_argument("partition_count: M must be >= 1");
    // p(K, M) = p(K-M, M) + p(K, M-1), p(0, .) = 1, p(k, 0) = 0 for k > 0.
    std::vector<BigInt> row(static_cast<size_t>(k) + 1, 0);
    row[0] = 1;
    for (int part = 1; part <= m; ++part)
        for (int n = part; n <= k; ++n)
            row[static_cast<size_t>(n)] += row[static_cast<size_t>(n - part)];
    return row[static_cast<size_t>(k)];
}

ClassMap compute_classes(int m, int k0, const ClassSearchLimits& limits) {
    if (m < 1) throw std::invalid_argument("compute_classes: M must be >= 1");
    if (k0 < 0) throw std::invalid_argument("compute_classes: K0 must be >= 0");

    ClassMap classes;
    classes.reserve(1024);

    // Dial buckets over tentative class labels; lazy deletion on pop.
    std::vector<std::deque<State>> buckets(static_cast<size_t>(k0) + 1);
    buckets[0].push_back(origin_state(m));
    std::vector<size_t> perClass(static_cast<size_t>(k0) + 1, 0);

    for (int level = 0; level <= k0; ++level) {
        auto& bucket = buckets[static_cast<size_t>(level)];
        while (!bucket.empty()) {
            State s = std::move(bucket.front());
            bucket.pop_front();
            if (classes.count(s)) continue;  // already settled at <= level
            classes.emplace(s, level);
            if (++perClass[static_cast<size_t>(level)] > limits.maxStatesPerClass)
                throw std::runtime_error("compute_classes: state cap exceeded at M=" +
                                         std::to_string(m) + " K0=" + std::to_string(k0) +
                                         " level=" + std::to_string(level));
            for (Outcome& o : step(s)) {
                const int next = level + o.inhibitions;
                if (next > k0 || classes.count(o.state)) continue;
                buckets[static_cast<size_t>(next)].push_back(std::move(o.state));
            }
        }
    }
    return classes;
}

}  // namespace bdm
