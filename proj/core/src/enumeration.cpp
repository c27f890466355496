#include "bdm/enumeration.hpp"

#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace bdm {

namespace {

struct Counters {
    std::map<long, int64_t> l, dev, jumps, heights;

    void absorb(const Counters& o) {
        for (const auto& [k, v] : o.l) l[k] += v;
        for (const auto& [k, v] : o.dev) dev[k] += v;
        for (const auto& [k, v] : o.jumps) jumps[k] += v;
        for (const auto& [k, v] : o.heights) heights[k] += v;
    }
};

void scan_range(const PrimeField& field, int m, int n, int64_t begin, int64_t end,
                Counters& out) {
    MultiSequence seq(m, n);
    const int32_t q = field.p();
    for (int64_t idx = begin; idx < end; ++idx) {
        int64_t rest = idx;
        for (auto& sym : seq.data) {
            sym = static_cast<int32_t>(rest % q);
            rest /= q;
        }
        const ComplexityProfile profile = complexity_profile(field, seq);
        const long finalL =
            profile.perSubstep.empty() ? 0 : profile.perSubstep.back().complexity;
        out.l[finalL] += 1;
        out.dev[profile.perColumnDeviation.empty() ? 0 : profile.perColumnDeviation.back()] += 1;
        out.jumps[profile.jumpCount] += 1;
        for (const auto& [h, c] : profile.heightHistogram) out.heights[h] += c;
    }
}

}  // namespace

ExhaustiveDistribution exhaustive_distribution(const PrimeField& field, int m, int n,
                                               const EnumerationOptions& options) {
    if (m < 1 || n < 0) throw std::invalid_argument("exhaustive_distribution: bad shape");
    int64_t total = 1;
    for (int i = 0; i < m * n; ++i) {
        total *= field.p();
        if (total > options.cap)
            throw std::invalid_argument(
                "exhaustive_distribution: q^(M*N) exceeds the enumeration cap (" +
                std::to_string(options.cap) + "); use monte_carlo instead");
    }

    const int threads = std::max(1, options.threads);
    std::vector<Counters> partial(static_cast<size_t>(threads));
    if (threads == 1) {
        scan_range(field, m, n, 0, total, partial[0]);
    } else {
        std::vector<std::thread> pool;
        const int64_t chunk = (total + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            const int64_t lo = w * chunk;
            const int64_t hi = std::min(total, lo + chunk);
            pool.emplace_back([&, w, lo, hi] {
                scan_range(field, m, n, lo, hi, partial[static_cast<size_t>(w)]);
            });
        }
        for (auto& th : pool) th.join();
    }

    ExhaustiveDistribution out;
    out.m = m;
    out.n = n;
    out.q = field.p();
    out.total = total;
    Counters all;
    for (const Counters& c : partial) all.absorb(c);
    out.lCounts = std::move(all.l);
    out.deviationCounts = std::move(all.dev);
    out.jumpCountCounts = std::move(all.jumps);
    out.heightCounts = std::move(all.heights);
    return out;
}

}  // namespace bdm
