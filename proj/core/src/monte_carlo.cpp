#include "bdm/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace bdm {

namespace {

struct Accumulator {
    int64_t sum = 0;
    int64_t sumSq = 0;

    void add(int64_t x) {
        sum += x;
        sumSq += x * x;
    }
    void absorb(const Accumulator& o) {
        sum += o.sum;
        sumSq += o.sumSq;
    }
};

// Sample mean and standard error of per-sample counts scaled by 1/denom.
Estimate to_estimate(const Accumulator& acc, int64_t samples, double denom) {
    Estimate e;
    const double mean = static_cast<double>(acc.sum) / static_cast<double>(samples);
    e.mean = mean / denom;
    if (samples > 1) {
        const double var =
            (static_cast<double>(acc.sumSq) - static_cast<double>(acc.sum) * mean) /
            static_cast<double>(samples - 1);
        e.stderror = std::sqrt(std::max(0.0, var) / static_cast<double>(samples)) / denom;
    }
    return e;
}

struct Tallies {
    Accumulator jumps;
    std::map<long, Accumulator> heights;
    std::map<long, Accumulator> deviations;

    void absorb(const Tallies& o) {
        jumps.absorb(o.jumps);
        for (const auto& [k, v] : o.heights) heights[k].absorb(v);
        for (const auto& [k, v] : o.deviations) deviations[k].absorb(v);
    }
};

void run_samples(int32_t q, int m, int n, int tailColumns, uint64_t seed, int64_t begin,
                 int64_t end, Tallies& out) {
    std::vector<int32_t> b(static_cast<size_t>(m));
    std::map<long, int64_t> sampleHeights;
    std::map<long, int64_t> sampleDevs;
    for (int64_t s = begin; s < end; ++s) {
        const uint64_t key = CounterRng::sample_key(seed, static_cast<uint64_t>(s));
        std::fill(b.begin(), b.end(), 0);
        int32_t d = 0;
        int64_t jumps = 0;
        sampleHeights.clear();
        sampleDevs.clear();
        for (int col = 1; col <= n; ++col) {
            if (col % (m + 1) == 0) {
                for (auto& v : b) v += 1;
            } else {
                d -= 1;
            }
            for (int t = 0; t < m; ++t) {
                if (b[static_cast<size_t>(t)] <= d) continue;
                const uint64_t pos =
                    static_cast<uint64_t>(col - 1) * static_cast<uint64_t>(m) +
                    static_cast<uint64_t>(t);
                if (CounterRng::symbol(key, pos, q) != 0) {
                    sampleHeights[b[static_cast<size_t>(t)] - d] += 1;
                    jumps += 1;
                    std::swap(b[static_cast<size_t>(t)], d);
                }
            }
            if (col > n - tailColumns) sampleDevs[d] += 1;
        }
        out.jumps.add(jumps);
        for (const auto& [h, c] : sampleHeights) out.heights[h].add(c);
        for (const auto& [dv, c] : sampleDevs) out.deviations[dv].add(c);
    }
}

}  // namespace

MonteCarloReport monte_carlo(const PrimeField& field, int m, int n, int64_t samples,
                             uint64_t seed, const MonteCarloOptions& options) {
    if (m < 1 || n < 1) throw std::invalid_argument("monte_carlo: M and N must be >= 1");
    if (samples < 1) throw std::invalid_argument("monte_carlo: samples must be >= 1");

    const int tailColumns = std::max(1, n / 10);
    const int threads = std::max(1, options.threads);
    std::vector<Tallies> partial(static_cast<size_t>(threads));
    if (threads == 1) {
        run_samples(field.p(), m, n, tailColumns, seed, 0, samples, partial[0]);
    } else {
        std::vector<std::thread> pool;
        const int64_t chunk = (samples + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            const int64_t lo = w * chunk;
            const int64_t hi = std::min<int64_t>(samples, lo + chunk);
            pool.emplace_back([&, w, lo, hi] {
                run_samples(field.p(), m, n, tailColumns, seed, lo, hi,
                            partial[static_cast<size_t>(w)]);
            });
        }
        for (auto& th : pool) th.join();
    }

    Tallies all;
    for (const Tallies& t : partial) all.absorb(t);

    MonteCarloReport rep;
    rep.m = m;
    rep.n = n;
    rep.q = field.p();
    rep.samples = samples;
    rep.seed = seed;
    rep.tailColumns = tailColumns;
    rep.jumpRate = to_estimate(all.jumps, samples, static_cast<double>(n));
    for (const auto& [h, acc] : all.heights)
        rep.jumpHeights[h] = to_estimate(acc, samples, static_cast<double>(n));
    for (const auto& [d, acc] : all.deviations)
        rep.deviationPmf[d] = to_estimate(acc, samples, static_cast<double>(tailColumns));
    return rep;
}

}  // namespace bdm
