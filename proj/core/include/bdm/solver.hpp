#pragma once

#include "bdm/model.hpp"
#include "bdm/rational.hpp"
#include "bdm/weight.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace bdm {

template <class Scalar>
struct ChainDistribution {
    std::vector<std::vector<Scalar>> perLayer;  // [T][stateIdx]
};

struct ConvergenceError : std::runtime_error {
    double residual;
    long roundTrips;
    ConvergenceError(double r, long n)
        : std::runtime_error("stationary: no convergence after " + std::to_string(n) +
                             " round trips, residual " + std::to_string(r)),
          residual(r),
          roundTrips(n) {}
};

/// Per-edge weights evaluated at a fixed q, aligned with the model's edge
/// arrays; built once and reused across matrix applications.
template <class Scalar>
struct EvaluatedTransitions {
    std::vector<std::vector<Scalar>> perLayer;
};

template <class Scalar>
EvaluatedTransitions<Scalar> evaluate_transitions(const BoundedModel& model, const Scalar& q) {
    require_q_above_one(q);
    EvaluatedTransitions<Scalar> ev;
    ev.perLayer.resize(static_cast<size_t>(model.layer_count()));
    for (int t = 0; t <= model.m; ++t) {
        const auto& edges = model.transitions[static_cast<size_t>(t)].edges;
        auto& w = ev.perLayer[static_cast<size_t>(t)];
        w.reserve(edges.size());
        for (const ModelEdge& e : edges) w.push_back(model.monomial_of(e).eval(q));
    }
    return ev;
}

/// One layer-to-layer application: returns the distribution over layer T+1.
template <class Scalar>
std::vector<Scalar> apply_layer(const BoundedModel& model, const EvaluatedTransitions<Scalar>& ev,
                                int t, const std::vector<Scalar>& x) {
    const auto& le = model.transitions[static_cast<size_t>(t)];
    const auto& w = ev.perLayer[static_cast<size_t>(t)];
    std::vector<Scalar> y(model.layer_size(model.next_layer(t)), Scalar{0});
    for (size_t src = 0; src < x.size(); ++src) {
        const Scalar& xs = x[src];
        if (xs == Scalar{0}) continue;
        for (uint32_t e = le.rowStart[src]; e < le.rowStart[src + 1]; ++e)
            y[static_cast<size_t>(le.edges[e].to)] += xs * w[e];
    }
    return y;
}

template <class Scalar>
void require_distribution(const std::vector<Scalar>& x, size_t expectedSize, const char* where) {
    if (x.size() != expectedSize)
        throw std::invalid_argument(std::string(where) + ": wrong vector length");
    Scalar sum{0};
    for (const Scalar& v : x) {
        if (v < Scalar{0}) throw std::invalid_argument(std::string(where) + ": negative entry");
        sum += v;
    }
    if constexpr (std::is_same_v<Scalar, double>) {
        if (std::abs(sum - 1.0) > 1e-9)
            throw std::invalid_argument(std::string(where) + ": entries do not sum to 1");
    } else {
        if (sum != Scalar{1})
            throw std::invalid_argument(std::string(where) + ": entries do not sum to 1");
    }
}

template <class Scalar>
struct EvolveResult {
    ChainDistribution<Scalar> dist;  // last snapshot at each visited layer
    int finalLayer = 0;
    long steps = 0;
};

/*
 * Pushes a layer-0 distribution through `steps` transitions.  perLayer[T]
 * holds the distribution at the most recent visit of layer T (layers not
 * yet visited stay empty).
 */
template <class Scalar>
EvolveResult<Scalar> evolve(const BoundedModel& model, const Scalar& q,
                            const std::vector<Scalar>& dist0, long steps) {
    require_q_above_one(q);
    if (steps < 0) throw std::invalid_argument("evolve: steps must be >= 0");
    require_distribution(dist0, model.layer_size(0), "evolve");

    const EvaluatedTransitions<Scalar> ev = evaluate_transitions(model, q);
    EvolveResult<Scalar> res;
    res.dist.perLayer.resize(static_cast<size_t>(model.layer_count()));
    res.dist.perLayer[0] = dist0;
    res.steps = steps;

    std::vector<Scalar> x = dist0;
    int t = 0;
    for (long n = 0; n < steps; ++n) {
        x = apply_layer(model, ev, t, x);
        t = model.next_layer(t);
        res.dist.perLayer[static_cast<size_t>(t)] = x;
    }
    res.finalLayer = t;
    return res;
}

/// Point mass on the class-0 state of layer 0 (canonical index 0).
template <class Scalar>
std::vector<Scalar> origin_mass(const BoundedModel& model) {
    std::vector<Scalar> x(model.layer_size(0), Scalar{0});
    x[0] = Scalar{1};
    return x;
}

struct PowerIterationOptions {
    double tol = 1e-14;
    long maxIters = 1'000'000;  // round trips
};

template <class Scalar>
struct StationaryResult {
    ChainDistribution<Scalar> dist;
    Scalar residualL1{};
    long roundTrips = 0;
};

namespace detail {

template <class Scalar>
ChainDistribution<Scalar> propagate_layers(const BoundedModel& model,
                                           const EvaluatedTransitions<Scalar>& ev,
                                           std::vector<Scalar> layer0) {
    ChainDistribution<Scalar> dist;
    dist.perLayer.resize(static_cast<size_t>(model.layer_count()));
    dist.perLayer[0] = std::move(layer0);
    for (int t = 0; t < model.m; ++t)
        dist.perLayer[static_cast<size_t>(t) + 1] =
            apply_layer(model, ev, t, dist.perLayer[static_cast<size_t>(t)]);
    return dist;
}

}  // namespace detail

/*
 * Power iteration on the layer-0 round-trip operator, starting from the
 * class-0 point mass.  Convergence is the L1 change of the layer-0 vector
 * per round trip.
 */
inline StationaryResult<double> stationary_power_iteration(const BoundedModel& model, double q,
                                                           const PowerIterationOptions& opt = {}) {
    require_q_above_one(q);
    const EvaluatedTransitions<double> ev = evaluate_transitions(model, q);

    auto roundTrip = [&](std::vector<double> x) {
        for (int t = 0; t <= model.m; ++t) x = apply_layer(model, ev, t, x);
        return x;
    };

    std::vector<double> x = origin_mass<double>(model);
    long n = 0;
    double delta = 0;
    for (;; ++n) {
        if (n >= opt.maxIters) throw ConvergenceError(delta, n);
        std::vector<double> y = roundTrip(x);
        double sum = 0;
        for (double v : y) sum += v;
        for (double& v : y) v /= sum;
        delta = 0;
        for (size_t i = 0; i < x.size(); ++i) delta += std::abs(y[i] - x[i]);
        x = std::move(y);
        if (delta < opt.tol) break;
    }

    StationaryResult<double> res;
    const std::vector<double> check = roundTrip(x);
    double resid = 0;
    for (size_t i = 0; i < x.size(); ++i) resid += std::abs(check[i] - x[i]);
    res.residualL1 = resid;
    res.roundTrips = n + 1;
    res.dist = detail::propagate_layers(model, ev, std::move(x));
    return res;
}

/*
 * Exact stationary distribution: solves x R = x, sum(x) = 1 on the layer-0
 * round-trip matrix by fraction-free Gaussian elimination.  The nullspace of
 * R^T - I must be one-dimensional; anything else signals a broken model.
 */
StationaryResult<BigRat> stationary_exact(const BoundedModel& model, const BigRat& q);

/// The class-weight prediction pr(s) = q^{-K(s)} / sum over the layer.
template <class Scalar>
ChainDistribution<Scalar> predicted_stationary(const BoundedModel& model, const Scalar& q) {
    require_q_above_one(q);
    ChainDistribution<Scalar> dist;
    dist.perLayer.resize(static_cast<size_t>(model.layer_count()));
    for (int t = 0; t <= model.m; ++t) {
        const auto& ks = model.classOfIdx[static_cast<size_t>(t)];
        auto& v = dist.perLayer[static_cast<size_t>(t)];
        v.reserve(ks.size());
        Scalar norm{0};
        for (int k : ks) {
            Scalar w;
            if constexpr (std::is_same_v<Scalar, double>)
                w = std::pow(q, -k);
            else
                w = Scalar{1} / rat_pow(q, static_cast<unsigned>(k));
            v.push_back(w);
            norm += w;
        }
        for (Scalar& w : v) w /= norm;
    }
    return dist;
}

}  // namespace bdm
