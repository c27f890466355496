#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdm/horizon.hpp"
#include "bdm/model.hpp"
#include "bdm/solver.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace bdm;
using testsupport::st;

TEST_CASE("evolve with zero steps returns the start distribution") {
    const BoundedModel model = build_bounded_model(2, 3);
    const auto res = evolve(model, BigRat(2), origin_mass<BigRat>(model), 0);
    CHECK(res.finalLayer == 0);
    CHECK(res.dist.perLayer[0] == origin_mass<BigRat>(model));
}

TEST_CASE("evolve rejects bad input") {
    const BoundedModel model = build_bounded_model(1, 2);
    CHECK_THROWS_AS(evolve(model, BigRat(1), origin_mass<BigRat>(model), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(evolve(model, BigRat(2), origin_mass<BigRat>(model), -1),
                    std::invalid_argument);
    std::vector<BigRat> bad(model.layer_size(0), BigRat(0));
    CHECK_THROWS_AS(evolve(model, BigRat(2), bad, 1), std::invalid_argument);
}

TEST_CASE("two exact steps of the M=1 chain") {
    const BoundedModel model = build_bounded_model(1, 5);
    const auto res = evolve(model, BigRat(2), origin_mass<BigRat>(model), 2);
    CHECK(res.finalLayer == 0);
    const auto& x = res.dist.perLayer[0];

    auto mass = [&](const State& s) {
        const StateRef ref = model.find(s);
        REQUIRE(ref.layer == 0);
        return x[static_cast<size_t>(ref.idx)];
    };
    CHECK(mass(st({0}, 0, 0)) == BigRat(1, 2));
    CHECK(mass(st({-1}, 1, 0)) == BigRat(1, 4));
    CHECK(mass(st({1}, -1, 0)) == BigRat(1, 4));
}

TEST_CASE("finite-horizon masses are multiples of q^-(M n) at integer q") {
    const int m = 2;
    const long steps = 4;
    const BoundedModel model = build_bounded_model(m, static_cast<int>(steps));
    const auto res = evolve(model, BigRat(3), origin_mass<BigRat>(model), steps);
    const BigInt scale = big_pow(BigInt(3), static_cast<unsigned>(m * steps));
    for (const BigRat& p : res.dist.perLayer[static_cast<size_t>(res.finalLayer)]) {
        const BigRat scaled = p * BigRat(scale);
        CHECK(boost::multiprecision::denominator(scaled) == 1);
    }
}

TEST_CASE("power iteration and exact nullspace agree") {
    const BoundedModel model = build_bounded_model(2, 12);
    const PowerIterationOptions opt;
    const auto approx = stationary_power_iteration(model, 2.0, opt);
    const auto exact = stationary_exact(model, BigRat(2));
    CHECK(exact.residualL1 == 0);
    for (int t = 0; t <= 2; ++t)
        for (size_t i = 0; i < model.layer_size(t); ++i) {
            const double e =
                exact.dist.perLayer[static_cast<size_t>(t)][i].convert_to<double>();
            CHECK(std::abs(approx.dist.perLayer[static_cast<size_t>(t)][i] - e) <=
                  10 * opt.tol);
        }
}

TEST_CASE("stationary drain-zero probability for M=1 is one half") {
    const BoundedModel model = build_bounded_model(1, 40);
    const auto st0 = stationary_power_iteration(model, 2.0);
    for (int t = 0; t <= 1; ++t) {
        double prD0 = 0;
        for (size_t i = 0; i < model.layer_size(t); ++i)
            if (model.layers[static_cast<size_t>(t)][i].d == 0)
                prD0 += st0.dist.perLayer[static_cast<size_t>(t)][i];
        CHECK(prD0 == doctest::Approx(0.5).epsilon(1e-5));
    }
}

TEST_CASE("predicted distribution: normalizer and class ratios") {
    const BoundedModel model = build_bounded_model(3, 2);
    // Layer normalizer 1 + 1/2 + 2/4 = 2, so the class-0 state carries 1/2.
    const auto predicted = predicted_stationary(model, BigRat(2));
    for (int t = 0; t <= 3; ++t) {
        const auto& layer = predicted.perLayer[static_cast<size_t>(t)];
        CHECK(layer[0] == BigRat(1, 2));
        // Ratio between a class-1 and class-2 state is q.
        CHECK(layer[1] / layer[2] == BigRat(2));
        BigRat sum = 0;
        for (const auto& p : layer) sum += p;
        CHECK(sum == 1);
    }
    const auto predictedF = predicted_stationary(model, 2.0);
    for (int t = 0; t <= 3; ++t) {
        CHECK(predictedF.perLayer[static_cast<size_t>(t)][0] == doctest::Approx(0.5));
        // The class-0 state has the layer maximum for every q > 1.
        for (double p : predictedF.perLayer[static_cast<size_t>(t)])
            CHECK(p <= predictedF.perLayer[static_cast<size_t>(t)][0]);
    }
}

TEST_CASE("M<=2: bounded stationary equals the class-weight prediction exactly") {
    // Not just close: the truncated chain leaves the q^-K profile invariant.
    for (const auto [m, k0] : {std::pair{1, 12}, {2, 6}, {2, 10}, {2, 14}}) {
        const BoundedModel model = build_bounded_model(m, k0);
        const auto exact = stationary_exact(model, BigRat(2));
        const auto predicted = predicted_stationary(model, BigRat(2));
        for (int t = 0; t <= m; ++t)
            CHECK(exact.dist.perLayer[static_cast<size_t>(t)] ==
                  predicted.perLayer[static_cast<size_t>(t)]);
    }
    const BoundedModel wide = build_bounded_model(2, 30);
    const auto actual = stationary_power_iteration(wide, 2.0);
    const auto predicted = predicted_stationary(wide, 2.0);
    double maxDev = 0;
    for (int t = 0; t <= 2; ++t)
        for (size_t i = 0; i < wide.layer_size(t); ++i)
            maxDev = std::max(maxDev,
                              std::abs(actual.dist.perLayer[static_cast<size_t>(t)][i] -
                                       predicted.perLayer[static_cast<size_t>(t)][i]));
    CHECK(maxDev < 1e-6);
}

TEST_CASE("M=3: deviation from the class-weight prediction shrinks with K0") {
    double previous = 1.0;
    for (int k0 : {6, 8, 10, 12}) {
        const BoundedModel model = build_bounded_model(3, k0);
        const auto actual = stationary_power_iteration(model, 2.0);
        const auto predicted = predicted_stationary(model, 2.0);
        double maxDev = 0;
        for (int t = 0; t <= 3; ++t)
            for (size_t i = 0; i < model.layer_size(t); ++i)
                maxDev = std::max(maxDev,
                                  std::abs(actual.dist.perLayer[static_cast<size_t>(t)][i] -
                                           predicted.perLayer[static_cast<size_t>(t)][i]));
        CHECK(maxDev < previous);
        previous = maxDev;
    }
    CHECK(previous < 1e-3);
}

TEST_CASE("probability of each state tracks q^-K times the class-0 state") {
    // Ratios against the layer anchor converge as K0 grows; ratios between
    // two boundary-class states stay distorted at any K0, so the anchored
    // form is the meaningful one.
    double previous = 1.0;
    for (int k0 : {10, 20}) {
        const BoundedModel model = build_bounded_model(3, k0);
        const auto st3 = stationary_power_iteration(model, 2.0);
        double maxDev = 0;
        for (int t = 0; t <= 3; ++t) {
            const auto& x = st3.dist.perLayer[static_cast<size_t>(t)];
            const auto& ks = model.classOfIdx[static_cast<size_t>(t)];
            for (size_t i = 0; i < x.size(); ++i)
                maxDev = std::max(maxDev, std::abs(x[i] / x[0] - std::pow(2.0, -ks[i])));
        }
        CHECK(maxDev < previous);
        previous = maxDev;
    }
    CHECK(previous < 1e-4);
}

TEST_CASE("stationary layer marginals map into each other") {
    const BoundedModel model = build_bounded_model(3, 15);
    const auto st3 = stationary_power_iteration(model, 2.0);
    const auto ev = evaluate_transitions(model, 2.0);
    for (int t = 0; t <= 3; ++t) {
        const auto next =
            apply_layer(model, ev, t, st3.dist.perLayer[static_cast<size_t>(t)]);
        const auto& expected =
            st3.dist.perLayer[static_cast<size_t>(model.next_layer(t))];
        REQUIRE(next.size() == expected.size());
        for (size_t i = 0; i < next.size(); ++i)
            CHECK(next[i] == doctest::Approx(expected[i]).epsilon(1e-10));
    }
}

TEST_CASE("exact nullspace detects a reducible chain") {
    // Two disconnected copies of the (1,0) cycle stitched by hand.
    BoundedModel broken = build_bounded_model(1, 0);
    broken.layers[0].push_back(st({5}, -5, 0));
    broken.layers[1].push_back(st({4}, -5, 1));
    broken.classOfIdx[0].push_back(0);
    broken.classOfIdx[1].push_back(0);
    for (int t = 0; t <= 1; ++t) {
        auto& le = broken.transitions[static_cast<size_t>(t)];
        ModelEdge e;
        e.to = 1;
        le.edges.push_back(e);
        le.rowStart.push_back(static_cast<uint32_t>(le.edges.size()));
    }
    CHECK_THROWS_WITH_AS(static_cast<void>(stationary_exact(broken, BigRat(2))),
                         doctest::Contains("nullspace dimension"), std::runtime_error);
}

TEST_CASE("horizon law of the M=1 chain after two steps") {
    const BoundedModel model = build_bounded_model(1, exact_horizon_k0(1, 2));
    const auto h = horizon_distribution(model, BigRat(2), 2);
    CHECK(h.finalLayer == 0);
    CHECK(h.lPmf == std::map<long, BigRat>{{0, BigRat(1, 4)}, {1, BigRat(1, 2)},
                                           {2, BigRat(1, 4)}});
    CHECK(h.deviationPmf == std::map<long, BigRat>{{-1, BigRat(1, 4)}, {0, BigRat(1, 2)},
                                                   {1, BigRat(1, 4)}});
    CHECK(h.jumpCountPmf == std::map<long, BigRat>{{0, BigRat(1, 4)}, {1, BigRat(3, 4)}});
    CHECK(h.heightExpectation == std::map<long, BigRat>{{1, BigRat(1, 2)},
                                                        {2, BigRat(1, 4)}});
}

TEST_CASE("power iteration reports non-convergence") {
    const BoundedModel model = build_bounded_model(2, 10);
    PowerIterationOptions opt;
    opt.maxIters = 1;
    opt.tol = 1e-16;
    CHECK_THROWS_AS(static_cast<void>(stationary_power_iteration(model, 2.0, opt)),
                    ConvergenceError);
}
