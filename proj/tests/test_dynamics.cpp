#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdm/classes.hpp"
#include "bdm/dynamics.hpp"
#include "test_support.hpp"

#include <algorithm>

using namespace bdm;
using testsupport::Rng;
using testsupport::st;

TEST_CASE("monomial evaluation and printing") {
    Monomial m{2, 3, 1};
    CHECK(m.eval(2.0) == doctest::Approx(1.0 / 8.0));
    CHECK(m.eval(BigRat(2)) == BigRat(1, 8));
    CHECK(m.to_string() == "(q-1)^2/q^3");
    CHECK(Monomial{0, 0, 1}.to_string() == "1");
    CHECK(Monomial{1, 1, 1}.to_string() == "(q-1)/q");
    CHECK(Monomial{0, 2, 1}.to_string() == "1/q^2");
    CHECK(Monomial{0, 1, 2}.to_string() == "2/q");
}

TEST_CASE("weight normalization merges equal shapes") {
    Weight w;
    w.monomials = {{1, 2, 1}, {0, 1, 1}, {1, 2, 2}};
    w.normalize();
    REQUIRE(w.monomials.size() == 2);
    CHECK(w.monomials[0] == Monomial{0, 1, 1});
    CHECK(w.monomials[1] == Monomial{1, 2, 3});
    CHECK(w.eval(BigRat(3)) == BigRat(1, 3) + BigRat(3 * 2, 9));
}

TEST_CASE("state invariant and base states") {
    CHECK(origin_state(3).satisfies_invariant());
    CHECK(base_state(3, 2) == st({-1, -1, 0}, 0, 2));
    CHECK(!st({1, 1}, -2, 1).satisfies_invariant());
    CHECK_THROWS_AS(base_state(0, 0), std::invalid_argument);
}

TEST_CASE("update phase decrements the drain below the top layer") {
    CHECK(update_phase(st({0, 0, 0}, 0, 0)) == st({0, 0, 0}, -1, 1));
    // Same rule one layer further down, M = 2.
    CHECK(update_phase(st({1, 1}, -3, 1)) == st({1, 1}, -4, 2));
}

TEST_CASE("update phase increments batteries when wrapping") {
    CHECK(update_phase(st({-1, -1, -1}, 0, 3)) == st({0, 0, 0}, 0, 0));
}

TEST_CASE("update phase rejects invalid states") {
    CHECK_THROWS_AS(update_phase(st({1, 1}, -2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(update_phase(State({}, 0, 0)), std::invalid_argument);
}

TEST_CASE("subcycle phase: six outcomes of the worked example") {
    const auto outcomes = subcycle_phase(st({0, 2, 1}, -4, 1));
    REQUIRE(outcomes.size() == 6);

    auto expect = [&](size_t i, const State& s, uint32_t a, uint32_t bExp,
                      const std::vector<Discharge>& discharges, int inh) {
        CAPTURE(i);
        CHECK(outcomes[i].state == s);
        CHECK(outcomes[i].weight == Weight(Monomial{a, bExp, 1}));
        CHECK(outcomes[i].discharges == discharges);
        CHECK(outcomes[i].inhibitions == inh);
    };
    expect(0, st({-4, 0, 1}, 2, 1), 2, 2, {{1, 4}, {2, 2}}, 0);  // DD-
    expect(1, st({-4, 2, 0}, 1, 1), 2, 3, {{1, 4}, {3, 1}}, 1);  // DID
    expect(2, st({-4, 2, 1}, 0, 1), 1, 3, {{1, 4}}, 2);          // DII
    expect(3, st({0, -4, 1}, 2, 1), 1, 2, {{2, 6}}, 1);          // ID-
    expect(4, st({0, 2, -4}, 1, 1), 1, 3, {{3, 5}}, 2);          // IID
    expect(5, st({0, 2, 1}, -4, 1), 0, 3, {}, 3);                // III

    CHECK(weights_sum_to_one(outcomes, 3));
}

TEST_CASE("subcycle phase: nothing eligible means a single unit outcome") {
    const auto outcomes = subcycle_phase(st({0, 0, 0}, 0, 0));
    REQUIRE(outcomes.size() == 1);
    CHECK(outcomes[0].state == st({0, 0, 0}, 0, 0));
    CHECK(outcomes[0].weight == Weight::one());
    CHECK(outcomes[0].discharges.empty());
    CHECK(outcomes[0].inhibitions == 0);
}

TEST_CASE("subcycle phase: cascade after the first inhibition") {
    const auto outcomes = subcycle_phase(st({0, 0, 0}, -1, 1));
    REQUIRE(outcomes.size() == 4);
    CHECK(outcomes[0].state == st({-1, 0, 0}, 0, 1));
    CHECK(outcomes[0].weight == Weight(Monomial{1, 1, 1}));
    CHECK(outcomes[1].state == st({0, -1, 0}, 0, 1));
    CHECK(outcomes[1].weight == Weight(Monomial{1, 2, 1}));
    CHECK(outcomes[2].state == st({0, 0, -1}, 0, 1));
    CHECK(outcomes[2].weight == Weight(Monomial{1, 3, 1}));
    CHECK(outcomes[3].state == st({0, 0, 0}, -1, 1));
    CHECK(outcomes[3].weight == Weight(Monomial{0, 3, 1}));
}

TEST_CASE("bounded step matches the 16-state reference rows") {
    const ClassMap classes = compute_classes(3, 2);
    const SubcyclePolicy policy = SubcyclePolicy::bounded_by(classes);

    auto outcomes_match = [&](const State& s,
                              const std::vector<testsupport::ExpectedOutcome>& expected) {
        auto actual = step(s, policy);
        REQUIRE(actual.size() == expected.size());
        for (const auto& e : expected) {
            auto it = std::find_if(actual.begin(), actual.end(),
                                   [&](const Outcome& o) { return o.state == e.state; });
            REQUIRE(it != actual.end());
            CHECK(it->weight == Weight(Monomial{e.a, e.bExp, 1}));
        }
    };

    // Forced discharge: the pure-inhibition branch would leave the model.
    outcomes_match(st({0, 0, 0}, 0, 0), testsupport::reference_model_3_2()[0].outcomes);
    // Inhibition from a boundary-class state whose successor is still inside.
    outcomes_match(st({-2, -1, 0}, 0, 3), testsupport::reference_model_3_2()[15].outcomes);
    // Entirely forced chain collapses to probability one.
    const auto forced = step(st({-1, 0, 1}, 0, 0), policy);
    REQUIRE(forced.size() == 1);
    CHECK(forced[0].state == st({-1, -1, 0}, 1, 1));
    CHECK(forced[0].weight == Weight::one());
}

TEST_CASE("all-discharge trace is periodic through the base states") {
    for (int m = 1; m <= 4; ++m) {
        State s = origin_state(m);
        for (int n = 1; n <= 3 * (m + 1); ++n) {
            const auto outcomes = step(s);
            // Depth-first order puts the all-discharge path first.
            const Outcome& allD = outcomes.front();
            CHECK(allD.inhibitions == 0);
            for (const Discharge& d : allD.discharges) CHECK(d.height == 1);
            s = allD.state;
            CHECK(s == base_state(m, n % (m + 1)));
        }
    }
}

TEST_CASE("base-state steps only record unit heights") {
    for (int m = 1; m <= 4; ++m)
        for (int t = 0; t <= m; ++t)
            for (const Outcome& o : step(base_state(m, t)))
                for (const Discharge& d : o.discharges) CHECK(d.height == 1);
}

TEST_CASE("random states: invariants of the step relation") {
    Rng rng(20240711);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + rng.below(4);
        const int layer = rng.below(m + 1);
        std::vector<int32_t> b(static_cast<size_t>(m));
        int64_t sum = 0;
        for (auto& v : b) {
            v = static_cast<int32_t>(rng.below(9) - 4);
            sum += v;
        }
        State s(b, static_cast<int32_t>(-layer - sum), layer);
        REQUIRE(s.satisfies_invariant());

        const State post = update_phase(s);
        const auto outcomes = step(s);
        CHECK(weights_sum_to_one(outcomes, m));
        for (const Outcome& o : outcomes) {
            CHECK(o.state.satisfies_invariant());
            CHECK(o.state.layer == (layer + 1) % (m + 1));
            // Swaps conserve the total charge of the post-update state.
            CHECK(o.state.charge_sum() == post.charge_sum());
            CHECK(static_cast<int>(o.discharges.size()) + o.inhibitions <= m);
            for (const Discharge& d : o.discharges) CHECK(d.height >= 1);
        }
    }
}
