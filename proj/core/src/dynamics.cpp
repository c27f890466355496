#include "bdm/dynamics.hpp"

#include <stdexcept>

namespace bdm {

State update_phase(const State& s) {
    require_valid_state(s, "update_phase");
    State next = s;
    const int m = s.m();
    if (s.layer < m) {
        next.d -= 1;
        next.layer += 1;
    } else {
        for (auto& charge : next.b) charge += 1;
        next.layer = 0;
    }
    require_valid_state(next, "update_phase(post)");
    return next;
}

namespace {

struct PathEnumerator {
    const SubcyclePolicy& policy;
    int m;
    std::vector<Outcome> outcomes;

    bool in_model(const State& s) const {
        return !policy.bounded() || policy.classes->count(s) > 0;
    }

    // Walks batteries t..M over a scratch state. Returns true when some
    // completion of the current decision path ends inside the model.
    // Weight factors are attached bottom-up so that a decision point whose
    // sibling branch is dead contributes factor 1 (forced).
    bool walk(State& s, int t, std::vector<Outcome>& out) {
        if (t > m) {
            if (!in_model(s)) return false;
            Outcome o;
            o.state = s;
            o.weight = Weight::one();
            out.push_back(std::move(o));
            return true;
        }
        const int idx = t - 1;
        if (s.b[idx] <= s.d) {
            return walk(s, t + 1, out);  // "-": no action, factor 1
        }

        const int32_t height = s.b[idx] - s.d;

        std::vector<Outcome> viaDischarge;
        std::swap(s.b[idx], s.d);
        const bool dischargeAlive = walk(s, t + 1, viaDischarge);
        std::swap(s.b[idx], s.d);

        std::vector<Outcome> viaInhibition;
        const bool inhibitionAlive = walk(s, t + 1, viaInhibition);

        if (!dischargeAlive && !inhibitionAlive) return false;
        const bool forced = dischargeAlive != inhibitionAlive;

        for (Outcome& o : viaDischarge) {
            o.discharges.insert(o.discharges.begin(), Discharge{t, height});
            if (!forced) {
                o.weight.monomials[0].a += 1;
                o.weight.monomials[0].bExp += 1;
            }
            out.push_back(std::move(o));
        }
        for (Outcome& o : viaInhibition) {
            o.inhibitions += 1;
            if (!forced) o.weight.monomials[0].bExp += 1;
            out.push_back(std::move(o));
        }
        return true;
    }
};

}  // namespace

std::vector<Outcome> subcycle_phase(const State& postUpdate, const SubcyclePolicy& policy) {
    require_valid_state(postUpdate, "subcycle_phase");
    PathEnumerator walker{policy, postUpdate.m(), {}};
    State scratch = postUpdate;
    std::vector<Outcome> out;
    if (!walker.walk(scratch, 1, out)) {
        throw std::runtime_error(
            "subcycle_phase: no decision path reaches the bounded state set from " +
            postUpdate.to_string() + " (class map incomplete?)");
    }
    return out;
}

std::vector<Outcome> step(const State& s, const SubcyclePolicy& policy) {
    return subcycle_phase(update_phase(s), policy);
}

bool weights_sum_to_one(const std::vector<Outcome>& outcomes, int m) {
    // Degree after clearing denominators is at most 2M, so 2M+2 points decide
    // the identity.
    for (int i = 0; i < 2 * m + 2; ++i) {
        const BigRat q(2 * i + 3, 2);  // 3/2, 5/2, ... all > 1
        BigRat sum = 0;
        for (const Outcome& o : outcomes) sum += o.weight.eval(q);
        if (sum != 1) return false;
    }
    return true;
}

}  // namespace bdm
