#pragma once

#include "bdm/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bdm {

/*
 * Transition probabilities are finite sums of terms
 *
 *     mult * (q-1)^a / q^b            (0 <= a <= b)
 *
 * A single decision path contributes exactly one such term with mult = 1;
 * merging paths that share a successor adds multiplicities.
 */
struct Monomial {
    uint32_t a = 0;     // exponent of (q-1)
    uint32_t bExp = 0;  // exponent of 1/q
    uint64_t mult = 1;

    bool same_shape(const Monomial& o) const { return a == o.a && bExp == o.bExp; }
    bool operator==(const Monomial& o) const = default;

    double eval(double q) const {
        return static_cast<double>(mult) * std::pow(q - 1.0, a) / std::pow(q, bExp);
    }
    BigRat eval(const BigRat& q) const {
        return BigRat(mult) * rat_pow(q - 1, a) / rat_pow(q, bExp);
    }

    std::string to_string() const {
        std::string numer;
        if (a == 1)
            numer = "(q-1)";
        else if (a > 1)
            numer = "(q-1)^" + std::to_string(a);
        if (mult != 1) numer = std::to_string(mult) + (numer.empty() ? "" : "*") + numer;
        if (numer.empty()) numer = "1";
        if (bExp == 0) return numer;
        return numer + (bExp == 1 ? "/q" : "/q^" + std::to_string(bExp));
    }
};

struct Weight {
    std::vector<Monomial> monomials;

    Weight() = default;
    explicit Weight(Monomial m) : monomials{m} {}

    static Weight one() { return Weight(Monomial{0, 0, 1}); }

    /// Sorted by (bExp, a), equal shapes merged, zero multiplicities dropped.
    void normalize() {
        std::sort(monomials.begin(), monomials.end(), [](const Monomial& x, const Monomial& y) {
            if (x.bExp != y.bExp) return x.bExp < y.bExp;
            return x.a < y.a;
        });
        std::vector<Monomial> out;
        for (const Monomial& m : monomials) {
            if (m.mult == 0) continue;
            if (!out.empty() && out.back().same_shape(m))
                out.back().mult += m.mult;
            else
                out.push_back(m);
        }
        monomials = std::move(out);
    }

    void add(const Weight& o) {
        monomials.insert(monomials.end(), o.monomials.begin(), o.monomials.end());
        normalize();
    }

    template <class Scalar>
    Scalar eval(const Scalar& q) const {
        Scalar sum{};
        for (const Monomial& m : monomials) sum += m.eval(q);
        return sum;
    }

    bool operator==(const Weight& o) const {
        Weight x = *this, y = o;
        x.normalize();
        y.normalize();
        return x.monomials == y.monomials;
    }

    std::string to_string() const {
        if (monomials.empty()) return "0";
        std::string s;
        for (size_t i = 0; i < monomials.size(); ++i) {
            if (i) s += " + ";
            s += monomials[i].to_string();
        }
        return s;
    }
};

inline void require_q_above_one_double(double q) {
    if (!(q > 1.0)) throw std::invalid_argument("q must be > 1");
}
inline void require_q_above_one(const BigRat& q) {
    if (!(q > 1)) throw std::invalid_argument("q must be > 1");
}
inline void require_q_above_one(double q) { require_q_above_one_double(q); }

}  // namespace bdm
