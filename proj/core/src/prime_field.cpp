#include "bdm/prime_field.hpp"

#include <stdexcept>
#include <string>

namespace bdm {

namespace {

bool is_prime(int32_t n) {
    if (n < 2) return false;
    for (int32_t d = 2; static_cast<int64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(int32_t p) : p_(p) {
    if (!is_prime(p))
        throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                    " is not prime");
}

int32_t PrimeField::inv(int32_t x) const {
    x %= p_;
    if (x < 0) x += p_;
    if (x == 0) throw std::domain_error("PrimeField: inverse of zero");
    // Extended Euclid.
    int64_t a = x, b = p_, u = 1, v = 0;
    while (b) {
        const int64_t t = a / b;
        a -= t * b;
        std::swap(a, b);
        u -= t * v;
        std::swap(u, v);
    }
    u %= p_;
    if (u < 0) u += p_;
    return static_cast<int32_t>(u);
}

}  // namespace bdm
