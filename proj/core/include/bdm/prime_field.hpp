#pragma once

#include <cstdint>

namespace bdm {

/// Arithmetic mod a prime p; elements are 0..p-1. Construction rejects
/// composite moduli.
class PrimeField {
public:
    explicit PrimeField(int32_t p);

    int32_t p() const { return p_; }

    int32_t add(int32_t x, int32_t y) const { return (x + y) % p_; }
    int32_t sub(int32_t x, int32_t y) const { return ((x - y) % p_ + p_) % p_; }
    int32_t mul(int32_t x, int32_t y) const {
        return static_cast<int32_t>((static_cast<int64_t>(x) * y) % p_);
    }
    int32_t neg(int32_t x) const { return x == 0 ? 0 : p_ - x; }
    int32_t inv(int32_t x) const;

private:
    int32_t p_;
};

}  // namespace bdm
