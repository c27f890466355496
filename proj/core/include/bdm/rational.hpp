#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bdm {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, unsigned exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

inline BigRat rat_pow(const BigRat& base, unsigned exp) {
    return BigRat(big_pow(boost::multiprecision::numerator(base), exp),
                  big_pow(boost::multiprecision::denominator(base), exp));
}

/// Parses "a/b", plain integers, and decimal strings ("2.5" -> 5/2).
inline BigRat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty())
            throw std::invalid_argument("parse_rational: malformed fraction '" + text + "'");
        BigInt d(den);
        if (d == 0) throw std::invalid_argument("parse_rational: zero denominator");
        return BigRat(BigInt(num), d);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return BigRat(BigInt(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const size_t fracDigits = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("parse_rational: malformed decimal '" + text + "'");
    return BigRat(BigInt(digits), big_pow(BigInt(10), static_cast<unsigned>(fracDigits)));
}

inline std::string rational_to_string(const BigRat& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Nearest integer, ties away from zero (exact rational rounding).
inline BigInt round_to_nearest(const BigRat& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    BigInt twice = 2 * num;
    if (num >= 0) {
        return (twice + den) / (2 * den);
    }
    return -((-twice + den) / (2 * den));
}

}  // namespace bdm
