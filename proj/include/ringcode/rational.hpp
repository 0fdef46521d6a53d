#pragma once

// Exact arithmetic used throughout the library. All weights, distances and
// bound values are rationals; counts (ball volumes, code sizes) are integers.
// Floating point only appears in optional display columns.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ringcode {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_floor(const Rat& r) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);  // always > 0
    BigInt q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

inline BigInt rat_ceil(const Rat& r) { return -rat_floor(-r); }

/// Lossless rendering: "p/q", or just "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

/// Accepts "p", "p/q" and decimal literals like "0.75", all parsed exactly.
inline Rat parse_rational(std::string_view text) {
    auto fail = [&] { throw std::invalid_argument("bad rational: '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    std::size_t slash = text.find('/');
    std::size_t dot = text.find('.');
    try {
        if (slash != std::string_view::npos) {
            BigInt num(std::string(text.substr(0, slash)));
            BigInt den(std::string(text.substr(slash + 1)));
            if (den == 0) fail();
            return Rat(num, den);
        }
        if (dot != std::string_view::npos) {
            std::string head(text.substr(0, dot));
            std::string frac(text.substr(dot + 1));
            if (frac.empty()) fail();
            bool neg = !head.empty() && head[0] == '-';
            BigInt whole = head.empty() || head == "-" || head == "+" ? BigInt(0) : BigInt(head);
            BigInt scale = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
            BigInt num = abs(whole) * scale + BigInt(frac);
            return Rat(neg ? -num : num, scale);
        }
        return Rat(BigInt(std::string(text)));
    } catch (const std::runtime_error&) {
        fail();
    }
    return Rat();  // unreachable
}

inline BigInt int_pow(const BigInt& base, std::size_t exp) {
    BigInt result = 1;
    for (std::size_t i = 0; i < exp; ++i) result *= base;
    return result;
}

/// Binomial coefficient with out-of-range arguments mapped to 0.
inline BigInt binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace ringcode
