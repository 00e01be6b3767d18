#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "iswp/errors.hpp"

namespace iswp {

// Counts overflow 64 bits quickly (n!/(n-k)!, gadget counts), so all counting
// results are arbitrary-precision integers and all bounds exact rationals.
using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Count falling_factorial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    Count r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r *= Count(n - i);
    return r;
}

inline Count binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    Count r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        r *= Count(n - i);
        r /= Count(i + 1);
    }
    return r;
}

inline Count factorial(std::uint64_t n) { return falling_factorial(n, n); }

inline void check_budget(const Count& projected, const Limits& lim, const std::string& what) {
    if (projected > lim.node_budget) {
        throw budget_error(what + ": projected " + projected.str() +
                           " candidate states exceed the node budget of " +
                           std::to_string(lim.node_budget) + " (raise --budget to override)");
    }
}

// Parses "p/q" or a decimal string ("0.25") into an exact rational.
inline Rational parse_rational(const std::string& text) {
    const auto bad = [&] { return input_error("not a rational: '" + text + "'"); };
    if (text.empty()) throw bad();
    std::string s = text;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        s = s.substr(1);
        if (s.empty()) throw bad();
    }
    const auto digits = [&](const std::string& part) {
        if (part.empty()) throw bad();
        for (char c : part)
            if (c < '0' || c > '9') throw bad();
        return Count(part);
    };
    Rational value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        Count num = digits(s.substr(0, slash));
        Count den = digits(s.substr(slash + 1));
        if (den == 0) throw input_error("zero denominator: '" + text + "'");
        value = Rational(num, den);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) throw bad();
        Count num = whole.empty() ? Count(0) : digits(whole);
        Count den = 1;
        if (!frac.empty()) {
            for (char c : frac) {
                if (c < '0' || c > '9') throw bad();
                num = num * 10 + (c - '0');
                den *= 10;
            }
        }
        value = Rational(num, den);
    } else {
        value = Rational(digits(s));
    }
    return negative ? -value : value;
}

inline std::string rational_to_string(const Rational& r) {
    std::string s = boost::multiprecision::numerator(r).str();
    if (boost::multiprecision::denominator(r) != 1)
        s += "/" + boost::multiprecision::denominator(r).str();
    return s;
}

} // namespace iswp
