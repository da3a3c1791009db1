#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace picard2 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

inline Int isqrt_floor(const Int& n) {
    return boost::multiprecision::sqrt(n);
}

/// Exact square test; returns the root when n is a perfect square.
inline std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = isqrt_floor(n);
    if (r * r == n) return r;
    return std::nullopt;
}

/// Splits n = s^2 * f with f squarefree (n > 0). Returns {s, f}.
/// Trial division; radicands in this library are small.
inline std::pair<Int, Int> squarefree_split(Int n) {
    Int s = 1, f = 1;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (int i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2 == 1) f *= p;
    }
    f *= n;
    return {s, f};
}

inline Int numer(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denom(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Renders a rational as "p" or "p/q".
inline std::string rat_str(const Rat& r) {
    std::string s = numer(r).str();
    if (denom(r) != 1) s += "/" + denom(r).str();
    return s;
}

/// Parses "p" or "p/q".
std::optional<Rat> parse_rat(const std::string& s);

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) { r *= n - i; r /= i + 1; }
    return r;
}

}  // namespace picard2
