#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cayley {

// Exact arithmetic everywhere: curvature values are rationals, never floats.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& q) {
    return q.sign();
}

/// Renders "p/q" in lowest terms, or just "p" when q == 1.
std::string to_fraction_string(const Rational& q);

/// Convenience float rendering, clearly approximate (used only for display columns).
double to_approx(const Rational& q);

Rational make_rational(long long num, long long den);

} // namespace cayley
