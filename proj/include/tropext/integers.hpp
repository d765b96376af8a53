#pragma once

// Exact arithmetic base types. Everything in this library computes over
// arbitrary-precision integers and rationals; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tropext {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Canonical decimal rendering, "p/q" with q omitted when 1.
inline std::string rat_to_string(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

inline Rat rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

} // namespace tropext
