#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>

namespace nuphase {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& q) { return q.template convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.template convert_to<double>(); }

inline int sign_of(const Rat& q) { return q.sign(); }

/// log2 of a positive big integer, accurate enough for growth-rate readouts
/// even when the value far exceeds double range.
inline double log2_big(const BigInt& n) {
    using boost::multiprecision::msb;
    if (n <= 0) return -std::numeric_limits<double>::infinity();
    const std::size_t bits = msb(n); // floor(log2 n)
    if (bits <= 52) return std::log2(n.template convert_to<double>());
    const BigInt top = n >> (bits - 52);
    return std::log2(top.template convert_to<double>()) + static_cast<double>(bits - 52);
}

} // namespace nuphase
