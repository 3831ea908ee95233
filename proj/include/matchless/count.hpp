#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace matchless {

/// Arbitrary-precision nonnegative counts (family sizes, binomials).
using Count = boost::multiprecision::cpp_int;
/// Exact rationals. Verdicts never touch floating point.
using Ratio = boost::multiprecision::cpp_rational;

/// C(n, k). Returns 0 for k < 0, k > n, and for n < 0 (no k-subsets of a
/// negative-size set), which keeps formulas with shifted arguments total.
Count binom(std::int64_t n, std::int64_t k);

std::string to_string(const Count& c);

/// Always "p/q" with q > 0, also for integers ("6/1").
std::string to_string(const Ratio& r);

/// Inverse of to_string(Ratio); also accepts a bare integer.
Ratio parse_ratio(const std::string& text);

}  // namespace matchless
