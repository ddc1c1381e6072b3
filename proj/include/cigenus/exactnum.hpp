#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace cigenus {

// All core arithmetic is exact: arbitrary-precision integers and rationals
// kept in lowest terms with a positive denominator. No floating point enters
// any computed value; decimals exist only as a display format.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Binomial coefficient with the truncation convention used by every graded
/// dimension formula in this library: C(a, b) for a >= b >= 0, and 0 whenever
/// a < b (in particular for all negative a). Negative b is rejected.
Int binom_trunc(const Int& a, const Int& b);

/// Ceiling of num/den for den > 0.
Int ceil_div(const Int& num, const Int& den);

/// Rational from a numerator/denominator pair, normalized (lowest terms,
/// positive denominator). Throws on zero denominator.
Rat make_rat(const Int& num, const Int& den);

bool is_integral(const Rat& value);

/// Exact integer value of an integral rational; throws if not integral.
Int to_int_exact(const Rat& value);

/// "42" for integers, "87/2" otherwise.
std::string fraction_string(const Rat& value);

/// Decimal approximation with the given number of significant digits
/// (display only; never used in computation).
std::string decimal_string(const Rat& value, int significant_digits = 15);

}  // namespace cigenus
