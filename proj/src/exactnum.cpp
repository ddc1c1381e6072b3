#include "cigenus/exactnum.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <iomanip>
#include <sstream>

namespace cigenus {

Int binom_trunc(const Int& a, const Int& b) {
  if (b < 0) {
    throw std::invalid_argument("binom_trunc: negative lower index");
  }
  if (a < b) {
    return 0;
  }
  // a >= b >= 0: use the smaller of b and a-b.
  Int k = b;
  if (a - b < k) {
    k = a - b;
  }
  Int result = 1;
  for (Int j = 1; j <= k; ++j) {
    result *= a - k + j;
    result /= j;  // exact at every step: result is C(a-k+j, j)
  }
  return result;
}

Int ceil_div(const Int& num, const Int& den) {
  if (den <= 0) {
    throw std::invalid_argument("ceil_div: denominator must be positive");
  }
  Int q = num / den;  // truncates toward zero
  if (num > q * den) {
    ++q;
  }
  return q;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) {
    throw std::invalid_argument("make_rat: zero denominator");
  }
  return Rat(num) / Rat(den);
}

bool is_integral(const Rat& value) { return denominator(value) == 1; }

Int to_int_exact(const Rat& value) {
  if (!is_integral(value)) {
    throw std::invalid_argument("to_int_exact: value " + fraction_string(value) +
                                " is not an integer");
  }
  return numerator(value);
}

std::string fraction_string(const Rat& value) {
  std::ostringstream out;
  out << numerator(value);
  if (denominator(value) != 1) {
    out << "/" << denominator(value);
  }
  return out.str();
}

std::string decimal_string(const Rat& value, int significant_digits) {
  using Dec = boost::multiprecision::cpp_dec_float_50;
  Dec approx = Dec(numerator(value)) / Dec(denominator(value));
  std::ostringstream out;
  out << std::setprecision(significant_digits) << approx;
  return out.str();
}

}  // namespace cigenus
