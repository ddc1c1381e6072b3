#include "cigenus/hilbert.hpp"

#include <algorithm>

namespace cigenus {

IdealSpec::IdealSpec(int ambient, std::vector<long long> degrees)
    : ambient_dim(ambient), gen_degrees(std::move(degrees)) {
  if (ambient_dim < 0) {
    throw std::invalid_argument("IdealSpec: ambient dimension must be nonnegative");
  }
  for (long long d : gen_degrees) {
    if (d < 1) {
      throw std::invalid_argument("IdealSpec: generator degrees must be positive");
    }
  }
  if (static_cast<long long>(gen_degrees.size()) > ambient_dim + 1) {
    throw std::invalid_argument(
        "IdealSpec: a regular sequence cannot have more generators than variables");
  }
  std::sort(gen_degrees.begin(), gen_degrees.end());
}

std::vector<SignedSum> signed_partial_sums(const std::vector<long long>& degrees,
                                           SignConvention convention) {
  const int r = static_cast<int>(degrees.size());
  if (r > 24) {
    throw std::invalid_argument("signed_partial_sums: too many generators");
  }
  std::vector<SignedSum> sums;
  sums.reserve((1u << r) - 1);
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    long long t = 0;
    int bits = 0;
    for (int j = 0; j < r; ++j) {
      if (mask & (1u << j)) {
        t += degrees[static_cast<size_t>(j)];
        ++bits;
      }
    }
    int odd = bits % 2;
    int sign = (convention == SignConvention::corrected) ? (odd ? 1 : -1) : (odd ? -1 : 1);
    sums.push_back({t, sign});
  }
  return sums;
}

Int ideal_slice_dim(const IdealSpec& ideal, long long level, SignConvention convention) {
  const Int n = ideal.ambient_dim;
  Int total = 0;
  for (const SignedSum& s : signed_partial_sums(ideal.gen_degrees, convention)) {
    total += s.sign * binom_trunc(Int(level) - s.t + n, n);
  }
  return total;
}

Int quotient_hf(const IdealSpec& ideal, long long level) {
  const Int n = ideal.ambient_dim;
  // Empty subset contributes the full polynomial ring; the rest is the slice
  // dimension with signs flipped.
  return binom_trunc(Int(level) + n, n) -
         ideal_slice_dim(ideal, level, SignConvention::corrected);
}

std::vector<Int> quotient_hf_series_oracle(const IdealSpec& ideal, long long max_level) {
  if (max_level < 0) {
    throw std::invalid_argument("quotient_hf_series_oracle: max_level must be nonnegative");
  }
  std::vector<Int> coeff(static_cast<size_t>(max_level) + 1, 0);
  coeff[0] = 1;
  // Multiply by each (1 - q^{d_i}).
  for (long long d : ideal.gen_degrees) {
    for (long long l = max_level; l >= d; --l) {
      coeff[static_cast<size_t>(l)] -= coeff[static_cast<size_t>(l - d)];
    }
  }
  // Divide by (1 - q)^{n+1}: repeated prefix sums.
  for (int pass = 0; pass <= ideal.ambient_dim; ++pass) {
    for (long long l = 1; l <= max_level; ++l) {
      coeff[static_cast<size_t>(l)] += coeff[static_cast<size_t>(l - 1)];
    }
  }
  return coeff;
}

namespace {

// Walks every exponent vector (e_0, ..., e_{nvars-1}) with e_j < cap_j for
// capped positions and sum `remaining`, counting leaves. Only valid prefixes
// are visited, so the walk is bounded by the final count times the depth.
long long count_exponent_vectors(const std::vector<long long>& caps, size_t pos, int nvars,
                                 long long remaining) {
  if (pos == static_cast<size_t>(nvars) - 1) {
    if (pos < caps.size() && remaining >= caps[pos]) {
      return 0;
    }
    return 1;
  }
  long long limit = remaining;
  if (pos < caps.size() && caps[pos] - 1 < limit) {
    limit = caps[pos] - 1;
  }
  long long total = 0;
  for (long long e = 0; e <= limit; ++e) {
    total += count_exponent_vectors(caps, pos + 1, nvars, remaining - e);
  }
  return total;
}

}  // namespace

Int quotient_hf_monomial_oracle(const IdealSpec& ideal, long long level) {
  if (level < 0) {
    return 0;
  }
  const int nvars = ideal.ambient_dim + 1;
  static const Int kBudget = 10000000;
  if (binom_trunc(Int(level) + ideal.ambient_dim, Int(ideal.ambient_dim)) > kBudget) {
    throw budget_error("quotient_hf_monomial_oracle: enumeration budget exceeded at level " +
                       std::to_string(level));
  }
  return count_exponent_vectors(ideal.gen_degrees, 0, nvars, level);
}

}  // namespace cigenus
