#pragma once

#include "cigenus/exactnum.hpp"

#include <stdexcept>
#include <vector>

namespace cigenus {

/// Thrown when an enumeration would exceed its resource budget.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Degrees of a regular sequence g_1, ..., g_r in the coordinate ring of
/// P^ambient_dim (so ambient_dim + 1 variables). The graded dimensions below
/// depend only on this data.
struct IdealSpec {
  int ambient_dim = 0;
  std::vector<long long> gen_degrees;  // sorted ascending, all >= 1

  IdealSpec(int ambient, std::vector<long long> degrees);

  int r() const { return static_cast<int>(gen_degrees.size()); }
};

/// Sign attached to each nonempty subset of the generator degrees in the
/// inclusion-exclusion over Koszul partial sums. The corrected convention
/// (+1 for odd subsets) is the one the oracles confirm; the as-written
/// convention is kept only so `verify` can report the discrepancy.
enum class SignConvention { corrected, as_written };

struct SignedSum {
  long long t = 0;  // subset sum of degrees
  int sign = 0;     // +1 or -1
};

/// One entry per nonempty subset (2^r - 1 entries), with multiplicity.
std::vector<SignedSum> signed_partial_sums(const std::vector<long long>& degrees,
                                           SignConvention convention = SignConvention::corrected);

/// Dimension of the degree-`level` slice of the ideal (g_1, ..., g_r),
/// evaluated at every level via the truncated binomial.
Int ideal_slice_dim(const IdealSpec& ideal, long long level,
                    SignConvention convention = SignConvention::corrected);

/// Hilbert function of the quotient ring at `level`: the full alternating
/// sum over all subsets, empty subset included.
Int quotient_hf(const IdealSpec& ideal, long long level);

/// Oracle #1: coefficients 0..max_level of prod(1 - q^{d_i}) / (1-q)^{n+1},
/// expanded by exact truncated power-series arithmetic.
std::vector<Int> quotient_hf_series_oracle(const IdealSpec& ideal, long long max_level);

/// Oracle #2: realizes the regular sequence as pure powers x_j^{d_j} and
/// counts the surviving degree-`level` monomials by direct enumeration.
/// Throws budget_error when binom(level + ambient, ambient) > 10^7.
Int quotient_hf_monomial_oracle(const IdealSpec& ideal, long long level);

}  // namespace cigenus
