#include "cigenus/bounds.hpp"

#include <algorithm>

namespace cigenus {

namespace {

Int sum_of_squares(const std::vector<long long>& ks) {
  Int total = 0;
  for (long long k : ks) {
    total += Int(k) * k;
  }
  return total;
}

Int strict_pair_sum(const std::vector<long long>& ks) {
  Int total = 0;
  for (size_t i = 1; i < ks.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      total += Int(ks[i]) * ks[j];
    }
  }
  return total;
}

// The displayed double sum read literally: i from 2 to n-2, j from 1 to i,
// so the diagonal terms k_i^2 for i >= 2 are included.
Int as_written_pair_sum(const std::vector<long long>& ks) {
  Int total = 0;
  for (size_t i = 1; i < ks.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      total += Int(ks[i]) * ks[j];
    }
  }
  return total;
}

Int factorial(int n) {
  Int f = 1;
  for (int j = 2; j <= n; ++j) {
    f *= j;
  }
  return f;
}

}  // namespace

Rat closed_form_bound(const CurveInstance& inst) {
  const SurfaceSpec& s = inst.surface;
  const Int K = s.product();
  const long long sigma = s.degree_sum();
  const long long n = s.n;
  const Int d = inst.d;

  Rat bound = make_rat(d * d, 2 * K);
  bound += make_rat(d * (sigma - n - 1), 2);
  bound -= make_rat(inst.epsilon * inst.epsilon, 2 * K);
  bound += 1;
  Rat bracket = Rat(sum_of_squares(s.degrees)) + 3 * Rat(strict_pair_sum(s.degrees)) -
                Rat(3 * (n - 2) * Int(sigma)) + make_rat(Int(n - 2) * (3 * n - 5), 2);
  bound += make_rat(K, 12) * bracket;
  return bound;
}

Rat specialization_n4(long long k1, long long k2, long long d) {
  CurveInstance inst(SurfaceSpec(4, {k1, k2}), d);
  const Int K = Int(k1) * k2;
  Rat bound = make_rat(Int(d) * d, 2 * K);
  bound += make_rat(Int(d) * (k1 + k2 - 5), 2);
  bound -= make_rat(inst.epsilon * inst.epsilon, 2 * K);
  bound += 1;
  Int bracket = Int(k1) * k1 + Int(k2) * k2 + 3 * Int(k1) * k2 - 6 * (Int(k1) + k2) + 7;
  bound += make_rat(K * bracket, 12);
  return bound;
}

Rat specialization_n5(long long k1, long long k2, long long k3, long long d) {
  CurveInstance inst(SurfaceSpec(5, {k1, k2, k3}), d);
  const Int K = Int(k1) * k2 * k3;
  Rat bound = make_rat(Int(d) * d, 2 * K);
  bound += make_rat(Int(d) * (k1 + k2 + k3 - 6), 2);
  bound -= make_rat(inst.epsilon * inst.epsilon, 2 * K);
  bound += 1;
  Int bracket = Int(k1) * k1 + Int(k2) * k2 + Int(k3) * k3 + 3 * Int(k1) * k2 + 3 * Int(k1) * k3 +
                3 * Int(k2) * k3 - 9 * (Int(k1) + k2 + k3) + 15;
  bound += make_rat(K * bracket, 12);
  return bound;
}

std::pair<Rat, Rat> leading_terms(const SurfaceSpec& surface) {
  return {make_rat(1, 2 * surface.product()),
          make_rat(surface.degree_sum() - surface.n - 1, 2)};
}

CalclemResult calclem_check(long long A, long long B, int n) {
  if (A < 0 || B < 0 || n < 2) {
    throw std::invalid_argument("calclem_check: requires A, B >= 0 and n >= 2");
  }
  Rat lhs = 0;
  for (long long i = A; i < A + B; ++i) {
    lhs += Rat(i - 1) * Rat(binom_trunc(Int(i) + n - 2 - A, Int(n) - 2));
  }
  Rat rhs = make_rat(binom_trunc(Int(B) + n - 2, Int(n) - 1), n) *
            Rat(Int(n) * A + Int(n - 1) * B - 2 * n + 1);
  return {lhs, rhs, lhs == rhs};
}

namespace {

// k_1...k_{n-2}-divisible part of (k_1 + ... + k_{n-2})^left: the sum over
// compositions with every exponent >= 1 of the multinomial times the monomial.
Int divisible_power_part(const std::vector<long long>& ks, size_t pos, int left,
                         const Int& coeff_so_far, const Int& monomial_so_far) {
  if (pos == ks.size()) {
    return left == 0 ? coeff_so_far * monomial_so_far : Int(0);
  }
  const int remaining_vars = static_cast<int>(ks.size() - pos);
  Int total = 0;
  Int power_val = ks[pos];
  for (int e = 1; e + (remaining_vars - 1) <= left; ++e) {
    Int coeff = coeff_so_far * binom_trunc(left, e);
    total += divisible_power_part(ks, pos + 1, left - e, coeff, monomial_so_far * power_val);
    power_val *= ks[pos];
  }
  return total;
}

}  // namespace

StirReport stir_check(const SurfaceSpec& surface) {
  const std::vector<long long>& ks = surface.degrees;
  const int n = surface.n;
  const long long sigma = surface.degree_sum();
  const Int K = surface.product();
  const int parity = (n % 2 == 0) ? 1 : -1;

  StirReport report;
  for (SignConvention conv : {SignConvention::corrected, SignConvention::as_written}) {
    Rat lhs = 0;
    for (const SignedSum& s : signed_partial_sums(ks, conv)) {
      lhs += make_rat(Int(parity) * s.sign * s.t * binom_trunc(Int(s.t) + n - 2, Int(n) - 1), n);
    }
    (conv == SignConvention::corrected ? report.lhs_corrected : report.lhs_as_written) = lhs;
  }

  auto rhs_bracket = [&](const Int& pair_sum) {
    Rat bracket = make_rat(sum_of_squares(ks), 6);
    bracket += make_rat(pair_sum, 4);
    bracket += make_rat(binom_trunc(n - 1, 2), 2 * n) * Rat(sigma);
    bracket += make_rat(factorial(n - 2) * (3 * n - 4) * binom_trunc(n - 1, 3), 4 * factorial(n));
    return Rat(-K) * bracket;
  };
  report.rhs_strict = rhs_bracket(strict_pair_sum(ks));
  report.rhs_as_written = rhs_bracket(as_written_pair_sum(ks));

  // Symbolic expansion of (1/n) s binom(s+n-2, n-1) = (1/n!) s^2 (s+1)...(s+n-2)
  // as a polynomial in s, then the divisible part of each power of s.
  std::vector<Int> poly = {0, 0, 1};  // s^2
  for (int j = 1; j <= n - 2; ++j) {
    std::vector<Int> next(poly.size() + 1, 0);
    for (size_t deg = 0; deg < poly.size(); ++deg) {
      next[deg] += poly[deg] * j;
      next[deg + 1] += poly[deg];
    }
    poly = std::move(next);
  }
  Rat oracle = 0;
  for (size_t deg = 0; deg < poly.size(); ++deg) {
    if (poly[deg] == 0) {
      continue;
    }
    Int part = divisible_power_part(ks, 0, static_cast<int>(deg), 1, 1);
    oracle += make_rat(poly[deg] * part, factorial(n));
  }
  report.oracle_divisible = oracle;
  report.oracle_rhs = -oracle;

  report.lhs_corrected_matches_oracle = report.lhs_corrected == report.oracle_rhs;
  report.lhs_as_written_matches_oracle = report.lhs_as_written == report.oracle_rhs;
  report.rhs_strict_matches_oracle = report.rhs_strict == report.oracle_rhs;
  report.rhs_as_written_matches_oracle = report.rhs_as_written == report.oracle_rhs;
  return report;
}

Int ci_curve_genus(int ambient_n, const std::vector<long long>& degrees) {
  if (ambient_n < 2) {
    throw std::invalid_argument("ci_curve_genus: ambient dimension must be >= 2");
  }
  if (static_cast<long long>(degrees.size()) != ambient_n - 1) {
    throw std::invalid_argument("ci_curve_genus: a curve in P^" + std::to_string(ambient_n) +
                                " needs " + std::to_string(ambient_n - 1) + " degrees");
  }
  Int prod = 1;
  Int sum = 0;
  for (long long k : degrees) {
    if (k < 1) {
      throw std::invalid_argument("ci_curve_genus: degrees must be positive");
    }
    prod *= k;
    sum += k;
  }
  Int twice = prod * (sum - ambient_n - 1);
  if (twice % 2 != 0) {
    throw std::logic_error("ci_curve_genus: adjunction gave a non-integer genus");
  }
  return 1 + twice / 2;
}

BmsSmallDegreeBound bms_small_degree_bound(const std::vector<long long>& threefold_degrees,
                                           int ambient_n, long long d) {
  if (static_cast<long long>(threefold_degrees.size()) != ambient_n - 3) {
    throw std::invalid_argument("bms_small_degree_bound: a threefold in P^" +
                                std::to_string(ambient_n) + " needs " +
                                std::to_string(ambient_n - 3) + " degrees");
  }
  Int prod = 1;
  Int sum = 0;
  for (long long k : threefold_degrees) {
    prod *= k;
    sum += k;
  }
  BmsSmallDegreeBound out;
  out.value = make_rat(Int(d) * (sum - ambient_n - 1), 2) + make_rat(2 * Int(d), 3) + 1;
  out.applicable = 2 * Int(d) <= prod;
  return out;
}

Rat bms_castelnuovo_bound(const std::vector<long long>& threefold_degrees, int ambient_n,
                          long long d) {
  if (static_cast<long long>(threefold_degrees.size()) != ambient_n - 3) {
    throw std::invalid_argument("bms_castelnuovo_bound: a threefold in P^" +
                                std::to_string(ambient_n) + " needs " +
                                std::to_string(ambient_n - 3) + " degrees");
  }
  Int prod = 1;
  Int sum = 0;
  for (long long k : threefold_degrees) {
    prod *= k;
    sum += k;
  }
  return make_rat(2 * Int(d) * d, 3 * prod) +
         make_rat(5 + 3 * (sum - ambient_n - 1), 6) * Rat(Int(d)) + 1;
}

BoundReport make_bound_report(const CurveInstance& inst, const ModeSelection& modes) {
  BoundReport report(inst);
  report.threshold = threshold_value(inst.surface);
  report.hypothesis_ok = threshold_check(inst);
  report.leading = leading_terms(inst.surface);

  if (modes.closed_form) {
    report.closed_form = closed_form_bound(inst);
  }
  if (modes.relaxed) {
    OptimizationResult res = genus_bound_opt(inst, ProfileMode::relaxed);
    report.relaxed = res.genus_bound;
    report.relaxed_m = res.chosen_m;
  }
  if (modes.tight) {
    try {
      OptimizationResult res = genus_bound_opt(inst, ProfileMode::tight);
      report.tight = res.genus_bound;
      report.tight_m = res.chosen_m;
    } catch (const infeasible_error& e) {
      report.checks.push_back({"tight_feasible", false, e.what()});
    }
  }

  if (report.closed_form && report.relaxed) {
    bool equal = *report.closed_form == *report.relaxed;
    std::string detail = "closed_form " + fraction_string(*report.closed_form) + " vs relaxed " +
                         fraction_string(*report.relaxed);
    if (!equal && !report.hypothesis_ok) {
      detail += " (degree threshold not met; the closed form only applies above it)";
    }
    report.checks.push_back({"closed_form_equals_relaxed", equal, detail});
  }
  if (report.tight && report.relaxed) {
    report.checks.push_back({"tight_le_relaxed", *report.tight <= *report.relaxed,
                             "tight " + fraction_string(*report.tight) + " vs relaxed " +
                                 fraction_string(*report.relaxed)});
  }
  if (Int(inst.d) % inst.surface.product() == 0) {
    std::vector<long long> curve_degrees = inst.surface.degrees;
    curve_degrees.push_back(inst.m0);
    Int ci = ci_curve_genus(inst.surface.n, curve_degrees);
    report.comparisons.emplace("ci_curve_genus", Rat(ci));
    if (report.hypothesis_ok && report.tight) {
      report.checks.push_back({"ci_genus_le_tight", Rat(ci) <= *report.tight,
                               "ci curve genus " + fraction_string(Rat(ci)) + " vs tight " +
                                   fraction_string(*report.tight)});
    }
  }
  return report;
}

}  // namespace cigenus
