#pragma once

#include "cigenus/exactnum.hpp"
#include "cigenus/hilbert.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace cigenus {

/// Thrown when a requested m admits no valid gamma-profile. Carries the
/// smallest feasible m when one exists.
class infeasible_error : public std::runtime_error {
 public:
  infeasible_error(const std::string& what, std::optional<long long> smallest = std::nullopt)
      : std::runtime_error(what), smallest_feasible_m(smallest) {}

  std::optional<long long> smallest_feasible_m;
};

/// A complete intersection surface in P^n cut out by n-2 equations of
/// degrees k_1 <= ... <= k_{n-2}.
struct SurfaceSpec {
  int n = 0;
  std::vector<long long> degrees;  // sorted ascending on construction

  SurfaceSpec(int ambient_n, std::vector<long long> ks);

  Int product() const { return product_; }        // K = k_1 ... k_{n-2}
  long long degree_sum() const { return sum_; }   // k_1 + ... + k_{n-2}

  /// The surface equations restricted to a generic P^{n-2}.
  IdealSpec point_ideal() const;
  /// Same with one extra generator of degree m.
  IdealSpec envelope_ideal(long long m) const;

 private:
  Int product_ = 1;
  long long sum_ = 0;
};

/// A degree-d curve on the surface, with the Bezout data m0 = ceil(d/K) and
/// epsilon = d - K*m0 (nonpositive; only epsilon^2 is ever consumed).
struct CurveInstance {
  SurfaceSpec surface;
  long long d = 0;
  long long m0 = 0;
  Int epsilon;

  CurveInstance(SurfaceSpec s, long long degree);
};

enum class ProfileMode { relaxed, tight, custom };

const char* profile_mode_name(ProfileMode mode);

/// Finitely supported gamma-sequence: values[i] for 0 <= i < support_end(),
/// zero beyond. Indices below m carry the forced complete-intersection
/// segment; the tail starting at m is where the optimization happens.
struct GammaProfile {
  ProfileMode mode = ProfileMode::custom;
  long long m = 0;
  std::vector<Rat> values;

  long long support_end() const { return static_cast<long long>(values.size()); }
  Rat sum() const;
  Rat objective() const;  // sum over i of (i-1) * values[i]
};

/// gamma_i for i < m: Hilbert function of the surface equations restricted
/// to P^{n-2}.
Int gamma_initial(const SurfaceSpec& surface, long long i);

/// Upper cap on gamma_i for i >= m: Hilbert function after adjoining the
/// degree-m section.
Int gamma_envelope(const SurfaceSpec& surface, long long m, long long i);

/// First index at which the envelope is identically zero: m + sigma_k - n + 2.
long long vanish_index(const SurfaceSpec& surface, long long m);

/// d minus the initial segment below m, i.e. the mass the tail must carry.
/// Throws infeasible_error when negative (d too small for this m).
Int tail_mass(const CurveInstance& inst, long long m);

/// Inequality gate of the main theorem: d >= K * (k_1 + ... + k_{n-2}).
bool threshold_check(const CurveInstance& inst);

Int threshold_value(const SurfaceSpec& surface);

/// Validates every profile invariant (nonnegativity, exact sum d, initial
/// segment, monotone tail, vanishing, and envelope caps + integrality in
/// tight mode). Throws std::logic_error with a description on violation.
void validate_profile(const GammaProfile& profile, const CurveInstance& inst);

}  // namespace cigenus
