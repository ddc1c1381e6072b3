#pragma once

#include "cigenus/gamma.hpp"

#include <optional>

namespace cigenus {

struct OptimizationResult {
  ProfileMode mode = ProfileMode::custom;
  long long chosen_m = 0;
  long long window_lo = 0;  // m-search window, recorded for auditability
  long long window_hi = 0;
  GammaProfile profile;
  Rat objective;
  Rat genus_bound;  // objective + 1
};

/// Profile with the forced initial segment below m and the constant rational
/// plateau of width sigma_k - n + 2 carrying the remaining mass.
GammaProfile relaxed_profile(const CurveInstance& inst, long long m);

/// Integer profile filling the tail mass as far right as possible under the
/// envelope caps and the monotone-tail constraint.
GammaProfile tight_profile(const CurveInstance& inst, long long m);

/// Smallest m >= m0 admitting a valid profile in the given mode, if any.
std::optional<long long> smallest_feasible_m(const CurveInstance& inst, ProfileMode mode);

/// Maximizes the objective sum (i-1)*gamma_i over the m-window and returns
/// the genus bound objective + 1. The relaxed window collapses to m0; the
/// tight window is [m0, m0 + sigma_k].
OptimizationResult genus_bound_opt(const CurveInstance& inst, ProfileMode mode);

}  // namespace cigenus
