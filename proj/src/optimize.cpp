#include "cigenus/optimize.hpp"

#include <algorithm>

namespace cigenus {

namespace {

long long plateau_width(const SurfaceSpec& surface) {
  return surface.degree_sum() - surface.n + 2;  // >= 0, zero only when all k_i = 1
}

// Initial-segment Hilbert values, shared across the m-window of one search.
std::vector<Int> initial_segment(const SurfaceSpec& surface, long long max_level) {
  return quotient_hf_series_oracle(surface.point_ideal(), std::max(max_level, 0ll));
}

Int segment_sum(const std::vector<Int>& hf, long long below) {
  Int total = 0;
  for (long long i = 0; i < below; ++i) {
    total += hf[static_cast<size_t>(i)];
  }
  return total;
}

// Envelope caps on [m, vanish), clamped to a running minimum so a monotone
// tail sees the effective capacity.
std::vector<Int> envelope_caps(const CurveInstance& inst, long long m) {
  const long long width = plateau_width(inst.surface);
  if (width == 0) {
    return {};
  }
  std::vector<Int> env =
      quotient_hf_series_oracle(inst.surface.envelope_ideal(m), m + width - 1);
  std::vector<Int> caps(env.begin() + m, env.end());
  for (size_t j = 1; j < caps.size(); ++j) {
    caps[j] = std::min(caps[j], caps[j - 1]);
  }
  return caps;
}

bool mode_feasible(const CurveInstance& inst, long long m, ProfileMode mode,
                   const std::vector<Int>& hf) {
  if (m < inst.m0) {
    return false;
  }
  Int tail = Int(inst.d) - segment_sum(hf, m);
  if (tail < 0) {
    return false;
  }
  const long long width = plateau_width(inst.surface);
  if (width == 0) {
    return tail == 0;
  }
  if (mode == ProfileMode::tight) {
    std::vector<Int> caps = envelope_caps(inst, m);
    Int capacity = 0;
    for (const Int& c : caps) {
      capacity += c;
    }
    return tail <= capacity;
  }
  return true;
}

GammaProfile build_relaxed(const CurveInstance& inst, long long m, const std::vector<Int>& hf);
GammaProfile build_tight(const CurveInstance& inst, long long m, const std::vector<Int>& hf);

infeasible_error infeasible_for(const CurveInstance& inst, long long m, ProfileMode mode,
                                const std::string& why) {
  auto suggestion = smallest_feasible_m(inst, mode);
  std::string msg = std::string(profile_mode_name(mode)) + " profile infeasible at m = " +
                    std::to_string(m) + ": " + why;
  if (suggestion) {
    msg += "; smallest feasible m is " + std::to_string(*suggestion);
  } else {
    msg += "; no feasible m exists for this instance";
  }
  return infeasible_error(msg, suggestion);
}

GammaProfile build_relaxed(const CurveInstance& inst, long long m, const std::vector<Int>& hf) {
  if (m < inst.m0) {
    throw infeasible_for(inst, m, ProfileMode::relaxed,
                         "m below the Bezout minimum m0 = " + std::to_string(inst.m0));
  }
  const long long width = plateau_width(inst.surface);
  Int tail = Int(inst.d) - segment_sum(hf, m);
  if (tail < 0) {
    throw infeasible_for(inst, m, ProfileMode::relaxed, "negative tail mass");
  }
  GammaProfile profile;
  profile.mode = ProfileMode::relaxed;
  profile.m = m;
  profile.values.reserve(static_cast<size_t>(m + width));
  for (long long i = 0; i < m; ++i) {
    profile.values.emplace_back(hf[static_cast<size_t>(i)]);
  }
  if (width == 0) {
    if (tail != 0) {
      throw infeasible_for(inst, m, ProfileMode::relaxed,
                           "plateau width sigma_k - n + 2 is zero but tail mass is " +
                               fraction_string(Rat(tail)));
    }
    return profile;
  }
  Rat plateau = make_rat(tail, width);
  for (long long j = 0; j < width; ++j) {
    profile.values.push_back(plateau);
  }
  return profile;
}

GammaProfile build_tight(const CurveInstance& inst, long long m, const std::vector<Int>& hf) {
  if (m < inst.m0) {
    throw infeasible_for(inst, m, ProfileMode::tight,
                         "m below the Bezout minimum m0 = " + std::to_string(inst.m0));
  }
  const long long width = plateau_width(inst.surface);
  Int tail = Int(inst.d) - segment_sum(hf, m);
  if (tail < 0) {
    throw infeasible_for(inst, m, ProfileMode::tight, "negative tail mass");
  }
  std::vector<Int> caps = envelope_caps(inst, m);
  Int capacity = 0;
  for (const Int& c : caps) {
    capacity += c;
  }
  if (tail > capacity) {
    throw infeasible_for(inst, m, ProfileMode::tight,
                         "tail mass " + fraction_string(Rat(tail)) +
                             " exceeds envelope capacity " + fraction_string(Rat(capacity)));
  }

  // Fill the tail as far right as possible. In the transposed picture the
  // profile is a stack of rows anchored at m; row h may extend to the last
  // column whose cap is >= h, and longer rows are worth more per unit of
  // mass, so they are filled first. Caps are nonincreasing, so rows of equal
  // length form bands delimited by consecutive cap values.
  std::vector<Int> heights(caps.size(), 0);
  Int remaining = tail;
  for (long long j = static_cast<long long>(caps.size()) - 1; j >= 0 && remaining > 0; --j) {
    const Int row_len = j + 1;
    Int band = caps[static_cast<size_t>(j)] -
               (j + 1 < static_cast<long long>(caps.size()) ? caps[static_cast<size_t>(j) + 1] : Int(0));
    Int quotient = remaining / row_len;
    Int full_rows = std::min(band, quotient);
    if (full_rows > 0) {
      for (long long col = 0; col <= j; ++col) {
        heights[static_cast<size_t>(col)] += full_rows;
      }
      remaining -= full_rows * row_len;
    }
    if (full_rows < band && remaining > 0 && remaining < row_len) {
      const long long partial = static_cast<long long>(remaining);
      for (long long col = 0; col < partial; ++col) {
        heights[static_cast<size_t>(col)] += 1;
      }
      remaining = 0;
    }
  }

  GammaProfile profile;
  profile.mode = ProfileMode::tight;
  profile.m = m;
  profile.values.reserve(static_cast<size_t>(m + width));
  for (long long i = 0; i < m; ++i) {
    profile.values.emplace_back(hf[static_cast<size_t>(i)]);
  }
  for (const Int& h : heights) {
    profile.values.emplace_back(h);
  }
  while (!profile.values.empty() && profile.values.back() == 0 &&
         static_cast<long long>(profile.values.size()) > m) {
    profile.values.pop_back();
  }
  return profile;
}

}  // namespace

GammaProfile relaxed_profile(const CurveInstance& inst, long long m) {
  if (m < 1) {
    throw std::invalid_argument("relaxed_profile: m must be positive");
  }
  GammaProfile profile = build_relaxed(inst, m, initial_segment(inst.surface, m - 1));
  validate_profile(profile, inst);
  return profile;
}

GammaProfile tight_profile(const CurveInstance& inst, long long m) {
  if (m < 1) {
    throw std::invalid_argument("tight_profile: m must be positive");
  }
  GammaProfile profile = build_tight(inst, m, initial_segment(inst.surface, m - 1));
  validate_profile(profile, inst);
  return profile;
}

std::optional<long long> smallest_feasible_m(const CurveInstance& inst, ProfileMode mode) {
  std::vector<Int> hf;
  for (long long m = inst.m0;; ++m) {
    if (static_cast<long long>(hf.size()) < m) {
      hf = initial_segment(inst.surface, m + 16);
    }
    if (Int(inst.d) - segment_sum(hf, m) < 0) {
      return std::nullopt;  // tail mass only shrinks from here on
    }
    if (mode_feasible(inst, m, mode, hf)) {
      return m;
    }
  }
}

OptimizationResult genus_bound_opt(const CurveInstance& inst, ProfileMode mode) {
  if (mode != ProfileMode::relaxed && mode != ProfileMode::tight) {
    throw std::invalid_argument("genus_bound_opt: mode must be relaxed or tight");
  }
  const long long lo = inst.m0;
  const long long hi =
      (mode == ProfileMode::relaxed) ? inst.m0 : inst.m0 + inst.surface.degree_sum();
  std::vector<Int> hf = initial_segment(inst.surface, hi - 1);

  std::optional<OptimizationResult> best;
  for (long long m = lo; m <= hi; ++m) {
    if (Int(inst.d) - segment_sum(hf, m) < 0) {
      break;  // tail mass is strictly decreasing in m
    }
    if (!mode_feasible(inst, m, mode, hf)) {
      continue;
    }
    GammaProfile profile = (mode == ProfileMode::relaxed) ? build_relaxed(inst, m, hf)
                                                          : build_tight(inst, m, hf);
    Rat objective = profile.objective();
    if (!best || objective > best->objective) {
      best = OptimizationResult{mode, m, lo, hi, std::move(profile), objective, objective + 1};
    }
  }
  if (!best) {
    throw infeasible_error("genus_bound_opt: no feasible m in [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]; d = " + std::to_string(inst.d) +
                           " violates basic feasibility for this surface");
  }
  validate_profile(best->profile, inst);
  return *best;
}

}  // namespace cigenus
