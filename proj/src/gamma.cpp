#include "cigenus/gamma.hpp"

#include <algorithm>

namespace cigenus {

SurfaceSpec::SurfaceSpec(int ambient_n, std::vector<long long> ks)
    : n(ambient_n), degrees(std::move(ks)) {
  if (n < 3) {
    throw std::invalid_argument("SurfaceSpec: ambient projective dimension must be >= 3");
  }
  if (static_cast<long long>(degrees.size()) != n - 2) {
    throw std::invalid_argument("SurfaceSpec: expected " + std::to_string(n - 2) +
                                " surface degrees, got " + std::to_string(degrees.size()));
  }
  for (long long k : degrees) {
    if (k < 1) {
      throw std::invalid_argument("SurfaceSpec: surface degrees must be positive");
    }
  }
  std::sort(degrees.begin(), degrees.end());
  for (long long k : degrees) {
    product_ *= k;
    sum_ += k;
  }
}

IdealSpec SurfaceSpec::point_ideal() const { return IdealSpec(n - 2, degrees); }

IdealSpec SurfaceSpec::envelope_ideal(long long m) const {
  if (m < 1) {
    throw std::invalid_argument("envelope_ideal: section degree m must be positive");
  }
  std::vector<long long> gens = degrees;
  gens.push_back(m);
  return IdealSpec(n - 2, gens);
}

CurveInstance::CurveInstance(SurfaceSpec s, long long degree) : surface(std::move(s)), d(degree) {
  if (d < 1) {
    throw std::invalid_argument("CurveInstance: curve degree must be positive");
  }
  Int m0_big = ceil_div(Int(d), surface.product());
  m0 = static_cast<long long>(m0_big);
  epsilon = Int(d) - surface.product() * m0_big;
}

const char* profile_mode_name(ProfileMode mode) {
  switch (mode) {
    case ProfileMode::relaxed:
      return "relaxed";
    case ProfileMode::tight:
      return "tight";
    case ProfileMode::custom:
      return "custom";
  }
  return "unknown";
}

Rat GammaProfile::sum() const {
  Rat total = 0;
  for (const Rat& v : values) {
    total += v;
  }
  return total;
}

Rat GammaProfile::objective() const {
  Rat total = 0;
  long long i = 0;
  for (const Rat& v : values) {
    total += Rat(i - 1) * v;
    ++i;
  }
  return total;
}

Int gamma_initial(const SurfaceSpec& surface, long long i) {
  if (i < 0) {
    throw std::invalid_argument("gamma_initial: index must be nonnegative");
  }
  return quotient_hf(surface.point_ideal(), i);
}

Int gamma_envelope(const SurfaceSpec& surface, long long m, long long i) {
  if (i < 0) {
    throw std::invalid_argument("gamma_envelope: index must be nonnegative");
  }
  return quotient_hf(surface.envelope_ideal(m), i);
}

long long vanish_index(const SurfaceSpec& surface, long long m) {
  if (m < 1) {
    throw std::invalid_argument("vanish_index: m must be positive");
  }
  return m + surface.degree_sum() - surface.n + 2;
}

namespace {

Int tail_mass_raw(const CurveInstance& inst, long long m) {
  std::vector<Int> initial = quotient_hf_series_oracle(inst.surface.point_ideal(), m > 0 ? m - 1 : 0);
  Int seen = 0;
  for (long long i = 0; i < m; ++i) {
    seen += initial[static_cast<size_t>(i)];
  }
  return Int(inst.d) - seen;
}

}  // namespace

Int tail_mass(const CurveInstance& inst, long long m) {
  if (m < 0) {
    throw std::invalid_argument("tail_mass: m must be nonnegative");
  }
  Int mass = tail_mass_raw(inst, m);
  if (mass < 0) {
    throw infeasible_error("tail_mass: initial segment below m = " + std::to_string(m) +
                           " already exceeds d = " + std::to_string(inst.d));
  }
  return mass;
}

bool threshold_check(const CurveInstance& inst) {
  return Int(inst.d) >= threshold_value(inst.surface);
}

Int threshold_value(const SurfaceSpec& surface) {
  return surface.product() * surface.degree_sum();
}

void validate_profile(const GammaProfile& profile, const CurveInstance& inst) {
  const SurfaceSpec& surface = inst.surface;
  const long long end = profile.support_end();
  for (const Rat& v : profile.values) {
    if (v < 0) {
      throw std::logic_error("profile: negative value");
    }
  }
  if (profile.sum() != Rat(inst.d)) {
    throw std::logic_error("profile: values sum to " + fraction_string(profile.sum()) +
                           ", expected d = " + std::to_string(inst.d));
  }
  std::vector<Int> initial =
      quotient_hf_series_oracle(surface.point_ideal(), std::max(profile.m - 1, 0ll));
  for (long long i = 0; i < profile.m && i < end; ++i) {
    if (profile.values[static_cast<size_t>(i)] != Rat(initial[static_cast<size_t>(i)])) {
      throw std::logic_error("profile: initial segment mismatch at i = " + std::to_string(i));
    }
  }
  if (profile.m > end) {
    throw std::logic_error("profile: support ends before the initial segment does");
  }
  for (long long i = profile.m; i + 1 < end; ++i) {
    if (profile.values[static_cast<size_t>(i)] < profile.values[static_cast<size_t>(i + 1)]) {
      throw std::logic_error("profile: tail increases at i = " + std::to_string(i));
    }
  }
  const long long vanish = vanish_index(surface, std::max(profile.m, 1ll));
  if (end > vanish) {
    for (long long i = vanish; i < end; ++i) {
      if (profile.values[static_cast<size_t>(i)] != 0) {
        throw std::logic_error("profile: nonzero value at i = " + std::to_string(i) +
                               " past the vanish index " + std::to_string(vanish));
      }
    }
  }
  if (profile.mode == ProfileMode::tight && profile.m >= 1) {
    std::vector<Int> env =
        quotient_hf_series_oracle(surface.envelope_ideal(profile.m), std::max(end - 1, 0ll));
    for (long long i = profile.m; i < end; ++i) {
      const Rat& v = profile.values[static_cast<size_t>(i)];
      if (!is_integral(v)) {
        throw std::logic_error("profile: tight value not an integer at i = " + std::to_string(i));
      }
      if (v > Rat(env[static_cast<size_t>(i)])) {
        throw std::logic_error("profile: envelope cap exceeded at i = " + std::to_string(i));
      }
    }
  }
}

}  // namespace cigenus
