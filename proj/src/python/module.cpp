#include "cigenus/bounds.hpp"
#include "cigenus/gamma.hpp"
#include "cigenus/hilbert.hpp"
#include "cigenus/optimize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

using namespace cigenus;

py::int_ py_int(const Int& value) {
  const std::string digits = value.str();
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (!obj) {
    throw py::error_already_set();
  }
  return py::reinterpret_steal<py::int_>(obj);
}

py::object py_frac(const Rat& value) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py_int(numerator(value)), py_int(denominator(value)));
}

py::list py_int_list(const std::vector<Int>& values) {
  py::list out;
  for (const Int& v : values) {
    out.append(py_int(v));
  }
  return out;
}

ProfileMode mode_from_name(const std::string& name) {
  if (name == "relaxed") {
    return ProfileMode::relaxed;
  }
  if (name == "tight") {
    return ProfileMode::tight;
  }
  throw std::invalid_argument("mode must be 'relaxed' or 'tight'");
}

py::dict profile_dict(const GammaProfile& profile) {
  py::list values;
  for (const Rat& v : profile.values) {
    values.append(py_frac(v));
  }
  py::dict out;
  out["mode"] = profile_mode_name(profile.mode);
  out["m"] = profile.m;
  out["values"] = values;
  out["objective"] = py_frac(profile.objective());
  out["genus_bound"] = py_frac(profile.objective() + 1);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact genus bounds for curves on complete intersection surfaces";

  m.def(
      "binom_trunc",
      [](long long a, long long b) { return py_int(binom_trunc(a, b)); },
      py::arg("a"), py::arg("b"),
      "C(a, b) for a >= b >= 0, zero whenever a < b.");

  m.def(
      "quotient_hf",
      [](int ambient_dim, const std::vector<long long>& degrees, long long level) {
        return py_int(quotient_hf(IdealSpec(ambient_dim, degrees), level));
      },
      py::arg("ambient_dim"), py::arg("degrees"), py::arg("level"),
      "Hilbert function of the quotient by a regular sequence.");

  m.def(
      "ideal_slice_dim",
      [](int ambient_dim, const std::vector<long long>& degrees, long long level,
         bool as_written) {
        return py_int(ideal_slice_dim(IdealSpec(ambient_dim, degrees), level,
                                      as_written ? SignConvention::as_written
                                                 : SignConvention::corrected));
      },
      py::arg("ambient_dim"), py::arg("degrees"), py::arg("level"),
      py::arg("as_written") = false);

  m.def(
      "quotient_hf_series",
      [](int ambient_dim, const std::vector<long long>& degrees, long long max_level) {
        return py_int_list(quotient_hf_series_oracle(IdealSpec(ambient_dim, degrees), max_level));
      },
      py::arg("ambient_dim"), py::arg("degrees"), py::arg("max_level"),
      "Truncated power-series oracle for the quotient Hilbert function.");

  m.def(
      "quotient_hf_monomial_count",
      [](int ambient_dim, const std::vector<long long>& degrees, long long level) {
        return py_int(quotient_hf_monomial_oracle(IdealSpec(ambient_dim, degrees), level));
      },
      py::arg("ambient_dim"), py::arg("degrees"), py::arg("level"),
      "Monomial-enumeration oracle for the quotient Hilbert function.");

  m.def(
      "gamma_initial",
      [](int n, const std::vector<long long>& degrees, long long i) {
        return py_int(gamma_initial(SurfaceSpec(n, degrees), i));
      },
      py::arg("n"), py::arg("degrees"), py::arg("i"));

  m.def(
      "gamma_envelope",
      [](int n, const std::vector<long long>& degrees, long long m, long long i) {
        return py_int(gamma_envelope(SurfaceSpec(n, degrees), m, i));
      },
      py::arg("n"), py::arg("degrees"), py::arg("m"), py::arg("i"));

  m.def(
      "vanish_index",
      [](int n, const std::vector<long long>& degrees, long long m) {
        return vanish_index(SurfaceSpec(n, degrees), m);
      },
      py::arg("n"), py::arg("degrees"), py::arg("m"));

  m.def(
      "tail_mass",
      [](int n, const std::vector<long long>& degrees, long long d, long long m) {
        return py_int(tail_mass(CurveInstance(SurfaceSpec(n, degrees), d), m));
      },
      py::arg("n"), py::arg("degrees"), py::arg("d"), py::arg("m"));

  m.def(
      "instance_info",
      [](int n, const std::vector<long long>& degrees, long long d) {
        CurveInstance inst(SurfaceSpec(n, degrees), d);
        py::dict out;
        out["m0"] = inst.m0;
        out["epsilon"] = py_int(inst.epsilon);
        out["K"] = py_int(inst.surface.product());
        out["sigma_k"] = inst.surface.degree_sum();
        out["threshold"] = py_int(threshold_value(inst.surface));
        out["hypothesis_ok"] = threshold_check(inst);
        return out;
      },
      py::arg("n"), py::arg("degrees"), py::arg("d"),
      "m0, epsilon, K, sigma_k and the degree-threshold flag for an instance.");

  m.def(
      "relaxed_profile",
      [](int n, const std::vector<long long>& degrees, long long d, long long m) {
        return profile_dict(relaxed_profile(CurveInstance(SurfaceSpec(n, degrees), d), m));
      },
      py::arg("n"), py::arg("degrees"), py::arg("d"), py::arg("m"));

  m.def(
      "tight_profile",
      [](int n, const std::vector<long long>& degrees, long long d, long long m) {
        return profile_dict(tight_profile(CurveInstance(SurfaceSpec(n, degrees), d), m));
      },
      py::arg("n"), py::arg("degrees"), py::arg("d"), py::arg("m"));

  m.def(
      "genus_bound",
      [](int n, const std::vector<long long>& degrees, long long d, const std::string& mode) {
        OptimizationResult result =
            genus_bound_opt(CurveInstance(SurfaceSpec(n, degrees), d), mode_from_name(mode));
        py::dict out;
        out["mode"] = profile_mode_name(result.mode);
        out["m"] = result.chosen_m;
        out["window"] = py::make_tuple(result.window_lo, result.window_hi);
        out["objective"] = py_frac(result.objective);
        out["genus_bound"] = py_frac(result.genus_bound);
        out["profile"] = profile_dict(result.profile);
        return out;
      },
      py::arg("n"), py::arg("degrees"), py::arg("d"), py::arg("mode"),
      "Maximize the profile objective over the m-window and bound the genus.");

  m.def(
      "closed_form_bound",
      [](int n, const std::vector<long long>& degrees, long long d) {
        return py_frac(closed_form_bound(CurveInstance(SurfaceSpec(n, degrees), d)));
      },
      py::arg("n"), py::arg("degrees"), py::arg("d"));

  m.def(
      "threshold_check",
      [](int n, const std::vector<long long>& degrees, long long d) {
        return threshold_check(CurveInstance(SurfaceSpec(n, degrees), d));
      },
      py::arg("n"), py::arg("degrees"), py::arg("d"));

  m.def(
      "specialization_n4",
      [](long long k1, long long k2, long long d) { return py_frac(specialization_n4(k1, k2, d)); },
      py::arg("k1"), py::arg("k2"), py::arg("d"));

  m.def(
      "specialization_n5",
      [](long long k1, long long k2, long long k3, long long d) {
        return py_frac(specialization_n5(k1, k2, k3, d));
      },
      py::arg("k1"), py::arg("k2"), py::arg("k3"), py::arg("d"));

  m.def(
      "leading_terms",
      [](int n, const std::vector<long long>& degrees) {
        auto [quad, lin] = leading_terms(SurfaceSpec(n, degrees));
        return py::make_tuple(py_frac(quad), py_frac(lin));
      },
      py::arg("n"), py::arg("degrees"));

  m.def(
      "calclem_check",
      [](long long A, long long B, int n) {
        CalclemResult result = calclem_check(A, B, n);
        py::dict out;
        out["lhs"] = py_frac(result.lhs);
        out["rhs"] = py_frac(result.rhs);
        out["equal"] = result.equal;
        return out;
      },
      py::arg("A"), py::arg("B"), py::arg("n"));

  m.def(
      "stir_check",
      [](int n, const std::vector<long long>& degrees) {
        StirReport report = stir_check(SurfaceSpec(n, degrees));
        py::dict out;
        out["lhs_corrected"] = py_frac(report.lhs_corrected);
        out["lhs_as_written"] = py_frac(report.lhs_as_written);
        out["rhs_strict"] = py_frac(report.rhs_strict);
        out["rhs_as_written"] = py_frac(report.rhs_as_written);
        out["oracle_divisible"] = py_frac(report.oracle_divisible);
        out["oracle_rhs"] = py_frac(report.oracle_rhs);
        out["lhs_corrected_matches_oracle"] = report.lhs_corrected_matches_oracle;
        out["lhs_as_written_matches_oracle"] = report.lhs_as_written_matches_oracle;
        out["rhs_strict_matches_oracle"] = report.rhs_strict_matches_oracle;
        out["rhs_as_written_matches_oracle"] = report.rhs_as_written_matches_oracle;
        return out;
      },
      py::arg("n"), py::arg("degrees"));

  m.def(
      "ci_curve_genus",
      [](int n, const std::vector<long long>& degrees) {
        return py_int(ci_curve_genus(n, degrees));
      },
      py::arg("n"), py::arg("degrees"));

  m.def(
      "bms_small_degree_bound",
      [](int n, const std::vector<long long>& threefold_degrees, long long d) {
        BmsSmallDegreeBound bound = bms_small_degree_bound(threefold_degrees, n, d);
        py::dict out;
        out["value"] = py_frac(bound.value);
        out["applicable"] = bound.applicable;
        return out;
      },
      py::arg("n"), py::arg("threefold_degrees"), py::arg("d"));

  m.def(
      "bms_castelnuovo_bound",
      [](int n, const std::vector<long long>& threefold_degrees, long long d) {
        return py_frac(bms_castelnuovo_bound(threefold_degrees, n, d));
      },
      py::arg("n"), py::arg("threefold_degrees"), py::arg("d"));

  py::register_exception<infeasible_error>(m, "InfeasibleError", PyExc_ValueError);
  py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);
}
