#include "cigenus/report.hpp"

#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace cigenus {

std::optional<OutputFormat> parse_output_format(const std::string& name) {
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

std::string degrees_token(const std::vector<long long>& degrees) {
  std::string out;
  for (size_t i = 0; i < degrees.size(); ++i) {
    if (i) {
      out += '+';
    }
    out += std::to_string(degrees[i]);
  }
  return out;
}

nlohmann::json json_int(const Int& value) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (value >= lo && value <= hi) {
    return static_cast<long long>(value);
  }
  return value.str();
}

nlohmann::json json_rat(const Rat& value) {
  return {{"fraction", fraction_string(value)}, {"decimal", decimal_string(value)}};
}

nlohmann::json report_envelope(const std::string& command, nlohmann::json inputs,
                               nlohmann::json results, bool hypothesis_ok,
                               const std::vector<std::string>& discrepancies,
                               long long timing_ms) {
  return {{"schema_version", "1"},
          {"command", command},
          {"inputs", std::move(inputs)},
          {"results", std::move(results)},
          {"hypothesis_ok", hypothesis_ok},
          {"discrepancies", discrepancies},
          {"timing_ms", timing_ms}};
}

std::string render_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

const std::string& sweep_csv_header() {
  static const std::string header =
      "n,degrees,d,m0,epsilon,hypothesis_ok,closed_form,relaxed,tight";
  return header;
}

std::string sweep_csv_row(const BoundReport& report) {
  const CurveInstance& inst = report.instance;
  std::ostringstream row;
  row << inst.surface.n << ',' << degrees_token(inst.surface.degrees) << ',' << inst.d << ','
      << inst.m0 << ',' << inst.epsilon << ',' << (report.hypothesis_ok ? "true" : "false") << ','
      << (report.closed_form ? fraction_string(*report.closed_form) : "") << ','
      << (report.relaxed ? fraction_string(*report.relaxed) : "") << ','
      << (report.tight ? fraction_string(*report.tight) : "");
  return row.str();
}

nlohmann::json bound_results_json(const BoundReport& report) {
  nlohmann::json results;
  results["m0"] = report.instance.m0;
  results["epsilon"] = json_int(report.instance.epsilon);
  results["threshold"] = json_int(report.threshold);
  results["hypothesis_ok"] = report.hypothesis_ok;
  nlohmann::json bounds = nlohmann::json::object();
  if (report.closed_form) {
    bounds["closed_form"] = json_rat(*report.closed_form);
  }
  if (report.relaxed) {
    bounds["relaxed"] = json_rat(*report.relaxed);
    bounds["relaxed_m"] = *report.relaxed_m;
  }
  if (report.tight) {
    bounds["tight"] = json_rat(*report.tight);
    bounds["tight_m"] = *report.tight_m;
  }
  results["bounds"] = std::move(bounds);
  results["leading_terms"] = {{"quadratic", json_rat(report.leading.first)},
                              {"linear", json_rat(report.leading.second)}};
  nlohmann::json comparisons = nlohmann::json::object();
  for (const auto& [name, value] : report.comparisons) {
    comparisons[name] = json_rat(value);
  }
  results["comparisons"] = std::move(comparisons);
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& check : report.checks) {
    checks.push_back({{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
  }
  results["checks"] = std::move(checks);
  return results;
}

std::vector<std::string> report_discrepancies(const BoundReport& report) {
  std::vector<std::string> out;
  for (const CheckResult& check : report.checks) {
    if (!check.passed) {
      out.push_back(check.name + ": " + check.detail);
    }
  }
  return out;
}

std::string bound_table(const BoundReport& report) {
  const CurveInstance& inst = report.instance;
  std::ostringstream out;
  out << "instance: n=" << inst.surface.n << " degrees=" << degrees_token(inst.surface.degrees)
      << " d=" << inst.d << "\n";
  out << "m0=" << inst.m0 << " epsilon=" << inst.epsilon
      << " threshold=" << fraction_string(Rat(report.threshold))
      << " hypothesis_ok=" << (report.hypothesis_ok ? "true" : "false") << "\n";
  if (report.closed_form) {
    out << "closed_form: " << fraction_string(*report.closed_form) << "\n";
  }
  if (report.relaxed) {
    out << "relaxed:     " << fraction_string(*report.relaxed) << "  (m=" << *report.relaxed_m
        << ")\n";
  }
  if (report.tight) {
    out << "tight:       " << fraction_string(*report.tight) << "  (m=" << *report.tight_m
        << ")\n";
  }
  out << "leading terms: " << fraction_string(report.leading.first) << " * d^2 + "
      << fraction_string(report.leading.second) << " * d\n";
  for (const auto& [name, value] : report.comparisons) {
    out << "comparison " << name << ": " << fraction_string(value) << "\n";
  }
  for (const CheckResult& check : report.checks) {
    out << "check " << check.name << ": " << (check.passed ? "pass" : "FAIL") << " ("
        << check.detail << ")\n";
  }
  return out.str();
}

size_t sweep_worker_count(size_t rows) {
  size_t hw = std::thread::hardware_concurrency();
  if (hw == 0) {
    hw = 1;
  }
  size_t count = hw;
  if (const char* env = std::getenv("CIGENUS_THREADS")) {
    char* end = nullptr;
    long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 1) {
      count = std::min<size_t>(count, static_cast<size_t>(parsed));
    }
  }
  return std::max<size_t>(1, std::min(count, std::max<size_t>(rows, 1)));
}

std::vector<BoundReport> run_sweep(const SweepSpec& spec) {
  if (spec.d_step < 1) {
    throw std::invalid_argument("sweep: d step must be >= 1");
  }
  std::vector<long long> ds;
  for (long long d = spec.d_start; d <= spec.d_stop; d += spec.d_step) {
    ds.push_back(d);
  }
  if (ds.empty()) {
    throw std::invalid_argument("sweep: empty d range");
  }
  SurfaceSpec surface(spec.n, spec.degrees);

  std::vector<std::optional<BoundReport>> slots(ds.size());
  std::atomic<size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      size_t index = cursor.fetch_add(1);
      if (index >= ds.size()) {
        return;
      }
      try {
        slots[index] = make_bound_report(CurveInstance(surface, ds[index]), spec.modes);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
        return;
      }
    }
  };

  size_t workers = sweep_worker_count(ds.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t t = 0; t < workers; ++t) {
      pool.emplace_back(worker);
    }
    for (std::thread& t : pool) {
      t.join();
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }

  std::vector<BoundReport> rows;
  rows.reserve(ds.size());
  for (std::optional<BoundReport>& slot : slots) {
    rows.push_back(std::move(*slot));
  }
  return rows;
}

ProfileListing make_profile_listing(const CurveInstance& inst, long long m, ProfileMode mode) {
  ProfileListing listing(inst, m, mode);
  switch (mode) {
    case ProfileMode::relaxed:
      listing.profile = relaxed_profile(inst, m);
      break;
    case ProfileMode::tight:
      listing.profile = tight_profile(inst, m);
      break;
    case ProfileMode::custom:
      throw std::invalid_argument("profile listing: mode must be relaxed or tight");
  }
  const long long vanish = vanish_index(inst.surface, m);
  listing.envelope = quotient_hf_series_oracle(inst.surface.envelope_ideal(m), vanish);
  listing.initial = quotient_hf_series_oracle(inst.surface.point_ideal(), vanish);
  listing.objective = listing.profile.objective();
  listing.genus_bound = listing.objective + 1;
  return listing;
}

const std::string& profile_csv_header() {
  static const std::string header = "i,gamma,envelope,initial";
  return header;
}

namespace {

Rat profile_value_at(const GammaProfile& profile, long long i) {
  if (i < profile.support_end()) {
    return profile.values[static_cast<size_t>(i)];
  }
  return Rat(0);
}

}  // namespace

std::string profile_csv(const ProfileListing& listing) {
  std::ostringstream out;
  out << profile_csv_header() << "\n";
  for (long long i = 0; i < static_cast<long long>(listing.envelope.size()); ++i) {
    out << i << ',' << fraction_string(profile_value_at(listing.profile, i)) << ','
        << listing.envelope[static_cast<size_t>(i)] << ',' << listing.initial[static_cast<size_t>(i)]
        << "\n";
  }
  return out.str();
}

std::string profile_table(const ProfileListing& listing) {
  std::ostringstream out;
  const CurveInstance& inst = listing.instance;
  out << "profile: n=" << inst.surface.n << " degrees=" << degrees_token(inst.surface.degrees)
      << " d=" << inst.d << " m=" << listing.m << " mode=" << profile_mode_name(listing.mode)
      << "\n";
  out << std::setw(4) << "i" << std::setw(12) << "gamma" << std::setw(12) << "envelope"
      << std::setw(12) << "initial" << "\n";
  for (long long i = 0; i < static_cast<long long>(listing.envelope.size()); ++i) {
    out << std::setw(4) << i << std::setw(12) << fraction_string(profile_value_at(listing.profile, i))
        << std::setw(12) << listing.envelope[static_cast<size_t>(i)].str() << std::setw(12)
        << listing.initial[static_cast<size_t>(i)].str() << "\n";
  }
  out << "objective: " << fraction_string(listing.objective)
      << "  genus_bound: " << fraction_string(listing.genus_bound) << "\n";
  return out.str();
}

nlohmann::json profile_results_json(const ProfileListing& listing) {
  nlohmann::json rows = nlohmann::json::array();
  for (long long i = 0; i < static_cast<long long>(listing.envelope.size()); ++i) {
    rows.push_back({{"i", i},
                    {"gamma", json_rat(profile_value_at(listing.profile, i))},
                    {"envelope", json_int(listing.envelope[static_cast<size_t>(i)])},
                    {"initial", json_int(listing.initial[static_cast<size_t>(i)])}});
  }
  return {{"m", listing.m},
          {"mode", profile_mode_name(listing.mode)},
          {"rows", std::move(rows)},
          {"objective", json_rat(listing.objective)},
          {"genus_bound", json_rat(listing.genus_bound)},
          {"vanish_index", vanish_index(listing.instance.surface, listing.m)}};
}

CompareReport make_compare_report(int n, const std::vector<long long>& threefold_degrees,
                                  long long d, std::optional<long long> m_override) {
  if (static_cast<long long>(threefold_degrees.size()) != n - 3) {
    throw std::invalid_argument("compare: a threefold in P^" + std::to_string(n) + " needs " +
                                std::to_string(n - 3) + " degrees");
  }
  Int threefold_product = 1;
  for (long long k : threefold_degrees) {
    threefold_product *= k;
  }
  long long m = m_override ? *m_override
                           : static_cast<long long>(ceil_div(Int(d), threefold_product));
  if (m < 1) {
    throw std::invalid_argument("compare: m must be positive");
  }
  std::vector<long long> surface_degrees = threefold_degrees;
  surface_degrees.push_back(m);
  CurveInstance inst(SurfaceSpec(n, surface_degrees), d);

  CompareReport report(make_bound_report(inst, ModeSelection{}));
  report.n = n;
  report.threefold_degrees = threefold_degrees;
  report.d = d;
  report.m = m;
  report.bms_castelnuovo = bms_castelnuovo_bound(threefold_degrees, n, d);
  report.bms_small = bms_small_degree_bound(threefold_degrees, n, d);
  if (Int(d) % inst.surface.product() == 0) {
    std::vector<long long> curve_degrees = inst.surface.degrees;
    curve_degrees.push_back(inst.m0);
    report.ci_baseline = ci_curve_genus(n, curve_degrees);
  }
  return report;
}

const std::string& compare_csv_header() {
  static const std::string header =
      "n,threefold_degrees,d,m,surface_degrees,m0,epsilon,hypothesis_ok,closed_form,relaxed,"
      "tight,bms_castelnuovo,bms_small_degree,bms_small_applicable,ci_curve_genus";
  return header;
}

std::string compare_csv_row(const CompareReport& report) {
  const BoundReport& bounds = report.surface_report;
  const CurveInstance& inst = bounds.instance;
  std::ostringstream row;
  row << report.n << ',' << degrees_token(report.threefold_degrees) << ',' << report.d << ','
      << report.m << ',' << degrees_token(inst.surface.degrees) << ',' << inst.m0 << ','
      << inst.epsilon << ',' << (bounds.hypothesis_ok ? "true" : "false") << ','
      << (bounds.closed_form ? fraction_string(*bounds.closed_form) : "") << ','
      << (bounds.relaxed ? fraction_string(*bounds.relaxed) : "") << ','
      << (bounds.tight ? fraction_string(*bounds.tight) : "") << ','
      << fraction_string(report.bms_castelnuovo) << ',' << fraction_string(report.bms_small.value)
      << ',' << (report.bms_small.applicable ? "true" : "false") << ','
      << (report.ci_baseline ? fraction_string(Rat(*report.ci_baseline)) : "");
  return row.str();
}

std::string compare_table(const CompareReport& report) {
  const BoundReport& bounds = report.surface_report;
  const CurveInstance& inst = bounds.instance;
  std::ostringstream out;
  out << "compare: threefold in P^" << report.n << " degrees="
      << degrees_token(report.threefold_degrees) << " d=" << report.d << "\n";
  out << "induced surface degrees: " << degrees_token(inst.surface.degrees) << " (m=" << report.m
      << ")\n";
  out << "m0=" << inst.m0 << " epsilon=" << inst.epsilon
      << " hypothesis_ok=" << (bounds.hypothesis_ok ? "true" : "false") << "\n";
  if (bounds.closed_form) {
    out << "closed_form:      " << fraction_string(*bounds.closed_form) << "\n";
  }
  if (bounds.relaxed) {
    out << "relaxed:          " << fraction_string(*bounds.relaxed) << "\n";
  }
  if (bounds.tight) {
    out << "tight:            " << fraction_string(*bounds.tight) << "\n";
  }
  out << "bms_castelnuovo:  " << fraction_string(report.bms_castelnuovo) << "\n";
  out << "bms_small_degree: " << fraction_string(report.bms_small.value)
      << (report.bms_small.applicable ? "  (applicable)" : "  (NOT applicable)") << "\n";
  if (report.ci_baseline) {
    out << "ci_curve_genus:   " << *report.ci_baseline << "\n";
  }
  return out.str();
}

nlohmann::json compare_results_json(const CompareReport& report) {
  nlohmann::json results = bound_results_json(report.surface_report);
  results["surface_degrees"] = report.surface_report.instance.surface.degrees;
  results["m"] = report.m;
  results["bms_castelnuovo"] = json_rat(report.bms_castelnuovo);
  results["bms_small_degree"] = {{"value", json_rat(report.bms_small.value)},
                                 {"applicable", report.bms_small.applicable}};
  if (report.ci_baseline) {
    results["ci_curve_genus"] = json_int(*report.ci_baseline);
  }
  return results;
}

}  // namespace cigenus
