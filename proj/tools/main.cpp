#include "cigenus/report.hpp"
#include "cigenus/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace cigenus;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitHypothesisViolated = 3;
constexpr int kExitInfeasibleM = 4;
constexpr int kExitOutputPath = 5;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

int write_output(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output path '" << path << "'\n";
    return kExitOutputPath;
  }
  out << content;
  out.flush();
  if (!out.good()) {
    std::cerr << "error: failed writing output path '" << path << "'\n";
    return kExitOutputPath;
  }
  return kExitOk;
}

OutputFormat format_of(const std::string& name) {
  auto parsed = parse_output_format(name);
  if (!parsed) {
    throw std::invalid_argument("unknown format '" + name + "'");
  }
  return *parsed;
}

ModeSelection modes_from_list(const std::vector<std::string>& names) {
  ModeSelection modes{false, false, false};
  for (const std::string& name : names) {
    if (name == "all") {
      modes = ModeSelection{true, true, true};
    } else if (name == "closed-form") {
      modes.closed_form = true;
    } else if (name == "relaxed") {
      modes.relaxed = true;
    } else if (name == "tight") {
      modes.tight = true;
    } else {
      throw std::invalid_argument("unknown mode '" + name + "'");
    }
  }
  return modes;
}

std::string sweep_table(const std::vector<BoundReport>& rows) {
  std::ostringstream out;
  out << std::setw(4) << "n" << std::setw(10) << "degrees" << std::setw(8) << "d" << std::setw(6)
      << "m0" << std::setw(9) << "epsilon" << std::setw(8) << "hyp" << std::setw(16)
      << "closed_form" << std::setw(16) << "relaxed" << std::setw(16) << "tight" << "\n";
  for (const BoundReport& report : rows) {
    const CurveInstance& inst = report.instance;
    out << std::setw(4) << inst.surface.n << std::setw(10) << degrees_token(inst.surface.degrees)
        << std::setw(8) << inst.d << std::setw(6) << inst.m0 << std::setw(9)
        << inst.epsilon.str() << std::setw(8) << (report.hypothesis_ok ? "true" : "false")
        << std::setw(16) << (report.closed_form ? fraction_string(*report.closed_form) : "")
        << std::setw(16) << (report.relaxed ? fraction_string(*report.relaxed) : "")
        << std::setw(16) << (report.tight ? fraction_string(*report.tight) : "") << "\n";
  }
  return out.str();
}

int cmd_bound(int n, std::vector<long long> degrees, long long d, const std::string& mode,
              const std::string& format_name, bool force, const std::string& output_path) {
  Timer timer;
  OutputFormat format = format_of(format_name);
  ModeSelection modes = mode == "all" ? ModeSelection{true, true, true}
                                      : modes_from_list({mode});
  CurveInstance inst(SurfaceSpec(n, degrees), d);
  if (!threshold_check(inst) && !force) {
    std::cout << "hypothesis_ok=false: d = " << d << " is below the degree threshold K*sigma_k = "
              << fraction_string(Rat(threshold_value(inst.surface)))
              << "; rerun with --force to compute anyway\n";
    return kExitHypothesisViolated;
  }
  BoundReport report = make_bound_report(inst, modes);

  std::string content;
  switch (format) {
    case OutputFormat::table:
      content = bound_table(report);
      break;
    case OutputFormat::csv:
      content = sweep_csv_header() + "\n" + sweep_csv_row(report) + "\n";
      break;
    case OutputFormat::json: {
      nlohmann::json inputs = {{"n", n},         {"degrees", degrees}, {"d", d},
                               {"mode", mode},   {"force", force},     {"format", format_name}};
      content = render_json(report_envelope("bound", inputs, bound_results_json(report),
                                            report.hypothesis_ok, report_discrepancies(report),
                                            timer.elapsed_ms()));
      break;
    }
  }
  return write_output(content, output_path);
}

int cmd_profile(int n, std::vector<long long> degrees, long long d, long long m,
                const std::string& mode_name, const std::string& format_name,
                const std::string& output_path) {
  Timer timer;
  OutputFormat format = format_of(format_name);
  ProfileMode mode = mode_name == "relaxed" ? ProfileMode::relaxed : ProfileMode::tight;
  CurveInstance inst(SurfaceSpec(n, degrees), d);

  ProfileListing listing(inst, m, mode);
  try {
    listing = make_profile_listing(inst, m, mode);
  } catch (const infeasible_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasibleM;
  }

  std::string content;
  switch (format) {
    case OutputFormat::table:
      content = profile_table(listing);
      break;
    case OutputFormat::csv:
      content = profile_csv(listing);
      break;
    case OutputFormat::json: {
      nlohmann::json inputs = {{"n", n}, {"degrees", degrees},   {"d", d},
                               {"m", m}, {"mode", mode_name},    {"format", format_name}};
      content = render_json(report_envelope("profile", inputs, profile_results_json(listing),
                                            threshold_check(inst), {}, timer.elapsed_ms()));
      break;
    }
  }
  return write_output(content, output_path);
}

int cmd_sweep(int n, std::vector<long long> degrees, long long d_start, long long d_stop,
              long long d_step, const std::vector<std::string>& mode_names,
              const std::string& format_name, const std::string& output_path) {
  Timer timer;
  OutputFormat format = format_of(format_name);
  SweepSpec spec;
  spec.n = n;
  spec.degrees = degrees;
  spec.d_start = d_start;
  spec.d_stop = d_stop;
  spec.d_step = d_step;
  spec.modes = modes_from_list(mode_names);
  std::vector<BoundReport> rows = run_sweep(spec);

  std::string content;
  switch (format) {
    case OutputFormat::table:
      content = sweep_table(rows);
      break;
    case OutputFormat::csv: {
      std::ostringstream out;
      out << sweep_csv_header() << "\n";
      for (const BoundReport& report : rows) {
        out << sweep_csv_row(report) << "\n";
      }
      content = out.str();
      break;
    }
    case OutputFormat::json: {
      nlohmann::json inputs = {{"n", n},
                               {"degrees", degrees},
                               {"d_start", d_start},
                               {"d_stop", d_stop},
                               {"d_step", d_step},
                               {"modes", mode_names},
                               {"format", format_name}};
      nlohmann::json row_array = nlohmann::json::array();
      bool all_ok = true;
      for (const BoundReport& report : rows) {
        nlohmann::json row = bound_results_json(report);
        row["d"] = report.instance.d;
        row_array.push_back(std::move(row));
        all_ok = all_ok && report.hypothesis_ok;
      }
      content = render_json(report_envelope("sweep", inputs, {{"rows", std::move(row_array)}},
                                            all_ok, {}, timer.elapsed_ms()));
      break;
    }
  }
  return write_output(content, output_path);
}

int cmd_verify(const std::string& suite, int max_n, long long max_degree, long long max_level) {
  VerifyOptions options;
  options.max_n = max_n;
  options.max_degree = max_degree;
  options.max_level = max_level;
  std::vector<VerifyCheck> checks = run_verify_suite(suite, options);
  print_verify_checks(checks, std::cout);
  return verify_has_failure(checks) ? kExitVerifyFailed : kExitOk;
}

int cmd_compare(int n, std::vector<long long> threefold_degrees, long long d,
                std::optional<long long> m, const std::string& format_name, bool force,
                const std::string& output_path) {
  Timer timer;
  OutputFormat format = format_of(format_name);
  CompareReport report = make_compare_report(n, threefold_degrees, d, m);
  if (!report.surface_report.hypothesis_ok && !force) {
    std::cout << "hypothesis_ok=false: d = " << d
              << " is below the induced surface's degree threshold "
              << fraction_string(Rat(report.surface_report.threshold))
              << "; rerun with --force to compute anyway\n";
    return kExitHypothesisViolated;
  }

  std::string content;
  switch (format) {
    case OutputFormat::table:
      content = compare_table(report);
      break;
    case OutputFormat::csv:
      content = compare_csv_header() + "\n" + compare_csv_row(report) + "\n";
      break;
    case OutputFormat::json: {
      nlohmann::json inputs = {{"n", n},
                               {"threefold_degrees", threefold_degrees},
                               {"d", d},
                               {"m", report.m},
                               {"force", force},
                               {"format", format_name}};
      content = render_json(report_envelope(
          "compare", inputs, compare_results_json(report), report.surface_report.hypothesis_ok,
          report_discrepancies(report.surface_report), timer.elapsed_ms()));
      break;
    }
  }
  return write_output(content, output_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact genus bounds for curves on complete intersection surfaces"};
  app.require_subcommand(1);

  // bound
  auto* bound = app.add_subcommand("bound", "Compute the genus bounds for one instance");
  int bound_n = 0;
  std::vector<long long> bound_degrees;
  long long bound_d = 0;
  std::string bound_mode = "all";
  std::string bound_format = "table";
  bool bound_force = false;
  std::string bound_output;
  bound->add_option("--n", bound_n, "Ambient projective dimension (>= 3)")->required();
  bound->add_option("--degrees", bound_degrees, "Surface degrees k_1,...,k_{n-2}")
      ->required()
      ->delimiter(',');
  bound->add_option("--d", bound_d, "Curve degree")->required();
  bound->add_option("--mode", bound_mode, "all|closed-form|relaxed|tight")
      ->check(CLI::IsMember({"all", "closed-form", "relaxed", "tight"}));
  bound->add_option("--format", bound_format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  bound->add_flag("--force", bound_force, "Compute even when the degree threshold fails");
  bound->add_option("--output", bound_output, "Write to this path instead of stdout");

  // profile
  auto* profile = app.add_subcommand("profile", "List a gamma-profile with envelope data");
  int profile_n = 0;
  std::vector<long long> profile_degrees;
  long long profile_d = 0;
  long long profile_m = 0;
  std::string profile_mode;
  std::string profile_format = "table";
  std::string profile_output;
  profile->add_option("--n", profile_n, "Ambient projective dimension (>= 3)")->required();
  profile->add_option("--degrees", profile_degrees, "Surface degrees")->required()->delimiter(',');
  profile->add_option("--d", profile_d, "Curve degree")->required();
  profile->add_option("--m", profile_m, "Section degree m")->required();
  profile->add_option("--mode", profile_mode, "relaxed|tight")
      ->required()
      ->check(CLI::IsMember({"relaxed", "tight"}));
  profile->add_option("--format", profile_format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  profile->add_option("--output", profile_output, "Write to this path instead of stdout");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Evaluate the bounds over a range of d");
  int sweep_n = 0;
  std::vector<long long> sweep_degrees;
  long long sweep_start = 0;
  long long sweep_stop = 0;
  long long sweep_step = 1;
  std::vector<std::string> sweep_modes = {"closed-form", "relaxed", "tight"};
  std::string sweep_format = "csv";
  std::string sweep_output;
  sweep->add_option("--n", sweep_n, "Ambient projective dimension (>= 3)")->required();
  sweep->add_option("--degrees", sweep_degrees, "Surface degrees")->required()->delimiter(',');
  sweep->add_option("--d-start", sweep_start, "First curve degree")->required();
  sweep->add_option("--d-stop", sweep_stop, "Last curve degree (inclusive)")->required();
  sweep->add_option("--d-step", sweep_step, "Step (>= 1)");
  sweep->add_option("--modes", sweep_modes, "Subset of closed-form,relaxed,tight")
      ->delimiter(',')
      ->check(CLI::IsMember({"all", "closed-form", "relaxed", "tight"}));
  sweep->add_option("--format", sweep_format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  sweep->add_option("--output", sweep_output, "Write to this path instead of stdout");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  std::string verify_suite = "all";
  int verify_max_n = 6;
  long long verify_max_degree = 4;
  long long verify_max_level = 20;
  verify->add_option("--suite", verify_suite, "hilbert|identities|consistency|optimizer|all")
      ->check(CLI::IsMember({"hilbert", "identities", "consistency", "optimizer", "all"}));
  verify->add_option("--max-n", verify_max_n, "Largest ambient dimension in grids")
      ->check(CLI::Range(3, 8));
  verify->add_option("--max-degree", verify_max_degree, "Largest degree in grids")
      ->check(CLI::Range(1, 6));
  verify->add_option("--max-level", verify_max_level, "Largest graded level in grids")
      ->check(CLI::Range(0, 64));

  // compare
  auto* compare = app.add_subcommand(
      "compare", "Compare against the stability-motivated bounds on a threefold");
  int compare_n = 0;
  std::vector<long long> compare_degrees;
  long long compare_d = 0;
  long long compare_m = -1;
  std::string compare_format = "table";
  bool compare_force = false;
  std::string compare_output;
  compare->add_option("--n", compare_n, "Ambient projective dimension (>= 4)")->required();
  compare
      ->add_option("--threefold-degrees", compare_degrees, "Threefold degrees k_1,...,k_{n-3}")
      ->required()
      ->delimiter(',');
  compare->add_option("--d", compare_d, "Curve degree")->required();
  compare->add_option("--m", compare_m, "Surface section degree (default: ceil(d / prod k))");
  compare->add_option("--format", compare_format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  compare->add_flag("--force", compare_force, "Compute even when the degree threshold fails");
  compare->add_option("--output", compare_output, "Write to this path instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (bound->parsed()) {
      return cmd_bound(bound_n, bound_degrees, bound_d, bound_mode, bound_format, bound_force,
                       bound_output);
    }
    if (profile->parsed()) {
      return cmd_profile(profile_n, profile_degrees, profile_d, profile_m, profile_mode,
                         profile_format, profile_output);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sweep_n, sweep_degrees, sweep_start, sweep_stop, sweep_step, sweep_modes,
                       sweep_format, sweep_output);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_suite, verify_max_n, verify_max_degree, verify_max_level);
    }
    if (compare->parsed()) {
      std::optional<long long> m;
      if (compare_m >= 0) {
        m = compare_m;
      }
      return cmd_compare(compare_n, compare_degrees, compare_d, m, compare_format, compare_force,
                         compare_output);
    }
  } catch (const infeasible_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasibleM;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
