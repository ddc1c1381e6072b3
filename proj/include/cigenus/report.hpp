#pragma once

#include "cigenus/bounds.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cigenus {

enum class OutputFormat { table, csv, json };

std::optional<OutputFormat> parse_output_format(const std::string& name);

/// Degrees rendered as a single CSV-safe token, e.g. "2+2".
std::string degrees_token(const std::vector<long long>& degrees);

/// Exact integers become JSON integers when they fit in 64 bits, decimal
/// strings otherwise. Rationals carry both the exact fraction string and a
/// 15-significant-digit decimal approximation.
nlohmann::json json_int(const Int& value);
nlohmann::json json_rat(const Rat& value);

/// Common envelope around every machine-readable report. Timing sits in a
/// single top-level key so deterministic comparisons can drop it.
nlohmann::json report_envelope(const std::string& command, nlohmann::json inputs,
                               nlohmann::json results, bool hypothesis_ok,
                               const std::vector<std::string>& discrepancies,
                               long long timing_ms);

std::string render_json(const nlohmann::json& doc);

// --- bound / sweep ---

const std::string& sweep_csv_header();
std::string sweep_csv_row(const BoundReport& report);
nlohmann::json bound_results_json(const BoundReport& report);
std::string bound_table(const BoundReport& report);
std::vector<std::string> report_discrepancies(const BoundReport& report);

struct SweepSpec {
  int n = 0;
  std::vector<long long> degrees;
  long long d_start = 0;
  long long d_stop = 0;
  long long d_step = 1;
  ModeSelection modes;
};

/// Evaluates every d in the range (inclusive), in input order. Rows are
/// computed by a worker pool capped by CIGENUS_THREADS; output order and
/// content are independent of the worker count.
std::vector<BoundReport> run_sweep(const SweepSpec& spec);

size_t sweep_worker_count(size_t rows);

// --- profile ---

struct ProfileListing {
  CurveInstance instance;
  long long m = 0;
  ProfileMode mode = ProfileMode::custom;
  GammaProfile profile;
  std::vector<Int> envelope;  // index 0 .. vanish_index
  std::vector<Int> initial;
  Rat objective;
  Rat genus_bound;

  ProfileListing(CurveInstance inst, long long m_in, ProfileMode mode_in)
      : instance(std::move(inst)), m(m_in), mode(mode_in) {}
};

ProfileListing make_profile_listing(const CurveInstance& inst, long long m, ProfileMode mode);

const std::string& profile_csv_header();
std::string profile_csv(const ProfileListing& listing);
std::string profile_table(const ProfileListing& listing);
nlohmann::json profile_results_json(const ProfileListing& listing);

// --- compare ---

struct CompareReport {
  int n = 0;
  std::vector<long long> threefold_degrees;
  long long d = 0;
  long long m = 0;  // the induced surface degree
  BoundReport surface_report;
  Rat bms_castelnuovo;
  BmsSmallDegreeBound bms_small;
  std::optional<Int> ci_baseline;  // present when d is a multiple of the surface K

  CompareReport(BoundReport report) : surface_report(std::move(report)) {}
};

CompareReport make_compare_report(int n, const std::vector<long long>& threefold_degrees,
                                  long long d, std::optional<long long> m_override);

const std::string& compare_csv_header();
std::string compare_csv_row(const CompareReport& report);
std::string compare_table(const CompareReport& report);
nlohmann::json compare_results_json(const CompareReport& report);

}  // namespace cigenus
