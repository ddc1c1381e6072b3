#include "cigenus/report.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace cigenus;

TEST_CASE("sweep csv header is fixed") {
  CHECK(sweep_csv_header() == "n,degrees,d,m0,epsilon,hypothesis_ok,closed_form,relaxed,tight");
}

TEST_CASE("csv rows carry exact fraction strings") {
  BoundReport report = make_bound_report(CurveInstance(SurfaceSpec(4, {2, 2}), 20),
                                         ModeSelection{true, true, true});
  CHECK(sweep_csv_row(report) == "4,2+2,20,5,0,true,42,42,41");

  BoundReport half = make_bound_report(CurveInstance(SurfaceSpec(4, {2, 2}), 17),
                                       ModeSelection{true, true, true});
  CHECK(sweep_csv_row(half) == "4,2+2,17,5,-3,true,57/2,57/2,28");

  BoundReport partial = make_bound_report(CurveInstance(SurfaceSpec(4, {2, 2}), 20),
                                          ModeSelection{true, false, false});
  CHECK(sweep_csv_row(partial) == "4,2+2,20,5,0,true,42,,");
}

TEST_CASE("sweep preserves input order and is deterministic") {
  SweepSpec spec;
  spec.n = 4;
  spec.degrees = {2, 2};
  spec.d_start = 16;
  spec.d_stop = 24;
  spec.d_step = 1;
  std::vector<BoundReport> rows = run_sweep(spec);
  REQUIRE(rows.size() == 9);
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].instance.d == 16 + static_cast<long long>(i));
  }
  CHECK(sweep_csv_row(rows[4]).find(",42,") != std::string::npos);  // d = 20

  std::string first;
  std::string second;
  for (const BoundReport& r : rows) {
    first += sweep_csv_row(r) + "\n";
  }
  for (const BoundReport& r : run_sweep(spec)) {
    second += sweep_csv_row(r) + "\n";
  }
  CHECK(first == second);
}

TEST_CASE("worker count respects CIGENUS_THREADS") {
  setenv("CIGENUS_THREADS", "1", 1);
  CHECK(sweep_worker_count(100) == 1);
  setenv("CIGENUS_THREADS", "garbage", 1);
  CHECK(sweep_worker_count(100) >= 1);
  setenv("CIGENUS_THREADS", "0", 1);
  CHECK(sweep_worker_count(100) >= 1);
  unsetenv("CIGENUS_THREADS");
  CHECK(sweep_worker_count(1) == 1);
}

TEST_CASE("empty or backwards sweep ranges are rejected") {
  SweepSpec spec;
  spec.n = 4;
  spec.degrees = {2, 2};
  spec.d_start = 20;
  spec.d_stop = 16;
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
  spec.d_stop = 24;
  spec.d_step = 0;
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
}

TEST_CASE("json values carry fraction and decimal forms") {
  nlohmann::json value = json_rat(make_rat(87, 2));
  CHECK(value["fraction"] == "87/2");
  CHECK(value["decimal"] == "43.5");
  CHECK(json_int(Int(42)) == 42);
  CHECK(json_int(Int("123456789012345678901234567890")) == "123456789012345678901234567890");
}

TEST_CASE("json report round-trips and is deterministic") {
  BoundReport report = make_bound_report(CurveInstance(SurfaceSpec(4, {2, 2}), 20),
                                         ModeSelection{true, true, true});
  nlohmann::json inputs = {{"n", 4}, {"degrees", {2, 2}}, {"d", 20}};
  nlohmann::json doc = report_envelope("bound", inputs, bound_results_json(report),
                                       report.hypothesis_ok, report_discrepancies(report), 0);
  std::string once = render_json(doc);
  CHECK(render_json(nlohmann::json::parse(once)) == once);

  nlohmann::json doc2 = report_envelope("bound", inputs, bound_results_json(report),
                                        report.hypothesis_ok, report_discrepancies(report), 0);
  CHECK(render_json(doc2) == once);

  CHECK(doc["schema_version"] == "1");
  CHECK(doc["results"]["bounds"]["closed_form"]["fraction"] == "42");
  CHECK(doc["results"]["bounds"]["tight"]["fraction"] == "41");
}

TEST_CASE("profile listing matches the figure data") {
  CurveInstance inst(SurfaceSpec(4, {2, 2}), 20);
  ProfileListing tight = make_profile_listing(inst, 5, ProfileMode::tight);
  std::string csv = profile_csv(tight);
  CHECK(csv.find("i,gamma,envelope,initial\n") == 0);
  CHECK(csv.find("5,3,3,4\n") != std::string::npos);
  CHECK(csv.find("6,1,1,4\n") != std::string::npos);
  CHECK(csv.find("7,0,0,4\n") != std::string::npos);

  ProfileListing relaxed = make_profile_listing(inst, 5, ProfileMode::relaxed);
  std::string relaxed_csv = profile_csv(relaxed);
  CHECK(relaxed_csv.find("5,2,3,4\n") != std::string::npos);
  CHECK(relaxed_csv.find("6,2,1,4\n") != std::string::npos);

  ProfileListing wide = make_profile_listing(CurveInstance(SurfaceSpec(4, {2, 2}), 16), 4,
                                             ProfileMode::relaxed);
  std::string wide_csv = profile_csv(wide);
  CHECK(wide_csv.find("4,2,3,4\n") != std::string::npos);
  CHECK(wide_csv.find("5,2,1,4\n") != std::string::npos);
}

TEST_CASE("compare report composes the induced surface") {
  CompareReport report = make_compare_report(5, {2, 2}, 40, std::nullopt);
  CHECK(report.m == 10);
  CHECK(report.surface_report.instance.surface.degrees == std::vector<long long>{2, 2, 10});
  CHECK(report.bms_castelnuovo == bms_castelnuovo_bound({2, 2}, 5, 40));
  CHECK(report.ci_baseline.has_value());
  std::string row = compare_csv_row(report);
  CHECK(row.substr(0, 11) == "5,2+2,40,10");
  CHECK(compare_csv_header().find("bms_castelnuovo") != std::string::npos);

  CHECK_THROWS_AS(make_compare_report(5, {2}, 40, std::nullopt), std::invalid_argument);
}
