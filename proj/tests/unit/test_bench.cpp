#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gai/bench/config.hpp"
#include "gai/bench/csv.hpp"
#include "gai/bench/runner.hpp"

using namespace gai;
using namespace gai::bench;

namespace {

const char* kMinimalConfig = R"({
  "out_dir": "out",
  "jobs": 2,
  "cells": [
    {"name": "a", "preset": "synthetic-k4", "policy": "moss", "stopping": "eprocess",
     "delta": 0.05, "replications": 3, "master_seed": 7},
    {"name": "b", "means": [0.7, 0.3], "xi": 0.5, "dgp": "mixture", "policy": "hdoc",
     "stopping": "confidence_bound", "delta": 0.1, "b": 0.9, "alpha": 0.1, "m": 1,
     "replications": 2, "master_seed": 8}
  ]
})";

std::string patch(const std::string& needle, const std::string& replacement) {
  std::string s = kMinimalConfig;
  const auto pos = s.find(needle);
  REQUIRE(pos != std::string::npos);
  s.replace(pos, needle.size(), replacement);
  return s;
}

void expect_error_naming(const std::string& json_text, const std::string& field) {
  try {
    parse_config(json_text);
    FAIL_CHECK("expected a config error mentioning '" << field << "'");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find(field) != std::string::npos);
  }
}

RunTrace mini_trace(std::uint64_t seed, std::vector<long long> tau_good, long long tau_stop,
                    double regret, bool mislabeled, bool truncated) {
  RunTrace t;
  t.seed = seed;
  t.labels = {ArmLabel::Good, ArmLabel::Bad};
  t.tau_arm = {1, 2};
  t.pulls_at_label = {1, 1};
  t.tau_good = std::move(tau_good);
  t.tau_stop = tau_stop;
  t.rounds = tau_stop;
  t.regret_at_tau_g1 = regret;
  t.mislabeled = mislabeled;
  t.truncated = truncated;
  return t;
}

}  // namespace

TEST_CASE("presets expand to the documented instances") {
  CHECK(preset_names() ==
        std::vector<std::string>{"synthetic-k4", "synthetic-k10", "synthetic-k20",
                                 "dose-finding"});
  auto k4 = preset_spec("synthetic-k4");
  CHECK(k4.means == std::vector<double>{0.6, 0.55, 0.45, 0.4});
  CHECK(k4.xi == 0.5);
  auto k10 = preset_spec("synthetic-k10");
  CHECK(k10.means.size() == 10);
  CHECK(std::count(k10.means.begin(), k10.means.end(), 0.6) == 1);
  CHECK(std::count(k10.means.begin(), k10.means.end(), 0.55) == 1);
  CHECK(std::count(k10.means.begin(), k10.means.end(), 0.45) == 4);
  CHECK(std::count(k10.means.begin(), k10.means.end(), 0.4) == 4);
  auto k20 = preset_spec("synthetic-k20");
  CHECK(k20.means.size() == 20);
  CHECK(std::count(k20.means.begin(), k20.means.end(), 0.45) == 9);
  auto dose = preset_spec("dose-finding");
  CHECK(dose.means == std::vector<double>{0.36, 0.34, 0.469, 0.465, 0.537});
  CHECK_THROWS_AS(preset_spec("nope"), std::invalid_argument);
}

TEST_CASE("config parsing fills every field") {
  ExperimentConfig cfg = parse_config(kMinimalConfig);
  CHECK(cfg.out_dir == "out");
  CHECK(cfg.jobs == 2);
  CHECK_FALSE(cfg.exclude_mislabeled_from_times);
  REQUIRE(cfg.cells.size() == 2);

  const CellConfig& a = cfg.cells[0];
  CHECK(a.name == "a");
  CHECK(a.preset == "synthetic-k4");
  CHECK(a.means.size() == 4);
  CHECK(a.policy == PolicyKind::Moss);
  CHECK(a.stopping == StoppingKind::EProcess);
  CHECK(a.delta == 0.05);
  CHECK(a.b == 0.98);
  CHECK(a.m == 0);

  const CellConfig& b = cfg.cells[1];
  CHECK(b.dgp == ArmKind::Mixture);
  CHECK(b.xi == 0.5);
  CHECK(b.policy == PolicyKind::Hdoc);
  CHECK(b.stopping == StoppingKind::ConfidenceBound);
  CHECK(b.b == 0.9);
  CHECK(b.alpha == 0.1);
  CHECK(b.m == 1);
  CHECK(b.master_seed == 8);

  EngineConfig e = to_engine_config(b);
  CHECK(e.instance.arms.size() == 2);
  CHECK(e.instance.arms[0].kind == ArmKind::Mixture);
  CHECK(e.m == 1);
}

TEST_CASE("config errors name the offending field") {
  expect_error_naming(patch("\"delta\": 0.05, ", ""), "cells[0].delta");
  expect_error_naming(patch("\"delta\": 0.05", "\"delta\": 1.5"), "cells[0].delta");
  expect_error_naming(patch("synthetic-k4", "synthetic-k5"), "synthetic-k5");
  expect_error_naming(patch("\"name\": \"b\"", "\"name\": \"a\""), "duplicate");
  expect_error_naming(patch("\"replications\": 3", "\"replications\": 0"),
                      "cells[0].replications");
  expect_error_naming(patch("\"policy\": \"moss\"", "\"policy\": \"mossy\""), "mossy");
  expect_error_naming(patch("\"stopping\": \"eprocess\"", "\"stopping\": \"ep\""),
                      "cells[0].stopping");
  expect_error_naming(patch(", \"master_seed\": 7", ""), "cells[0].master_seed");
  expect_error_naming(patch("\"means\": [0.7, 0.3], \"xi\": 0.5, ", ""), "cells[1]");
  // mixture dgp with a mean outside [0.25, 0.75]
  expect_error_naming(patch("[0.7, 0.3]", "[0.8, 0.3]"), "mixture");
  CHECK_THROWS_AS(parse_config("not json"), std::invalid_argument);
}

TEST_CASE("format_double round-trips and uses plain decimal") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1493.75) == "1493.75");
  for (double v : {0.1, 1.0 / 3.0, 1234.5678, 2.5e-12}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("summarize: definitions, exclusions, population std") {
  std::vector<RunTrace> traces;
  traces.push_back(mini_trace(1, {10, 20}, 30, 1.5, false, false));
  traces.push_back(mini_trace(2, {14}, 40, 2.5, false, false));
  traces.push_back(mini_trace(3, {}, 50, 0.0, false, false));     // no good label
  traces.push_back(mini_trace(4, {12}, 60, 9.0, true, false));    // mislabeled
  traces.push_back(mini_trace(5, {16}, 70, 3.0, false, true));    // truncated

  auto rows = summarize("cell", traces, /*exclude_mislabeled=*/false);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].metric == "tau_g1");
  CHECK(rows[0].n_values == 4);
  CHECK(rows[0].mean == doctest::Approx((10 + 14 + 12 + 16) / 4.0));
  CHECK(rows[0].n_runs == 5);
  CHECK(rows[0].n_mislabeled == 1);
  CHECK(rows[0].n_truncated == 1);
  CHECK(rows[1].metric == "tau_g2");
  CHECK(rows[1].n_values == 1);
  CHECK(rows[1].mean == 20.0);
  CHECK(rows[1].stddev == 0.0);
  CHECK(rows[2].metric == "tau_stop");
  CHECK(rows[2].n_values == 4);  // truncated run drops out
  CHECK(rows[2].mean == doctest::Approx((30 + 40 + 50 + 60) / 4.0));
  // population std of {30,40,50,60}: sqrt(125)
  CHECK(rows[2].stddev == doctest::Approx(std::sqrt(125.0)));
  CHECK(rows[3].metric == "regret_g1");
  CHECK(rows[3].n_values == 4);

  auto excl = summarize("cell", traces, /*exclude_mislabeled=*/true);
  CHECK(excl[0].n_values == 3);
  CHECK(excl[0].mean == doctest::Approx((10 + 14 + 16) / 3.0));
  CHECK(excl[0].n_mislabeled == 1);  // still counted

  // order independence
  std::vector<RunTrace> shuffled = traces;
  std::shuffle(shuffled.begin(), shuffled.end(), std::mt19937(4));
  auto rows2 = summarize("cell", shuffled, false);
  for (int i = 0; i < 4; ++i) {
    CHECK(rows2[i].mean == doctest::Approx(rows[i].mean).epsilon(1e-12));
    CHECK(rows2[i].stddev == doctest::Approx(rows[i].stddev).epsilon(1e-12));
  }
}

TEST_CASE("runs CSV golden rows") {
  std::vector<RunTrace> traces;
  traces.push_back(mini_trace(11, {10}, 30, 1.5, false, false));
  traces.push_back(mini_trace(12, {}, 44, 0.0, true, true));
  std::ostringstream os;
  write_runs_rows(os, "c", traces);
  CHECK(os.str() ==
        "c,0,11,10,,30,1.5,0,0,gb\n"
        "c,1,12,,,44,,1,1,gb\n");
}

TEST_CASE("summary CSV leaves undefined metrics empty") {
  std::vector<RunTrace> traces;
  traces.push_back(mini_trace(1, {}, 30, 0.0, false, false));
  std::ostringstream os;
  write_summary_rows(os, summarize("c", traces, false));
  const std::string s = os.str();
  CHECK(s.find("c,tau_g1,,,1,0,0,0\n") != std::string::npos);
  CHECK(s.find("c,tau_stop,30,0,1,0,0,1\n") != std::string::npos);
}

TEST_CASE("execute produces one summary block per cell and distinct seeds") {
  ExperimentConfig cfg = parse_config(R"({
    "cells": [{"name": "t", "means": [0.9], "xi": 0.5, "policy": "moss",
               "stopping": "eprocess", "delta": 0.05, "replications": 5,
               "master_seed": 99}]})");
  ExperimentResult res = execute(cfg, 2);
  REQUIRE(res.cells.size() == 1);
  REQUIRE(res.cells[0].traces.size() == 5);
  for (size_t i = 0; i < 5; ++i) CHECK(res.cells[0].traces[i].seed == derive_seed(99, i));
  REQUIRE(res.summary.size() == 4);
  // summary mean equals an independent recomputation from the trace list
  double sum = 0.0;
  for (const auto& t : res.cells[0].traces) sum += static_cast<double>(t.tau_good.at(0));
  CHECK(res.summary[0].mean == doctest::Approx(sum / 5.0).epsilon(1e-12));
}
