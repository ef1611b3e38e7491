#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gai/engine.hpp"

namespace gai::bench {

// One benchmark cell: an instance plus a policy/stopping combination and a
// replication budget. `means`/`xi` are fully resolved at load time (presets
// expand immediately); `preset` keeps the name for display.
struct CellConfig {
  std::string name;
  std::string preset;  // empty when means were given explicitly
  std::vector<double> means;
  double xi = 0.5;
  ArmKind dgp = ArmKind::Bernoulli;
  PolicyKind policy = PolicyKind::Moss;
  double alpha = 0.05;
  StoppingKind stopping = StoppingKind::EProcess;
  double delta = 0.05;
  double b = 0.98;
  int m = 0;  // 0 = label all arms
  bool reset_variant = false;
  long long max_rounds = 10'000'000;
  int replications = 0;
  std::uint64_t master_seed = 0;
};

struct ExperimentConfig {
  std::vector<CellConfig> cells;
  std::string out_dir = ".";
  int jobs = 0;  // 0 = hardware parallelism
  bool exclude_mislabeled_from_times = false;
  bool write_json = false;
};

// Known presets: synthetic-k4, synthetic-k10, synthetic-k20, dose-finding.
std::vector<std::string> preset_names();
struct PresetSpec {
  std::vector<double> means;
  double xi;
};
PresetSpec preset_spec(const std::string& name);  // throws on unknown name

// Load/parse a JSON experiment config (schema documented in the README).
// Every validation error names the offending field, e.g. "cells[1].delta".
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& json_text);

EngineConfig to_engine_config(const CellConfig& cell);
BanditInstance cell_instance(const CellConfig& cell);

}  // namespace gai::bench
