#include "gai/bench/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gai::bench {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw std::invalid_argument("config: " + field + ": " + why);
}

double get_real(const json& j, const std::string& path, const char* key, bool required,
                double fallback) {
  if (!j.contains(key)) {
    if (required) fail(path + "." + key, "missing");
    return fallback;
  }
  if (!j[key].is_number()) fail(path + "." + key, "must be a number");
  return j[key].get<double>();
}

PolicyKind parse_policy(const std::string& s, const std::string& path) {
  if (s == "moss") return PolicyKind::Moss;
  if (s == "ucb") return PolicyKind::Ucb;
  if (s == "hdoc") return PolicyKind::Hdoc;
  if (s == "lucb_g") return PolicyKind::LucbG;
  if (s == "apt_g") return PolicyKind::AptG;
  if (s == "oracle") return PolicyKind::Oracle;
  fail(path, "unknown policy '" + s + "' (known: moss, ucb, hdoc, lucb_g, apt_g, oracle)");
}

StoppingKind parse_stopping(const std::string& s, const std::string& path) {
  if (s == "eprocess") return StoppingKind::EProcess;
  if (s == "confidence_bound") return StoppingKind::ConfidenceBound;
  if (s == "oracle_eprocess") return StoppingKind::OracleEProcess;
  fail(path, "unknown stopping '" + s +
                 "' (known: eprocess, confidence_bound, oracle_eprocess)");
}

CellConfig parse_cell(const json& j, int idx) {
  const std::string path = "cells[" + std::to_string(idx) + "]";
  if (!j.is_object()) fail(path, "must be an object");
  CellConfig c;

  if (!j.contains("name") || !j["name"].is_string() || j["name"].get<std::string>().empty())
    fail(path + ".name", "missing or empty");
  c.name = j["name"].get<std::string>();

  const bool has_preset = j.contains("preset");
  const bool has_means = j.contains("means");
  if (has_preset == has_means)
    fail(path, "exactly one of 'preset' or 'means' is required");
  if (has_preset) {
    if (!j["preset"].is_string()) fail(path + ".preset", "must be a string");
    c.preset = j["preset"].get<std::string>();
    PresetSpec p = preset_spec(c.preset);  // throws with the preset name on unknowns
    c.means = p.means;
    c.xi = p.xi;
    if (j.contains("xi")) fail(path + ".xi", "not allowed together with 'preset'");
  } else {
    if (!j["means"].is_array() || j["means"].empty())
      fail(path + ".means", "must be a nonempty array of reals");
    for (const auto& v : j["means"]) {
      if (!v.is_number()) fail(path + ".means", "must contain only numbers");
      c.means.push_back(v.get<double>());
    }
    c.xi = get_real(j, path, "xi", true, 0.5);
  }
  if (!(c.xi > 0.0 && c.xi < 1.0)) fail(path + ".xi", "must be strictly inside (0,1)");

  if (j.contains("dgp")) {
    if (!j["dgp"].is_string()) fail(path + ".dgp", "must be a string");
    const std::string d = j["dgp"].get<std::string>();
    if (d == "bernoulli")
      c.dgp = ArmKind::Bernoulli;
    else if (d == "mixture")
      c.dgp = ArmKind::Mixture;
    else
      fail(path + ".dgp", "unknown dgp '" + d + "' (known: bernoulli, mixture)");
  }

  if (!j.contains("policy") || !j["policy"].is_string()) fail(path + ".policy", "missing");
  c.policy = parse_policy(j["policy"].get<std::string>(), path + ".policy");
  if (!j.contains("stopping") || !j["stopping"].is_string())
    fail(path + ".stopping", "missing");
  c.stopping = parse_stopping(j["stopping"].get<std::string>(), path + ".stopping");

  c.delta = get_real(j, path, "delta", true, 0.0);
  if (!(c.delta > 0.0 && c.delta < 1.0)) fail(path + ".delta", "must be in (0,1)");
  c.b = get_real(j, path, "b", false, 0.98);
  if (!(c.b > 0.0 && c.b < 1.0)) fail(path + ".b", "must be strictly inside (0,1)");
  c.alpha = get_real(j, path, "alpha", false, 0.05);
  if (!(c.alpha > 0.0)) fail(path + ".alpha", "must be positive");

  if (j.contains("m")) c.m = j["m"].get<int>();
  if (c.m < 0 || c.m > static_cast<int>(c.means.size()))
    fail(path + ".m", "must be in [0, K]");
  if (j.contains("reset_variant")) c.reset_variant = j["reset_variant"].get<bool>();
  if (j.contains("max_rounds")) c.max_rounds = j["max_rounds"].get<long long>();
  if (c.max_rounds < static_cast<long long>(c.means.size()))
    fail(path + ".max_rounds", "must be at least K");

  if (!j.contains("replications")) fail(path + ".replications", "missing");
  c.replications = j["replications"].get<int>();
  if (c.replications < 1) fail(path + ".replications", "must be >= 1");

  if (!j.contains("master_seed")) fail(path + ".master_seed", "missing");
  if (!j["master_seed"].is_number_unsigned() && !j["master_seed"].is_number_integer())
    fail(path + ".master_seed", "must be an integer");
  c.master_seed = j["master_seed"].get<std::uint64_t>();

  // Cross-field checks that would only explode later, reported here instead.
  try {
    cell_instance(c);  // validates means vs dgp (mixture range) and xi
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
  return c;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"synthetic-k4", "synthetic-k10", "synthetic-k20", "dose-finding"};
}

PresetSpec preset_spec(const std::string& name) {
  auto spread = [](int n_45, int n_40) {
    std::vector<double> m = {0.6, 0.55};
    m.insert(m.end(), n_45, 0.45);
    m.insert(m.end(), n_40, 0.4);
    return m;
  };
  if (name == "synthetic-k4") return {spread(1, 1), 0.5};
  if (name == "synthetic-k10") return {spread(4, 4), 0.5};
  if (name == "synthetic-k20") return {spread(9, 9), 0.5};
  if (name == "dose-finding") return {{0.36, 0.34, 0.469, 0.465, 0.537}, 0.5};
  throw std::invalid_argument("config: unknown preset '" + name +
                              "' (known: synthetic-k4, synthetic-k10, synthetic-k20, "
                              "dose-finding)");
}

ExperimentConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");

  ExperimentConfig cfg;
  if (j.contains("out_dir")) cfg.out_dir = j["out_dir"].get<std::string>();
  if (j.contains("jobs")) {
    cfg.jobs = j["jobs"].get<int>();
    if (cfg.jobs < 0) fail("jobs", "must be >= 0");
  }
  if (j.contains("exclude_mislabeled_from_times"))
    cfg.exclude_mislabeled_from_times = j["exclude_mislabeled_from_times"].get<bool>();
  if (j.contains("write_json")) cfg.write_json = j["write_json"].get<bool>();

  if (!j.contains("cells") || !j["cells"].is_array() || j["cells"].empty())
    fail("cells", "missing or empty");
  std::set<std::string> seen;
  for (int i = 0; i < static_cast<int>(j["cells"].size()); ++i) {
    CellConfig c = parse_cell(j["cells"][i], i);
    if (!seen.insert(c.name).second)
      fail("cells[" + std::to_string(i) + "].name", "duplicate cell name '" + c.name + "'");
    cfg.cells.push_back(std::move(c));
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

BanditInstance cell_instance(const CellConfig& cell) {
  std::vector<ArmModel> arms;
  arms.reserve(cell.means.size());
  for (double mu : cell.means) arms.push_back(make_arm(cell.dgp, mu));
  return make_instance(std::move(arms), cell.xi);
}

EngineConfig to_engine_config(const CellConfig& cell) {
  EngineConfig e;
  e.instance = cell_instance(cell);
  e.policy = cell.policy;
  e.alpha = cell.alpha;
  e.stopping = cell.stopping;
  e.delta = cell.delta;
  e.b = cell.b;
  e.m = cell.m;
  e.reset_variant = cell.reset_variant;
  e.max_rounds = cell.max_rounds;
  return e;
}

}  // namespace gai::bench
