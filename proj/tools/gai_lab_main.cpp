#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gai/bench/config.hpp"
#include "gai/bench/runner.hpp"
#include "gai/bench/validate.hpp"
#include "gai/theory.hpp"

namespace {

int jobs_from_env() {
  const char* env = std::getenv("GAI_LAB_JOBS");
  if (!env) return 0;
  const int v = std::atoi(env);
  return v > 0 ? v : 0;
}

int cmd_run(const std::string& config_path, const std::string& out_override, int jobs_flag,
            bool seed_given, std::uint64_t seed_override) {
  gai::bench::ExperimentConfig cfg = gai::bench::load_config(config_path);
  if (seed_given)
    for (auto& cell : cfg.cells) cell.master_seed = seed_override;
  const int jobs = jobs_flag > 0 ? jobs_flag : jobs_from_env();
  const std::string out_dir = out_override.empty() ? cfg.out_dir : out_override;

  gai::bench::ExperimentResult result = gai::bench::execute(cfg, jobs);
  for (const auto& path : gai::bench::write_outputs(result, out_dir, cfg.write_json))
    std::printf("wrote %s\n", path.c_str());
  for (const auto& row : result.summary) {
    if (row.n_values > 0)
      std::printf("%-24s %-10s mean=%.4f std=%.4f n=%d mislabeled=%d truncated=%d\n",
                  row.cell.c_str(), row.metric.c_str(), row.mean, row.stddev, row.n_values,
                  row.n_mislabeled, row.n_truncated);
    else
      std::printf("%-24s %-10s (no runs reached this metric)\n", row.cell.c_str(),
                  row.metric.c_str());
  }
  return 0;
}

int cmd_theory(const std::vector<double>& means, double xi, double delta) {
  std::vector<gai::ArmModel> arms;
  for (double mu : means) arms.push_back(gai::make_bernoulli(mu));
  const gai::BanditInstance instance = gai::make_instance(arms, xi);
  const gai::BoundReport r = gai::minimax_bounds(instance, delta);

  std::printf("# lower-bound coefficients of log(1/delta); heuristic column uses the\n");
  std::printf("# algorithm's actual label threshold 2K/delta\n");
  std::printf("arm,mean,d,inv_d\n");
  for (size_t a = 0; a < means.size(); ++a)
    std::printf("%zu,%s,%.12g,%.12g\n", a + 1, gai::bench::format_double(means[a]).c_str(),
                r.d[a], r.d[a] > 0.0 ? 1.0 / r.d[a] : INFINITY);
  std::printf("bound,coeff,scaled_log_inv_delta,scaled_log_2K_delta\n");
  for (size_t i = 0; i < r.tau_g_coeffs.size(); ++i)
    std::printf("tau_g%zu,%.6f,%.6f,%.6f\n", i + 1, r.tau_g_coeffs[i], r.tau_g_scaled[i],
                r.tau_g_heuristic[i]);
  std::printf("tau_stop,%.6f,%.6f,%.6f\n", r.tau_stop_coeff, r.tau_stop_scaled,
              r.tau_stop_heuristic);
  if (r.hypothesis_violated)
    std::printf("note: some arm mean equals xi; those bounds are infinite and the "
                "asymptotic hypotheses do not hold\n");
  if (!r.distinct_means)
    std::printf("note: repeated means; the distinct-means hypothesis of the asymptotic "
                "bound is violated (coefficients computed as written)\n");
  return 0;
}

int cmd_validate(int jobs_flag) {
  const int jobs = jobs_flag > 0 ? jobs_flag : jobs_from_env();
  bool all_pass = true;
  for (const auto& c : gai::bench::run_all_checks(jobs)) {
    std::printf("%-28s %s  (%s)\n", c.name.c_str(), c.pass ? "PASS" : "FAIL",
                c.detail.c_str());
    all_pass = all_pass && c.pass;
  }
  return all_pass ? 0 : 1;
}

int cmd_presets() {
  for (const auto& name : gai::bench::preset_names()) {
    const auto p = gai::bench::preset_spec(name);
    std::printf("%-14s xi=%s means=", name.c_str(),
                gai::bench::format_double(p.xi).c_str());
    for (size_t i = 0; i < p.means.size(); ++i)
      std::printf("%s%s", i ? "," : "", gai::bench::format_double(p.means[i]).c_str());
    std::printf("\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gai_lab: good-arm identification benchmark harness"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "execute an experiment config, write CSVs");
  std::string config_path, out_dir;
  int jobs = 0;
  std::uint64_t seed = 0;
  run->add_option("--config", config_path, "experiment config (JSON)")->required();
  run->add_option("--out", out_dir, "output directory (overrides config out_dir)");
  run->add_option("--jobs", jobs, "worker threads (0 = hardware; env GAI_LAB_JOBS as fallback)");
  auto* seed_opt = run->add_option("--seed", seed, "override master_seed of every cell");

  auto* theory = app.add_subcommand("theory", "print lower-bound coefficients");
  std::vector<double> means;
  double xi = 0.5, delta = 0.05;
  theory->add_option("--means", means, "comma-separated arm means")
      ->required()
      ->delimiter(',');
  theory->add_option("--xi", xi, "good-arm threshold")->required();
  theory->add_option("--delta", delta, "error budget")->required();

  auto* validate = app.add_subcommand("validate", "run built-in invariant suites");
  int vjobs = 0;
  validate->add_option("--jobs", vjobs, "worker threads");

  app.add_subcommand("presets", "list built-in instance presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(config_path, out_dir, jobs, seed_opt->count() > 0, seed);
    if (theory->parsed()) return cmd_theory(means, xi, delta);
    if (validate->parsed()) return cmd_validate(vjobs);
    return cmd_presets();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
