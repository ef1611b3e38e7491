#include "gai/bench/runner.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace gai::bench {

ExperimentResult execute(const ExperimentConfig& config, int jobs_override) {
  const int jobs = jobs_override > 0 ? jobs_override : config.jobs;
  ExperimentResult result;
  for (const CellConfig& cell : config.cells) {
    CellResult cr;
    cr.cell = cell;
    cr.traces = run_batch(to_engine_config(cell), cell.master_seed, cell.replications, jobs);
    auto rows = summarize(cell.name, cr.traces, config.exclude_mislabeled_from_times);
    result.summary.insert(result.summary.end(), rows.begin(), rows.end());
    result.cells.push_back(std::move(cr));
  }
  return result;
}

std::vector<std::string> write_outputs(const ExperimentResult& result,
                                       const std::string& out_dir, bool write_json) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  const std::string runs_path = (fs::path(out_dir) / "runs.csv").string();
  const std::string summary_path = (fs::path(out_dir) / "summary.csv").string();
  std::vector<std::string> written;

  {
    std::ofstream os(runs_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + runs_path);
    os << kRunsHeader;
    for (const CellResult& c : result.cells) write_runs_rows(os, c.cell.name, c.traces);
    written.push_back(runs_path);
  }
  {
    std::ofstream os(summary_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + summary_path);
    os << kSummaryHeader;
    write_summary_rows(os, result.summary);
    written.push_back(summary_path);
  }
  if (write_json) {
    nlohmann::json j = nlohmann::json::array();
    for (const SummaryRow& r : result.summary) {
      nlohmann::json row{{"cell", r.cell},          {"metric", r.metric},
                         {"n_runs", r.n_runs},      {"n_mislabeled", r.n_mislabeled},
                         {"n_truncated", r.n_truncated}, {"n_values", r.n_values}};
      if (r.n_values > 0) {
        row["mean"] = r.mean;
        row["std"] = r.stddev;
      }
      j.push_back(std::move(row));
    }
    const std::string json_path = (fs::path(out_dir) / "summary.json").string();
    std::ofstream os(json_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + json_path);
    os << j.dump(2) << '\n';
    written.push_back(json_path);
  }
  return written;
}

}  // namespace gai::bench
