#pragma once

#include <string>
#include <vector>

#include "gai/bench/config.hpp"
#include "gai/bench/csv.hpp"

namespace gai::bench {

struct CellResult {
  CellConfig cell;
  std::vector<RunTrace> traces;
};

struct ExperimentResult {
  std::vector<CellResult> cells;
  std::vector<SummaryRow> summary;
};

// Runs every cell (replications fan out across the worker pool; order of
// results is by run index regardless of scheduling). jobs_override > 0 wins
// over config.jobs.
ExperimentResult execute(const ExperimentConfig& config, int jobs_override = 0);

// Writes <out_dir>/runs.csv and <out_dir>/summary.csv (plus summary.json when
// write_json). Creates out_dir if needed. Returns the paths written.
std::vector<std::string> write_outputs(const ExperimentResult& result,
                                       const std::string& out_dir, bool write_json);

}  // namespace gai::bench
