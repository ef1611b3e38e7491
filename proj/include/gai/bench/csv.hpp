#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gai/trace.hpp"

namespace gai::bench {

// Shortest round-trip decimal form via std::to_chars: locale-free, '.' decimal
// point, bit-exact across platforms — the determinism contract for CSV diffs.
std::string format_double(double v);

// Per-run table. One row per run:
//   cell,run_id,seed,tau_g1,tau_g2,tau_stop,regret_g1,mislabeled,truncated,labels
// tau_g1/tau_g2/regret_g1 are empty cells when the run never found that many
// good arms; labels is one char per arm: g/b/u.
extern const char* kRunsHeader;
void write_runs_rows(std::ostream& os, const std::string& cell,
                     const std::vector<RunTrace>& traces);

struct SummaryRow {
  std::string cell;
  std::string metric;  // tau_g1 | tau_g2 | tau_stop | regret_g1
  double mean = 0.0;
  double stddev = 0.0;  // population (1/n) over the aggregated runs
  int n_runs = 0;
  int n_mislabeled = 0;
  int n_truncated = 0;
  int n_values = 0;  // runs where the metric was defined (and not excluded)
};

// Aggregates one cell. Metrics are averaged over runs where they are defined:
// tau_g1/regret_g1 need a first good label, tau_g2 a second, tau_stop a
// non-truncated exit. With exclude_mislabeled set, mislabeled runs drop out of
// every metric (they still count in n_mislabeled).
std::vector<SummaryRow> summarize(const std::string& cell, const std::vector<RunTrace>& traces,
                                  bool exclude_mislabeled);

extern const char* kSummaryHeader;
void write_summary_rows(std::ostream& os, const std::vector<SummaryRow>& rows);

std::string label_string(const RunTrace& trace);

}  // namespace gai::bench
