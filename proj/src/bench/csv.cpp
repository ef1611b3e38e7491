#include "gai/bench/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace gai::bench {

std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, p);
}

const char* kRunsHeader =
    "cell,run_id,seed,tau_g1,tau_g2,tau_stop,regret_g1,mislabeled,truncated,labels\n";

std::string label_string(const RunTrace& trace) {
  std::string s;
  s.reserve(trace.labels.size());
  for (ArmLabel l : trace.labels)
    s.push_back(l == ArmLabel::Good ? 'g' : l == ArmLabel::Bad ? 'b' : 'u');
  return s;
}

void write_runs_rows(std::ostream& os, const std::string& cell,
                     const std::vector<RunTrace>& traces) {
  for (int i = 0; i < static_cast<int>(traces.size()); ++i) {
    const RunTrace& t = traces[i];
    os << cell << ',' << i << ',' << t.seed << ',';
    if (t.has_tau_g1()) os << t.tau_good[0];
    os << ',';
    if (t.has_tau_g2()) os << t.tau_good[1];
    os << ',' << t.tau_stop << ',';
    if (t.has_tau_g1()) os << format_double(t.regret_at_tau_g1);
    os << ',' << (t.mislabeled ? 1 : 0) << ',' << (t.truncated ? 1 : 0) << ','
       << label_string(t) << '\n';
  }
}

namespace {

struct Acc {
  double sum = 0.0, sumsq = 0.0;
  int n = 0;
  void add(double v) {
    sum += v;
    sumsq += v * v;
    ++n;
  }
  double mean() const { return n ? sum / n : std::nan(""); }
  double stddev() const {
    if (!n) return std::nan("");
    const double m = mean();
    return std::sqrt(std::max(0.0, sumsq / n - m * m));
  }
};

SummaryRow make_row(const std::string& cell, const std::string& metric, const Acc& acc,
                    int n_runs, int n_mis, int n_trunc) {
  SummaryRow r;
  r.cell = cell;
  r.metric = metric;
  r.mean = acc.mean();
  r.stddev = acc.stddev();
  r.n_runs = n_runs;
  r.n_mislabeled = n_mis;
  r.n_truncated = n_trunc;
  r.n_values = acc.n;
  return r;
}

}  // namespace

std::vector<SummaryRow> summarize(const std::string& cell, const std::vector<RunTrace>& traces,
                                  bool exclude_mislabeled) {
  Acc g1, g2, stop, regret;
  int n_mis = 0, n_trunc = 0;
  for (const RunTrace& t : traces) {
    if (t.mislabeled) ++n_mis;
    if (t.truncated) ++n_trunc;
    if (exclude_mislabeled && t.mislabeled) continue;
    if (t.has_tau_g1()) {
      g1.add(static_cast<double>(t.tau_good[0]));
      regret.add(t.regret_at_tau_g1);
    }
    if (t.has_tau_g2()) g2.add(static_cast<double>(t.tau_good[1]));
    if (!t.truncated) stop.add(static_cast<double>(t.tau_stop));
  }
  const int n = static_cast<int>(traces.size());
  return {make_row(cell, "tau_g1", g1, n, n_mis, n_trunc),
          make_row(cell, "tau_g2", g2, n, n_mis, n_trunc),
          make_row(cell, "tau_stop", stop, n, n_mis, n_trunc),
          make_row(cell, "regret_g1", regret, n, n_mis, n_trunc)};
}

const char* kSummaryHeader =
    "cell,metric,mean,std,n_runs,n_mislabeled,n_truncated,n_values\n";

void write_summary_rows(std::ostream& os, const std::vector<SummaryRow>& rows) {
  for (const SummaryRow& r : rows) {
    os << r.cell << ',' << r.metric << ',';
    if (r.n_values > 0) os << format_double(r.mean);
    os << ',';
    if (r.n_values > 0) os << format_double(r.stddev);
    os << ',' << r.n_runs << ',' << r.n_mislabeled << ',' << r.n_truncated << ','
       << r.n_values << '\n';
  }
}

}  // namespace gai::bench
