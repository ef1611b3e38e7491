#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gai::bench {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Number of runs whose plug-in good-side log-evidence ever reaches log_threshold
// on an i.i.d. Bernoulli(xi) stream (the null). Used by the Ville/anytime-
// validity check: with threshold log(1/delta) the crossing probability is at
// most delta, so over `runs` independent runs the count is binomially bounded.
long long ville_crossing_count(int runs, int steps, double xi, double b,
                               double log_threshold, std::uint64_t master_seed, int jobs);

// Empirical growth rate log E^- / N after `steps` observations of a
// Bernoulli(mu) stream, for the plug-in (oracle=false) or fixed-oracle
// (oracle=true) schedule.
double e_power_rate(double mu, double xi, double b, long long steps, bool oracle,
                    std::uint64_t seed);

CheckResult check_lambda_ranges();
CheckResult check_log_domain_fidelity();
CheckResult check_ville_null(int jobs);    // full size: 10^4 runs x 10^4 steps
CheckResult check_lemma_floor(int jobs);   // labeled arms respect the min-pull bound

std::vector<CheckResult> run_all_checks(int jobs);

}  // namespace gai::bench
