#pragma once

#include <cstdint>

namespace gai {

enum class ScheduleKind { PredictablePlugin, OracleFixed };

// How the betting fraction lambda is chosen each step.
//   PredictablePlugin: clamped running-mean plug-in (uses only past data).
//   OracleFixed: the fixed lambda_opt of a known mean, split by sign between
//   the two one-sided processes; the off-sign side bets 0 (evidence stays 1).
struct LambdaSchedule {
  ScheduleKind kind = ScheduleKind::PredictablePlugin;
  double b = 0.98;   // truncation constant, strictly inside (0,1)
  double xi = 0.5;   // tested threshold
  double oracle_mean = 0.5;  // only read by OracleFixed
};

// Plug-in bets, clamped so each betting factor stays in [1-b, 1+b...]:
//   lambda_minus in [0, b/xi]        (evidence against "mean <= xi")
//   lambda_plus  in [-b/(1-xi), 0]   (evidence against "mean >  xi")
double lambda_minus(double mu_hat, double xi, double b);
double lambda_plus(double mu_hat, double xi, double b);

// Per-arm evidence, kept in log domain (the raw product crosses 2K/delta and
// keeps growing, so linear-domain accumulation would overflow on long runs).
struct EvidenceState {
  double log_e_minus = 0.0;
  double log_e_plus = 0.0;
  long long pulls = 0;
  double running_sum = 0.0;
  LambdaSchedule schedule;

  // Empirical mean with the zero-pull convention mu_hat_0 = xi, so the first
  // bet is always flat.
  double mean() const { return pulls > 0 ? running_sum / pulls : schedule.xi; }
};

enum class TestDecision { None, RejectBadNull, RejectGoodNull };

// One observation. Lambdas come from the state *before* x is folded in
// (predictability); then both one-sided log-evidences absorb their factor.
void update(EvidenceState& state, double x);

double log_label_threshold(int K, double delta);  // log(2K/delta)

// Good label when log E^- reaches the threshold (checked first, >=);
// bad label when log E^+ exceeds it (strict >). The asymmetric comparisons
// are deliberate and pinned by tests at the exact boundary.
TestDecision decide(const EvidenceState& state, int K, double delta);

void reset(EvidenceState& state);  // back to a fresh state, schedule kept

}  // namespace gai
