#include "gai/eprocess.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gai/theory.hpp"

namespace gai {

double lambda_minus(double mu_hat, double xi, double b) {
  return std::min(b / xi, std::max((mu_hat - xi) / (xi * (1.0 - xi)), 0.0));
}

double lambda_plus(double mu_hat, double xi, double b) {
  return std::min(0.0, std::max((mu_hat - xi) / (xi * (1.0 - xi)), -b / (1.0 - xi)));
}

void update(EvidenceState& state, double x) {
  const auto& s = state.schedule;
  double lm, lp;
  if (s.kind == ScheduleKind::PredictablePlugin) {
    const double mu_hat = state.mean();  // excludes x: predictable bet
    lm = lambda_minus(mu_hat, s.xi, s.b);
    lp = lambda_plus(mu_hat, s.xi, s.b);
  } else {
    const double lam = lambda_opt(s.oracle_mean, s.xi);
    lm = std::min(s.b / s.xi, std::max(lam, 0.0));
    lp = std::max(-s.b / (1.0 - s.xi), std::min(lam, 0.0));
  }
  const double dev = x - s.xi;
  state.log_e_minus += std::log1p(lm * dev);
  state.log_e_plus += std::log1p(lp * dev);
  state.pulls += 1;
  state.running_sum += x;
}

double log_label_threshold(int K, double delta) {
  if (K < 1) throw std::invalid_argument("log_label_threshold: K must be >= 1");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("log_label_threshold: delta outside (0,1)");
  return std::log(2.0 * K / delta);
}

TestDecision decide(const EvidenceState& state, int K, double delta) {
  const double thr = log_label_threshold(K, delta);
  if (state.log_e_minus >= thr) return TestDecision::RejectBadNull;
  if (state.log_e_plus > thr) return TestDecision::RejectGoodNull;
  return TestDecision::None;
}

void reset(EvidenceState& state) {
  state.log_e_minus = 0.0;
  state.log_e_plus = 0.0;
  state.pulls = 0;
  state.running_sum = 0.0;
}

}  // namespace gai
