#pragma once

#include "gai/eprocess.hpp"

namespace gai {

enum class StoppingKind { EProcess, ConfidenceBound, OracleEProcess };

// Orthogonal to the sampling policy, so policy x stopping combinations can be
// benchmarked independently.
struct StoppingRule {
  StoppingKind kind = StoppingKind::EProcess;
  int K = 1;
  double delta = 0.05;
  double xi = 0.5;
  double b = 0.98;
};

// Hoeffding-style radius U(N) = sqrt(log(4 K N^2 / delta) / (2N)); N is the
// arm's post-pull count at the moment of judging.
double confidence_radius(long long N, int K, double delta);

// One-shot label check for the just-pulled arm.
//   EProcess / OracleEProcess: delegates to decide() on the arm's evidence.
//   ConfidenceBound: good iff mu_hat - U(N) > xi, bad iff mu_hat + U(N) < xi
//   (one-sided LCB/UCB convention).
// The engine latches the first non-None decision; judge itself is stateless.
TestDecision judge(const StoppingRule& rule, long long N, double mu_hat,
                   const EvidenceState* evidence);

// No e-process label can happen before this many pulls of an arm: each betting
// factor is at most 1 + b*max(xi/(1-xi), (1-xi)/xi), so reaching 2K/delta
// needs at least ceil(log(2K/delta) / log(1 + b*max(...))) of them. Clamped
// to >= 1 (the log ratio can be <= 0 for delta >= 2K).
int min_pulls_to_label(int K, double delta, double b, double xi);

}  // namespace gai
