#pragma once

#include <cstdint>
#include <vector>

#include "gai/labeling.hpp"
#include "gai/policies.hpp"
#include "gai/reward_models.hpp"
#include "gai/trace.hpp"

namespace gai {

struct EngineConfig {
  BanditInstance instance;
  PolicyKind policy = PolicyKind::Moss;
  double alpha = 0.05;  // Moss / LucbG
  StoppingKind stopping = StoppingKind::EProcess;
  double delta = 0.05;
  double b = 0.98;
  int m = 0;  // stop early after m good labels; <= 0 means m = K
  bool reset_variant = false;
  long long max_rounds = 10'000'000;
  bool log_actions = false;
};

// One full trajectory:
//   - every arm sampled once up front (except under the Oracle policy, which
//     plays the known-best unlabeled arm from round one and needs no sweep),
//   - then rounds of select -> sample -> update -> judge the pulled arm,
//   - labels latch, labeled arms are never pulled again,
//   - with reset_variant, a label resets evidence and running statistics of
//     all still-unlabeled arms (label first, then reset),
//   - exits when the unlabeled set empties, m good labels are found, or the
//     round cap is hit (trace flagged truncated, never an exception).
RunTrace run(const EngineConfig& config, std::uint64_t seed);

// Deterministic batch: run i uses derive_seed(master_seed, i); the result
// vector is ordered by i no matter how many workers execute it.
std::vector<RunTrace> run_batch(const EngineConfig& config, std::uint64_t master_seed,
                                int replications, int jobs = 0);

}  // namespace gai
