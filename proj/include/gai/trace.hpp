#pragma once

#include <cstdint>
#include <vector>

namespace gai {

enum class ArmLabel : std::uint8_t { Unlabeled, Good, Bad };

// One simulation trajectory. Rounds are 1-based global pull counts.
struct RunTrace {
  std::uint64_t seed = 0;

  std::vector<ArmLabel> labels;           // final per-arm labels
  std::vector<long long> tau_arm;         // round of each arm's label, 0 if none
  std::vector<long long> pulls_at_label;  // arm's own pull count at labeling, 0 if none
  std::vector<long long> tau_good;        // tau_good[i-1] = round of i-th good label
  long long tau_stop = 0;  // round the unlabeled set emptied (or early stop / cap)
  long long rounds = 0;    // total pulls at exit; equals tau_stop

  double cumulative_reward = 0.0;  // realized sum of rewards over the run
  // Pseudo-regret accumulated up to the first good label:
  //   sum over t <= tau_good[0] of (max_a mu_a - mu_{A_t}).
  // Zero (and reported as missing) when no good label occurred.
  double regret_at_tau_g1 = 0.0;

  bool mislabeled = false;  // some label disagrees with the true mean vs xi
  bool truncated = false;   // hit the round cap before terminating

  // Per-round logs, only filled when EngineConfig::log_actions is set.
  std::vector<std::int32_t> actions;
  std::vector<double> rewards;

  bool has_tau_g1() const { return !tau_good.empty(); }
  bool has_tau_g2() const { return tau_good.size() >= 2; }
};

}  // namespace gai
