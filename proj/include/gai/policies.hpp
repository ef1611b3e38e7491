#pragma once

#include <vector>

#include "gai/reward_models.hpp"
#include "gai/trace.hpp"

namespace gai {

enum class PolicyKind { Moss, Ucb, Hdoc, LucbG, AptG, Oracle };

// Index formulas, natural logs throughout. t is the current global round
// (1-based, counts every pull including initialization and pulls of arms that
// were labeled later); N is the arm's own pull count. At N = 0 the optimistic
// indices return +infinity (forced exploration after a reset) and the APT-G
// score returns 0 (most urgent, since APT-G takes an argmin).
double moss_index(double mu_hat, long long t, int K, long long N, double alpha);
double ucb_index(double mu_hat, long long t, long long N);
double hdoc_index(double mu_hat, long long t, long long N);
double lucb_g_index(double mu_hat, int K, long long N, double alpha);
double apt_g_score(double mu_hat, double xi, long long N);

// Sufficient statistics for arm selection over the unlabeled set.
struct PolicyState {
  PolicyKind kind = PolicyKind::Moss;
  int K = 0;
  double alpha = 0.05;             // Moss / LucbG exploration parameter
  double xi = 0.5;                 // APT-G target
  std::vector<double> true_means;  // Oracle only

  long long t = 1;  // current round; incremented by observe()
  std::vector<long long> pulls;
  std::vector<double> sums;

  double mean(int a) const { return pulls[a] > 0 ? sums[a] / pulls[a] : xi; }
};

PolicyState make_policy(PolicyKind kind, int K, double alpha, double xi,
                        std::vector<double> true_means = {});

// Argmax of the kind's index (argmin for AptG) over `unlabeled`; ties broken
// by smallest arm index. `unlabeled` must be nonempty.
int select(const PolicyState& state, const std::vector<int>& unlabeled);

void observe(PolicyState& state, int arm, double x);  // N(arm)++, sum += x, t++

void reset_arm(PolicyState& state, int arm);  // zero N and sum; t unchanged

// Diagnostic for the regret-minimizing property: empirical P(A_t != a*) at
// round t across traces recorded with action logs. a* is the true best arm.
double regret_anomaly_rate(const std::vector<RunTrace>& traces,
                           const BanditInstance& instance, long long t);

}  // namespace gai
