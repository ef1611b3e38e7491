#include "gai/policies.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gai {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double moss_index(double mu_hat, long long t, int K, long long N, double alpha) {
  if (N <= 0) return kInf;
  const double ratio = static_cast<double>(t) / (static_cast<double>(K) * N);
  const double bonus = std::max(0.0, std::log(ratio));
  return mu_hat + std::sqrt((1.0 + alpha) / 2.0 * bonus / N);
}

double ucb_index(double mu_hat, long long t, long long N) {
  if (N <= 0) return kInf;
  const double lt = std::log(static_cast<double>(t));
  return mu_hat + std::sqrt(std::log(1.0 + t * lt * lt) / (2.0 * N));
}

double hdoc_index(double mu_hat, long long t, long long N) {
  if (N <= 0) return kInf;
  return mu_hat + std::sqrt(std::log(static_cast<double>(t)) / (2.0 * N));
}

double lucb_g_index(double mu_hat, int K, long long N, double alpha) {
  if (N <= 0) return kInf;
  const double n = static_cast<double>(N);
  return mu_hat + std::sqrt(std::log(4.0 * K * n * n / alpha) / (2.0 * n));
}

double apt_g_score(double mu_hat, double xi, long long N) {
  if (N <= 0) return 0.0;
  return std::sqrt(static_cast<double>(N)) * std::abs(xi - mu_hat);
}

PolicyState make_policy(PolicyKind kind, int K, double alpha, double xi,
                        std::vector<double> true_means) {
  if (K < 1) throw std::invalid_argument("policy needs K >= 1");
  if (kind == PolicyKind::Oracle && static_cast<int>(true_means.size()) != K)
    throw std::invalid_argument("oracle policy needs one true mean per arm");
  PolicyState s;
  s.kind = kind;
  s.K = K;
  s.alpha = alpha;
  s.xi = xi;
  s.true_means = std::move(true_means);
  s.pulls.assign(K, 0);
  s.sums.assign(K, 0.0);
  return s;
}

int select(const PolicyState& state, const std::vector<int>& unlabeled) {
  if (unlabeled.empty()) throw std::logic_error("select called with no unlabeled arms");
  const bool minimize = state.kind == PolicyKind::AptG;
  int best = -1;
  double best_val = minimize ? kInf : -kInf;
  for (int a : unlabeled) {
    double v;
    switch (state.kind) {
      case PolicyKind::Moss:
        v = moss_index(state.mean(a), state.t, state.K, state.pulls[a], state.alpha);
        break;
      case PolicyKind::Ucb:
        v = ucb_index(state.mean(a), state.t, state.pulls[a]);
        break;
      case PolicyKind::Hdoc:
        v = hdoc_index(state.mean(a), state.t, state.pulls[a]);
        break;
      case PolicyKind::LucbG:
        v = lucb_g_index(state.mean(a), state.K, state.pulls[a], state.alpha);
        break;
      case PolicyKind::AptG:
        v = apt_g_score(state.mean(a), state.xi, state.pulls[a]);
        break;
      case PolicyKind::Oracle:
        v = state.true_means[a];
        break;
      default:
        throw std::logic_error("unknown policy kind");
    }
    // Ties go to the smallest arm index regardless of candidate order.
    const bool better = minimize ? v < best_val : v > best_val;
    if (best < 0 || better || (v == best_val && a < best)) {
      best = a;
      best_val = v;
    }
  }
  return best;
}

void observe(PolicyState& state, int arm, double x) {
  state.pulls[arm] += 1;
  state.sums[arm] += x;
  state.t += 1;
}

void reset_arm(PolicyState& state, int arm) {
  state.pulls[arm] = 0;
  state.sums[arm] = 0.0;
}

double regret_anomaly_rate(const std::vector<RunTrace>& traces,
                           const BanditInstance& instance, long long t) {
  if (t < 1) throw std::invalid_argument("regret_anomaly_rate: t must be >= 1");
  int best = 0;
  for (int a = 1; a < static_cast<int>(instance.arms.size()); ++a)
    if (instance.arms[a].mean > instance.arms[best].mean) best = a;
  long long n = 0, bad = 0;
  for (const auto& tr : traces) {
    if (tr.actions.empty()) throw std::invalid_argument("trace lacks an action log");
    if (static_cast<long long>(tr.actions.size()) < t) continue;
    ++n;
    if (tr.actions[t - 1] != best) ++bad;
  }
  if (n == 0) throw std::invalid_argument("no trace reaches round t");
  return static_cast<double>(bad) / static_cast<double>(n);
}

}  // namespace gai
