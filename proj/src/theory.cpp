#include "gai/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gai {

double kl_bernoulli(double mu, double xi) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw std::invalid_argument("kl_bernoulli: mu outside [0,1]");
  if (!(xi > 0.0 && xi < 1.0)) throw std::invalid_argument("kl_bernoulli: xi outside (0,1)");
  if (mu == xi) return 0.0;
  if (mu <= 0.0) return std::log(1.0 / (1.0 - xi));
  if (mu >= 1.0) return std::log(1.0 / xi);
  return mu * std::log(mu / xi) + (1.0 - mu) * std::log((1.0 - mu) / (1.0 - xi));
}

double lambda_opt(double mu, double xi) { return (mu - xi) / (xi * (1.0 - xi)); }

double e_power_reference(double mu, double xi) {
  if (!(xi > 0.0 && xi < 1.0)) throw std::invalid_argument("e_power_reference: xi outside (0,1)");
  if (mu <= 0.0 || mu >= 1.0) return kl_bernoulli(mu, xi);  // limit convention
  return std::log((1.0 - mu) / (1.0 - xi)) +
         mu * std::log(mu * (1.0 - xi) / (xi * (1.0 - mu)));
}

BoundReport minimax_bounds(const BanditInstance& instance, double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("minimax_bounds: delta outside (0,1)");
  const int K = static_cast<int>(instance.arms.size());
  const double inf = std::numeric_limits<double>::infinity();

  BoundReport r;
  r.log_inv_delta = std::log(1.0 / delta);
  r.log_label_threshold = std::log(2.0 * K / delta);

  std::vector<double> means(K);
  for (int a = 0; a < K; ++a) {
    means[a] = instance.arms[a].mean;
    r.d.push_back(kl_bernoulli(means[a], instance.xi));
    if (means[a] == instance.xi) r.hypothesis_violated = true;
  }
  std::vector<double> sorted = means;
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  r.distinct_means = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  for (int i = 1; i <= K; ++i) {
    const double mu_i = sorted[i - 1];
    double coeff = 0.0;
    for (int a = 0; a < K; ++a) {
      if (means[a] >= mu_i) coeff += r.d[a] > 0.0 ? 1.0 / r.d[a] : inf;
    }
    r.tau_g_coeffs.push_back(coeff);
    r.tau_g_scaled.push_back(coeff * r.log_inv_delta);
    r.tau_g_heuristic.push_back(coeff * r.log_label_threshold);
  }
  double total = 0.0;
  for (int a = 0; a < K; ++a) total += r.d[a] > 0.0 ? 1.0 / r.d[a] : inf;
  r.tau_stop_coeff = total;
  r.tau_stop_scaled = total * r.log_inv_delta;
  r.tau_stop_heuristic = total * r.log_label_threshold;
  return r;
}

}  // namespace gai
