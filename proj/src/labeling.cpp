#include "gai/labeling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gai {

double confidence_radius(long long N, int K, double delta) {
  if (N < 1) throw std::invalid_argument("confidence_radius: N must be >= 1");
  const double n = static_cast<double>(N);
  return std::sqrt(std::log(4.0 * K * n * n / delta) / (2.0 * n));
}

TestDecision judge(const StoppingRule& rule, long long N, double mu_hat,
                   const EvidenceState* evidence) {
  if (rule.kind == StoppingKind::ConfidenceBound) {
    if (N < 1) throw std::invalid_argument("judge: confidence bound needs N >= 1");
    const double u = confidence_radius(N, rule.K, rule.delta);
    if (mu_hat - u > rule.xi) return TestDecision::RejectBadNull;
    if (mu_hat + u < rule.xi) return TestDecision::RejectGoodNull;
    return TestDecision::None;
  }
  if (evidence == nullptr) throw std::invalid_argument("judge: e-process rule needs evidence");
  return decide(*evidence, rule.K, rule.delta);
}

int min_pulls_to_label(int K, double delta, double b, double xi) {
  const double worst_factor = 1.0 + b * std::max(xi / (1.0 - xi), (1.0 - xi) / xi);
  const double raw = std::log(2.0 * K / delta) / std::log(worst_factor);
  const long long n = static_cast<long long>(std::ceil(raw));
  return static_cast<int>(std::max(n, 1LL));
}

}  // namespace gai
