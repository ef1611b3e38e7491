#include "gai/reward_models.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace gai {

ArmModel make_arm(ArmKind kind, double mean) {
  if (!(mean >= 0.0 && mean <= 1.0))
    throw std::invalid_argument("arm mean must be in [0,1], got " + std::to_string(mean));
  if (kind == ArmKind::Mixture && !(mean >= 0.25 && mean <= 0.75))
    throw std::invalid_argument("mixture arm mean must be in [0.25,0.75], got " +
                                std::to_string(mean));
  return ArmModel{kind, mean};
}

double sample(const ArmModel& model, RandomStream& rng) {
  double x;
  if (model.kind == ArmKind::Bernoulli) {
    x = rng.uniform01() < model.mean ? 1.0 : 0.0;
  } else {
    // Always two draws: coin, then inner value.
    const bool bernoulli_branch = rng.uniform01() < 0.5;
    const double inner = rng.uniform01();
    if (bernoulli_branch) {
      x = inner < (2.0 * model.mean - 0.5) ? 1.0 : 0.0;
    } else {
      x = inner;
    }
  }
  assert(x >= 0.0 && x <= 1.0);
  return x;
}

BanditInstance make_instance(std::vector<ArmModel> arms, double xi) {
  if (arms.empty()) throw std::invalid_argument("instance needs at least one arm");
  if (!(xi > 0.0 && xi < 1.0))
    throw std::invalid_argument("threshold xi must be strictly inside (0,1), got " +
                                std::to_string(xi));
  return BanditInstance{std::move(arms), xi};
}

LabelSets true_labels(const BanditInstance& instance) {
  LabelSets out;
  for (int a = 0; a < static_cast<int>(instance.arms.size()); ++a) {
    if (instance.arms[a].mean > instance.xi)
      out.good.push_back(a);
    else
      out.bad.push_back(a);
  }
  return out;
}

}  // namespace gai
