#pragma once

#include <vector>

#include "gai/rng.hpp"

namespace gai {

enum class ArmKind { Bernoulli, Mixture };

// Bounded reward generator with a fixed conditional mean.
//   Bernoulli: X in {0,1}, P(X=1) = mean.
//   Mixture:   with prob 1/2 a Bernoulli(2*mean - 1/2) draw, else Uniform(0,1).
// Validity is enforced at construction (make_*), not at sample time.
struct ArmModel {
  ArmKind kind = ArmKind::Bernoulli;
  double mean = 0.5;
};

ArmModel make_arm(ArmKind kind, double mean);
inline ArmModel make_bernoulli(double mean) { return make_arm(ArmKind::Bernoulli, mean); }
inline ArmModel make_mixture(double mean) { return make_arm(ArmKind::Mixture, mean); }

// Draw-order contract (keeps seeded sequences stable across versions):
// Bernoulli consumes exactly one uniform; Mixture consumes exactly two
// (fair coin first, then the inner draw, whichever branch was taken).
double sample(const ArmModel& model, RandomStream& rng);

struct BanditInstance {
  std::vector<ArmModel> arms;
  double xi = 0.5;  // good-arm threshold, strictly inside (0,1)
};

BanditInstance make_instance(std::vector<ArmModel> arms, double xi);

struct LabelSets {
  std::vector<int> good;  // arms with mean > xi
  std::vector<int> bad;   // arms with mean <= xi
};

LabelSets true_labels(const BanditInstance& instance);

}  // namespace gai
