#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gai/labeling.hpp"

using namespace gai;

TEST_CASE("confidence radius frozen value") {
  CHECK(confidence_radius(100, 4, 0.05) == doctest::Approx(0.2736664152555987).epsilon(1e-14));
  CHECK_THROWS_AS(confidence_radius(0, 4, 0.05), std::invalid_argument);
}

TEST_CASE("confidence-bound judging") {
  StoppingRule cb{StoppingKind::ConfidenceBound, 4, 0.05, 0.5, 0.98};
  // U(100) ~ 0.27367: 0.8 clears it, 0.77 does not.
  CHECK(judge(cb, 100, 0.8, nullptr) == TestDecision::RejectBadNull);
  CHECK(judge(cb, 100, 0.77, nullptr) == TestDecision::None);
  CHECK(judge(cb, 100, 0.2, nullptr) == TestDecision::RejectGoodNull);
  CHECK(judge(cb, 100, 0.23, nullptr) == TestDecision::None);
  CHECK(judge(cb, 100, 0.5, nullptr) == TestDecision::None);  // mu_hat == xi
  // At N = 1 the radius exceeds 0.83, so nothing can be labeled around xi=0.5.
  CHECK(judge(cb, 1, 1.0, nullptr) == TestDecision::None);
  CHECK(judge(cb, 1, 0.0, nullptr) == TestDecision::None);
  CHECK_THROWS_AS(judge(cb, 0, 0.5, nullptr), std::invalid_argument);
}

TEST_CASE("e-process judging delegates to the evidence") {
  StoppingRule ep{StoppingKind::EProcess, 4, 0.05, 0.5, 0.98};
  EvidenceState ev;
  ev.schedule.xi = 0.5;
  CHECK(judge(ep, 1, 0.5, &ev) == TestDecision::None);
  ev.log_e_minus = std::log(200.0);
  CHECK(judge(ep, 1, 0.5, &ev) == TestDecision::RejectBadNull);
  CHECK_THROWS_AS(judge(ep, 1, 0.5, nullptr), std::invalid_argument);

  StoppingRule oep{StoppingKind::OracleEProcess, 4, 0.05, 0.5, 0.98};
  ev.log_e_minus = 0.0;
  ev.log_e_plus = std::log(200.0);
  CHECK(judge(oep, 1, 0.5, &ev) == TestDecision::RejectGoodNull);
}

TEST_CASE("minimum pulls before an e-process label") {
  CHECK(min_pulls_to_label(4, 0.05, 0.98, 0.5) == 8);   // log160/log1.98 ~ 7.43
  CHECK(min_pulls_to_label(5, 0.05, 0.98, 0.5) == 8);   // log200/log1.98 ~ 7.76
  CHECK(min_pulls_to_label(1, 0.05, 0.98, 0.5) == 6);   // log40/log1.98 ~ 5.40
  CHECK(min_pulls_to_label(4, 8.0, 0.98, 0.5) == 1);    // log(2K/delta) = 0, clamped
  // nonincreasing in b
  int prev = min_pulls_to_label(4, 0.05, 0.1, 0.5);
  for (double b = 0.2; b < 1.0; b += 0.1) {
    const int cur = min_pulls_to_label(4, 0.05, b, 0.5);
    CHECK(cur <= prev);
    prev = cur;
  }
  // asymmetric xi uses the worse of the two one-sided factors
  CHECK(min_pulls_to_label(4, 0.05, 0.98, 0.2) ==
        static_cast<int>(std::ceil(std::log(160.0) / std::log(1.0 + 0.98 * 4.0))));
}
