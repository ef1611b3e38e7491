#include "gai/bench/validate.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "gai/bench/config.hpp"
#include "gai/engine.hpp"
#include "gai/eprocess.hpp"
#include "gai/labeling.hpp"
#include "gai/rng.hpp"

namespace gai::bench {

long long ville_crossing_count(int runs, int steps, double xi, double b,
                               double log_threshold, std::uint64_t master_seed, int jobs) {
  int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min(workers, runs));
  std::atomic<int> next{0};
  std::atomic<long long> crossings{0};
  auto worker = [&] {
    long long local = 0;
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= runs) break;
      RandomStream rng(derive_seed(master_seed, static_cast<std::uint64_t>(i)));
      EvidenceState ev;
      ev.schedule = LambdaSchedule{ScheduleKind::PredictablePlugin, b, xi, xi};
      for (int s = 0; s < steps; ++s) {
        update(ev, rng.uniform01() < xi ? 1.0 : 0.0);
        if (ev.log_e_minus >= log_threshold) {
          ++local;
          break;
        }
      }
    }
    crossings += local;
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return crossings.load();
}

double e_power_rate(double mu, double xi, double b, long long steps, bool oracle,
                    std::uint64_t seed) {
  RandomStream rng(seed);
  EvidenceState ev;
  ev.schedule.kind = oracle ? ScheduleKind::OracleFixed : ScheduleKind::PredictablePlugin;
  ev.schedule.b = b;
  ev.schedule.xi = xi;
  ev.schedule.oracle_mean = mu;
  for (long long s = 0; s < steps; ++s) update(ev, rng.uniform01() < mu ? 1.0 : 0.0);
  return ev.log_e_minus / static_cast<double>(steps);
}

CheckResult check_lambda_ranges() {
  RandomStream rng(20240817);
  int bad = 0;
  for (int i = 0; i < 200000; ++i) {
    const double mu = rng.uniform01();
    const double xi = 0.001 + 0.998 * rng.uniform01();
    const double b = 0.001 + 0.998 * rng.uniform01();
    const double lm = lambda_minus(mu, xi, b);
    const double lp = lambda_plus(mu, xi, b);
    if (!(lm >= 0.0 && lm <= b / xi)) ++bad;
    if (!(lp <= 0.0 && lp >= -b / (1.0 - xi))) ++bad;
    // Each betting factor stays strictly positive for any reward in [0,1].
    if (!(1.0 + lm * (0.0 - xi) >= 1.0 - b - 1e-12)) ++bad;
    if (!(1.0 + lp * (1.0 - xi) >= 1.0 - b - 1e-12)) ++bad;
  }
  std::ostringstream d;
  d << bad << " violations over 200000 random (mu,xi,b) triples";
  return {"lambda_clamp_ranges", bad == 0, d.str()};
}

CheckResult check_log_domain_fidelity() {
  RandomStream rng(7151);
  double worst = 0.0;
  for (int rep = 0; rep < 2000; ++rep) {
    const double xi = 0.05 + 0.9 * rng.uniform01();
    EvidenceState ev;
    ev.schedule = LambdaSchedule{ScheduleKind::PredictablePlugin, 0.98, xi, xi};
    double prod_minus = 1.0, prod_plus = 1.0;
    const int len = 1 + static_cast<int>(rng.uniform01() * 30);
    for (int i = 0; i < len; ++i) {
      const double mu_before = ev.mean();
      const double lm = lambda_minus(mu_before, xi, 0.98);
      const double lp = lambda_plus(mu_before, xi, 0.98);
      const double x = rng.uniform01();
      prod_minus *= 1.0 + lm * (x - xi);
      prod_plus *= 1.0 + lp * (x - xi);
      update(ev, x);
    }
    worst = std::max(worst, std::abs(std::exp(ev.log_e_minus) / prod_minus - 1.0));
    worst = std::max(worst, std::abs(std::exp(ev.log_e_plus) / prod_plus - 1.0));
  }
  std::ostringstream d;
  d << "worst relative error vs literal product: " << worst;
  return {"log_domain_fidelity", worst <= 1e-10, d.str()};
}

CheckResult check_ville_null(int jobs) {
  // 10^4 independent null runs of 10^4 steps at threshold 1/delta, delta=0.05.
  // Binomial(10^4, 0.05) stays <= 551 with 99% confidence, and Ville says the
  // true crossing rate is at most 0.05.
  const long long crossings =
      ville_crossing_count(10000, 10000, 0.5, 0.98, std::log(1.0 / 0.05), 990105, jobs);
  std::ostringstream d;
  d << crossings << " of 10000 null runs crossed 1/delta (allowed up to 551)";
  return {"ville_null_supermartingale", crossings <= 551, d.str()};
}

CheckResult check_lemma_floor(int jobs) {
  CellConfig cell;
  cell.name = "floor";
  cell.preset = "synthetic-k4";
  auto p = preset_spec(cell.preset);
  cell.means = p.means;
  cell.xi = p.xi;
  cell.policy = PolicyKind::Moss;
  cell.stopping = StoppingKind::EProcess;
  cell.replications = 200;
  cell.master_seed = 424242;
  auto traces = run_batch(to_engine_config(cell), cell.master_seed, cell.replications, jobs);
  const int floor = min_pulls_to_label(4, cell.delta, cell.b, cell.xi);
  int violations = 0;
  long long labeled = 0;
  for (const auto& t : traces)
    for (size_t a = 0; a < t.labels.size(); ++a)
      if (t.labels[a] != ArmLabel::Unlabeled) {
        ++labeled;
        if (t.pulls_at_label[a] < floor) ++violations;
      }
  std::ostringstream d;
  d << violations << " of " << labeled << " labels below the " << floor << "-pull floor";
  return {"min_pulls_floor", violations == 0, d.str()};
}

std::vector<CheckResult> run_all_checks(int jobs) {
  return {check_lambda_ranges(), check_log_domain_fidelity(), check_ville_null(jobs),
          check_lemma_floor(jobs)};
}

}  // namespace gai::bench
