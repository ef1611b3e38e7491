#include "gai/engine.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace gai {

namespace {

struct RunState {
  const EngineConfig& cfg;
  RandomStream rng;
  PolicyState pol;
  std::vector<EvidenceState> evidence;
  StoppingRule rule;
  std::vector<int> unlabeled;
  RunTrace trace;
  long long t = 0;  // completed rounds
  int good_count = 0;
  int m = 0;
  double mu_max = 0.0;
  double pseudo_regret = 0.0;
  bool use_evidence = false;

  RunState(const EngineConfig& config, std::uint64_t seed)
      : cfg(config), rng(seed), pol() {
    const int K = static_cast<int>(cfg.instance.arms.size());
    m = cfg.m <= 0 ? K : cfg.m;
    if (m > K) throw std::invalid_argument("engine: m exceeds the number of arms");
    if (cfg.max_rounds < K) throw std::invalid_argument("engine: max_rounds below K");

    std::vector<double> means(K);
    for (int a = 0; a < K; ++a) means[a] = cfg.instance.arms[a].mean;
    mu_max = *std::max_element(means.begin(), means.end());

    pol = make_policy(cfg.policy, K, cfg.alpha, cfg.instance.xi,
                      cfg.policy == PolicyKind::Oracle ? means : std::vector<double>{});

    rule = StoppingRule{cfg.stopping, K, cfg.delta, cfg.instance.xi, cfg.b};
    use_evidence = cfg.stopping != StoppingKind::ConfidenceBound;
    evidence.resize(K);
    for (int a = 0; a < K; ++a) {
      auto& sch = evidence[a].schedule;
      sch.kind = cfg.stopping == StoppingKind::OracleEProcess ? ScheduleKind::OracleFixed
                                                              : ScheduleKind::PredictablePlugin;
      sch.b = cfg.b;
      sch.xi = cfg.instance.xi;
      sch.oracle_mean = means[a];
    }

    unlabeled.resize(K);
    for (int a = 0; a < K; ++a) unlabeled[a] = a;

    trace.seed = seed;
    trace.labels.assign(K, ArmLabel::Unlabeled);
    trace.tau_arm.assign(K, 0);
    trace.pulls_at_label.assign(K, 0);
  }

  // Pull arm a, fold the observation into evidence/statistics, judge, label.
  // Returns true when the run should stop (m good labels or no arm left).
  bool pull(int a) {
    const double x = sample(cfg.instance.arms[a], rng);
    ++t;
    trace.cumulative_reward += x;
    if (!trace.has_tau_g1()) pseudo_regret += mu_max - cfg.instance.arms[a].mean;
    if (cfg.log_actions) {
      trace.actions.push_back(a);
      trace.rewards.push_back(x);
    }
    if (use_evidence) update(evidence[a], x);
    observe(pol, a, x);

    const TestDecision d =
        judge(rule, pol.pulls[a], pol.mean(a), use_evidence ? &evidence[a] : nullptr);
    if (d == TestDecision::None) return false;

    trace.labels[a] = d == TestDecision::RejectBadNull ? ArmLabel::Good : ArmLabel::Bad;
    trace.tau_arm[a] = t;
    trace.pulls_at_label[a] = pol.pulls[a];
    unlabeled.erase(std::find(unlabeled.begin(), unlabeled.end(), a));
    if (d == TestDecision::RejectBadNull) {
      ++good_count;
      trace.tau_good.push_back(t);
      if (trace.tau_good.size() == 1) trace.regret_at_tau_g1 = pseudo_regret;
    }
    if (cfg.reset_variant) {
      for (int u : unlabeled) {
        reset(evidence[u]);
        reset_arm(pol, u);
      }
    }
    return good_count >= m || unlabeled.empty();
  }
};

}  // namespace

RunTrace run(const EngineConfig& config, std::uint64_t seed) {
  RunState s(config, seed);
  bool done = false;

  if (config.policy != PolicyKind::Oracle) {
    // Initialization sweep in arm order; labels can already fire here.
    const int K = static_cast<int>(config.instance.arms.size());
    for (int a = 0; a < K && !done; ++a) done = s.pull(a);
  }
  while (!done && s.t < config.max_rounds) {
    done = s.pull(select(s.pol, s.unlabeled));
  }

  s.trace.tau_stop = s.t;
  s.trace.rounds = s.t;
  s.trace.truncated = !done;
  for (int a = 0; a < static_cast<int>(config.instance.arms.size()); ++a) {
    const bool truly_good = config.instance.arms[a].mean > config.instance.xi;
    if ((s.trace.labels[a] == ArmLabel::Good && !truly_good) ||
        (s.trace.labels[a] == ArmLabel::Bad && truly_good))
      s.trace.mislabeled = true;
  }
  return s.trace;
}

std::vector<RunTrace> run_batch(const EngineConfig& config, std::uint64_t master_seed,
                                int replications, int jobs) {
  if (replications < 1) throw std::invalid_argument("run_batch: replications must be >= 1");
  std::vector<RunTrace> out(replications);
  int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min(workers, replications));

  if (workers == 1) {
    for (int i = 0; i < replications; ++i)
      out[i] = run(config, derive_seed(master_seed, static_cast<std::uint64_t>(i)));
    return out;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= replications) return;
      out[i] = run(config, derive_seed(master_seed, static_cast<std::uint64_t>(i)));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace gai
