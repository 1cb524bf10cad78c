#include "qjunta/harness.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qjunta/errors.hpp"

namespace qjunta {

std::string_view to_string(FixtureFamily f) noexcept {
  switch (f) {
    case FixtureFamily::junta: return "junta";
    case FixtureFamily::parity: return "parity";
    case FixtureFamily::random_function: return "random_function";
    case FixtureFamily::planted: return "planted";
    case FixtureFamily::point_mass: return "point_mass";
  }
  return "unknown";
}

std::string_view to_string(DistributionKind d) noexcept {
  return d == DistributionKind::uniform ? "uniform" : "sparse";
}

FixtureFamily parse_family(std::string_view text) {
  for (auto f : {FixtureFamily::junta, FixtureFamily::parity, FixtureFamily::random_function,
                 FixtureFamily::planted, FixtureFamily::point_mass}) {
    if (text == to_string(f)) return f;
  }
  throw ValidationError("unknown fixture family '" + std::string(text) + "'");
}

DistributionKind parse_distribution_kind(std::string_view text) {
  if (text == "uniform") return DistributionKind::uniform;
  if (text == "sparse") return DistributionKind::sparse;
  throw ValidationError("unknown distribution kind '" + std::string(text) + "'");
}

void ExperimentConfig::validate() const {
  if (n < 2 || n > kMaxVariables) {
    throw ValidationError("n must lie in 2.." + std::to_string(kMaxVariables));
  }
  if (k < 1 || k >= n) throw ValidationError("k must satisfy 1 <= k < n");
  check_eps(eps);
  if (trials < 1) throw ValidationError("trials must be at least 1");
  if (fixture.support_size < 1) throw ValidationError("support_size must be at least 1");
}

namespace {

std::vector<std::uint8_t> random_table(std::size_t size, RandomStream& rng) {
  std::vector<std::uint8_t> table(size);
  for (auto& v : table) v = static_cast<std::uint8_t>(rng() & 1u);
  return table;
}

IndexSet random_subset(int n, int size, RandomStream& rng) {
  std::vector<int> vars(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vars[static_cast<std::size_t>(i)] = i + 1;
  // Partial Fisher-Yates.
  for (int i = 0; i < size; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(vars[static_cast<std::size_t>(i)], vars[static_cast<std::size_t>(pick(rng))]);
  }
  return IndexSet::of(std::span<const int>(vars.data(), static_cast<std::size_t>(size)));
}

BooleanFunction random_function(int n, RandomStream& rng) {
  return BooleanFunction(n, random_table(std::size_t{1} << n, rng));
}

Distribution planted_distribution(int n, int k, RandomStream& rng) {
  const int free_count = std::min(n, std::max(k + 2, n / 2));
  const IndexSet free = random_subset(n, free_count, rng);
  const std::uint32_t base = static_cast<std::uint32_t>(rng()) & low_mask(n) & ~free.mask();
  std::vector<SupportPoint> support;
  support.reserve(std::size_t{1} << free_count);
  for (std::uint32_t t = 0; t < (std::uint32_t{1} << free_count); ++t) {
    support.push_back({base | deposit_bits(t, free), 1.0});
  }
  return Distribution::sparse(n, support);
}

CounterStats stats_of(const std::vector<std::uint64_t>& values) {
  CounterStats s;
  if (values.empty()) return s;
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  long double total = 0;
  for (auto v : values) total += v;
  s.mean = static_cast<double>(total / values.size());
  return s;
}

}  // namespace

BooleanFunction gen_random_junta(int n, int k, RandomStream& rng) {
  check_dimension(n);
  if (k < 0 || k > n) throw ValidationError("junta size k must satisfy 0 <= k <= n");
  const IndexSet vars = random_subset(n, k, rng);
  return BooleanFunction::from_junta(n, vars, random_table(std::size_t{1} << k, rng));
}

Distribution gen_sparse_distribution(int n, int support_size, RandomStream& rng) {
  check_dimension(n);
  const std::uint64_t space = std::uint64_t{1} << n;
  const auto size = static_cast<std::size_t>(std::min<std::uint64_t>(space, std::max(1, support_size)));
  std::vector<std::uint32_t> points;
  points.reserve(size);
  std::uniform_int_distribution<std::uint32_t> pick(0, low_mask(n));
  while (points.size() < size) {
    const auto x = pick(rng);
    if (std::find(points.begin(), points.end(), x) == points.end()) points.push_back(x);
  }
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  std::vector<SupportPoint> support;
  support.reserve(size);
  for (auto x : points) support.push_back({x, 1.0 - weight(rng)});
  return Distribution::sparse(n, support);
}

Fixture gen_far_fixture(int n, int k, double eps, RandomStream& rng, FixtureFamily family) {
  check_dimension(n);
  check_eps(eps);
  if (k < 0 || k >= n) throw ValidationError("far fixtures need 0 <= k < n");

  switch (family) {
    case FixtureFamily::parity: {
      const auto f = BooleanFunction::parity(n, random_subset(n, k + 1, rng));
      auto d = Distribution::uniform(n);
      auto cert = distance_to_k_junta(f, d, k);
      if (cert.distance < eps) {
        throw CertificationError("parity fixture reaches distance " + std::to_string(cert.distance) +
                                     " < eps " + std::to_string(eps),
                                 cert.distance);
      }
      return {f, std::move(d), std::move(cert)};
    }
    case FixtureFamily::random_function:
    case FixtureFamily::planted: {
      double best = 0.0;
      for (int attempt = 0; attempt < kFarFixtureRetries; ++attempt) {
        auto f = random_function(n, rng);
        auto d = family == FixtureFamily::planted ? planted_distribution(n, k, rng) : Distribution::uniform(n);
        auto cert = distance_to_k_junta(f, d, k);
        if (cert.distance >= eps) return {std::move(f), std::move(d), std::move(cert)};
        best = std::max(best, cert.distance);
      }
      throw CertificationError(std::string(to_string(family)) + " fixture reached only distance " +
                                   std::to_string(best) + " < eps " + std::to_string(eps),
                               best);
    }
    case FixtureFamily::junta:
    case FixtureFamily::point_mass:
      break;
  }
  throw ValidationError(std::string(to_string(family)) + " is not a far-fixture family");
}

Fixture make_fixture(const ExperimentConfig& config, RandomStream& rng) {
  const auto& spec = config.fixture;
  switch (spec.family) {
    case FixtureFamily::junta: {
      auto f = gen_random_junta(config.n, config.k, rng);
      auto d = spec.distribution == DistributionKind::uniform
                   ? Distribution::uniform(config.n)
                   : gen_sparse_distribution(config.n, spec.support_size, rng);
      return {std::move(f), std::move(d), std::nullopt};
    }
    case FixtureFamily::point_mass: {
      auto f = random_function(config.n, rng);
      const BitString x(config.n, static_cast<std::uint32_t>(rng()) & low_mask(config.n));
      return {std::move(f), Distribution::point_mass(x), std::nullopt};
    }
    default:
      return gen_far_fixture(config.n, config.k, config.eps, rng, spec.family);
  }
}

std::pair<int, int> count_growth(const TesterState& final_state, int k) {
  int opportunities = 0;
  int events = 0;
  int prev_potential = 0;
  int prev_relevant = 0;
  for (const auto& r : final_state.trace) {
    if (prev_relevant <= k) {
      ++opportunities;
      if (r.potential > prev_potential) ++events;
    }
    prev_potential = r.potential;
    prev_relevant = r.relevant_count;
  }
  return {opportunities, events};
}

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw ValidationError("Wilson interval needs at least one trial");
  if (successes > trials) throw ValidationError("successes exceed trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  const double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double hi = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {lo, hi};
}

TrialReport run_trials(const ExperimentConfig& config) {
  config.validate();

  std::optional<Fixture> shared;
  if (!config.fixture.per_trial) {
    auto fixture_rng = make_stream(config.master_seed, ~std::uint64_t{0});
    shared = make_fixture(config, fixture_rng);
  }

  TrialReport report;
  report.trials = config.trials;
  if (shared && shared->certificate) report.certified_distance = shared->certificate->distance;
  report.outcomes.reserve(static_cast<std::size_t>(config.trials));

  std::uint64_t growth_events = 0;
  for (int i = 0; i < config.trials; ++i) {
    auto rng = make_stream(config.master_seed, static_cast<std::uint64_t>(i));
    std::optional<Fixture> own;
    if (!shared) own = make_fixture(config, rng);
    const Fixture& fixture = shared ? *shared : *own;

    QueryLedger ledger;
    MembershipOracle oracle(fixture.function, ledger);
    SampleOracle sampler(fixture.distribution, ledger);
    const auto verdict = run_tester(oracle, sampler, config.k, config.eps, rng, config.variant);
    const auto [opportunities, events] = count_growth(verdict.final_state, config.k);
    report.outcomes.push_back(
        {verdict.decision, verdict.ledger, verdict.final_state.iteration, opportunities, events});
    if (verdict.decision == Decision::reject) ++report.rejections;
    report.growth_opportunities += static_cast<std::uint64_t>(opportunities);
    growth_events += static_cast<std::uint64_t>(events);
  }

  report.rejection_rate = static_cast<double>(report.rejections) / config.trials;
  report.acceptance_rate = static_cast<double>(config.trials - report.rejections) / config.trials;
  report.confidence_interval = wilson_interval(static_cast<std::uint64_t>(report.rejections),
                                               static_cast<std::uint64_t>(config.trials), kWilsonZ99);
  report.potential_growth_rate =
      report.growth_opportunities == 0 ? 0.0
                                       : static_cast<double>(growth_events) / report.growth_opportunities;

  std::vector<std::uint64_t> cq, cs, qq, tot, it;
  for (const auto& o : report.outcomes) {
    cq.push_back(o.ledger.classical_queries);
    cs.push_back(o.ledger.classical_samples);
    qq.push_back(o.ledger.quantum_queries);
    tot.push_back(o.ledger.total());
    it.push_back(static_cast<std::uint64_t>(o.iterations));
  }
  report.classical_queries = stats_of(cq);
  report.classical_samples = stats_of(cs);
  report.quantum_queries = stats_of(qq);
  report.total_queries = stats_of(tot);
  report.iterations = stats_of(it);
  return report;
}

}  // namespace qjunta
