#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qjunta/boolean_function.hpp"
#include "qjunta/distribution.hpp"
#include "qjunta/oracles.hpp"
#include "qjunta/random.hpp"
#include "qjunta/tester.hpp"

namespace qjunta {

enum class FixtureFamily {
  junta,            // random k-junta
  parity,           // parity of k+1 random variables, uniform D
  random_function,  // uniform random f, uniform D, resampled until eps-far
  planted,          // random f, D uniform on a random subcube, resampled until eps-far
  point_mass,       // random f, D a point mass
};

enum class DistributionKind { uniform, sparse };

std::string_view to_string(FixtureFamily f) noexcept;
std::string_view to_string(DistributionKind d) noexcept;
FixtureFamily parse_family(std::string_view text);
DistributionKind parse_distribution_kind(std::string_view text);

struct FixtureSpec {
  FixtureFamily family = FixtureFamily::junta;
  /// Only used by the junta family; far families fix their own D.
  DistributionKind distribution = DistributionKind::uniform;
  int support_size = 32;
  /// Draw a fresh fixture for every trial instead of one shared fixture.
  bool per_trial = false;
};

struct ExperimentConfig {
  int n = 8;
  int k = 2;
  double eps = 0.1;
  int trials = 100;
  std::uint64_t master_seed = 0;
  Variant variant = Variant::classical;
  FixtureSpec fixture;

  /// Throws ValidationError unless 1 <= k < n <= kMaxVariables,
  /// 0 < eps <= 1, trials >= 1 and support_size >= 1.
  void validate() const;
};

struct Fixture {
  BooleanFunction function;
  Distribution distribution;
  std::optional<DistanceCertificate> certificate;
};

/// Uniform random k-subset J and uniform random inner table on it.
BooleanFunction gen_random_junta(int n, int k, RandomStream& rng);

/// `support_size` distinct uniform points with weights uniform in (0, 1].
Distribution gen_sparse_distribution(int n, int support_size, RandomStream& rng);

/// Retry budget for resampled far families.
inline constexpr int kFarFixtureRetries = 100;

/// A fixture certified eps-far from every k-junta by the exact oracle.
/// Throws CertificationError (carrying the best distance reached) when the
/// family cannot reach eps.
Fixture gen_far_fixture(int n, int k, double eps, RandomStream& rng, FixtureFamily family);

/// The fixture a config describes, drawn from `rng`.
Fixture make_fixture(const ExperimentConfig& config, RandomStream& rng);

struct CounterStats {
  std::uint64_t min = 0;
  double mean = 0.0;
  std::uint64_t max = 0;
};

struct TrialOutcome {
  Decision decision;
  QueryLedger ledger;
  int iterations;
  /// Iterations entered with |S| <= k, and those that raised 2|S| + |B|.
  int growth_opportunities;
  int growth_events;
};

/// Growth bookkeeping for one finished run.
std::pair<int, int> count_growth(const TesterState& final_state, int k);

struct TrialReport {
  int trials = 0;
  int rejections = 0;
  double acceptance_rate = 0.0;
  double rejection_rate = 0.0;
  /// 99% Wilson interval for the rejection rate.
  std::pair<double, double> confidence_interval{0.0, 1.0};
  CounterStats classical_queries;
  CounterStats classical_samples;
  CounterStats quantum_queries;
  CounterStats total_queries;
  CounterStats iterations;
  double potential_growth_rate = 0.0;
  std::uint64_t growth_opportunities = 0;
  std::optional<double> certified_distance;
  std::vector<TrialOutcome> outcomes;
};

inline constexpr double kWilsonZ99 = 2.576;

/// Wilson score interval; exact endpoints 0 and 1 at the boundaries.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials, double z);

/// Runs config.trials independent testers. Trial i uses stream
/// derive_seed(master_seed, i); fixtures come from a separate stream.
TrialReport run_trials(const ExperimentConfig& config);

}  // namespace qjunta
