#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "qjunta/bits.hpp"
#include "qjunta/boolean_function.hpp"
#include "qjunta/random.hpp"

namespace qjunta {

struct SupportPoint {
  std::uint32_t point;
  double weight;

  friend bool operator==(const SupportPoint&, const SupportPoint&) = default;
};

/// An explicit probability distribution over {0,1}^n.
///
/// Only points of positive probability are stored, sorted by integer value
/// and normalized to sum to one.
class Distribution {
 public:
  /// Dense weights over all 2^n points.
  static Distribution dense(int n, std::span<const double> weights);
  /// Weights on an explicit support. Repeated points are merged.
  static Distribution sparse(int n, std::span<const SupportPoint> weights);
  static Distribution uniform(int n);
  static Distribution point_mass(const BitString& x);

  int dimension() const noexcept { return n_; }
  std::span<const SupportPoint> support() const noexcept { return support_; }

  /// Pr[x]; zero off the support.
  double probability(std::uint32_t x) const noexcept;

  /// Draws a point; not counted. Testers must go through SampleOracle.
  BitString draw(RandomStream& rng) const;

 private:
  Distribution(int n, std::vector<SupportPoint> support);

  int n_;
  std::vector<SupportPoint> support_;
  std::discrete_distribution<std::size_t>::param_type sampler_;
};

Distribution make_distribution(int n, std::span<const double> dense_weights);
Distribution make_distribution(int n, std::span<const SupportPoint> sparse_weights);

/// Pr_{x~D}[f(x) != g(x)].
double disagreement_probability(const BooleanFunction& f, const BooleanFunction& g,
                                const Distribution& d);

struct JuntaFit {
  BooleanFunction junta;
  double error;
};

/// The junta on `variables` closest to f under D: weighted majority per
/// projection class, ties toward output 0.
JuntaFit best_junta_on(const BooleanFunction& f, const Distribution& d, IndexSet variables);

struct DistanceCertificate {
  double distance;
  IndexSet best_subset;
  BooleanFunction best_junta;
};

/// Work cap on C(n,k) * 2^n for the exhaustive distance oracle.
inline constexpr double kDistanceWorkCap = 1e9;

/// Exact distance from f to the nearest k-junta under D, minimizing over all
/// |J| = min(k, n) variable sets. Among minimizers the lexicographically
/// smallest J wins. Throws ResourceCapError above kDistanceWorkCap.
DistanceCertificate distance_to_k_junta(const BooleanFunction& f, const Distribution& d, int k);

/// Binomial coefficient as a double (exact for the sizes used here).
double binomial(int n, int k) noexcept;

}  // namespace qjunta
