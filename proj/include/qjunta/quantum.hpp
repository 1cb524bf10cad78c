#pragma once

#include <optional>
#include <vector>

#include "qjunta/boolean_function.hpp"
#include "qjunta/distribution.hpp"
#include "qjunta/oracles.hpp"
#include "qjunta/random.hpp"

namespace qjunta {

/// Exact probability that one GenerateCube attempt succeeds:
///   Pr_{x~D, T subset of [n]\excluded}[f(x) != f(x^T)].
///
/// For fixed x the flips x^T sweep the coset of points sharing x's bits on
/// `excluded`, so the probability reduces to per-coset counts of ones.
double attempt_success_probability(const BooleanFunction& f, const Distribution& d, IndexSet excluded);

namespace quantum {

/// Fourier sampling of f restricted to `cube`: returns T subset of I(B) with
/// probability fhat(T)^2. Charges one quantum query.
///
/// Throws ValidationError for a degenerate cube (I(B) empty) or a dimension
/// mismatch, ResourceCapError above kMaxCubeDimension.
IndexSet fourier_sample(MembershipOracle& oracle, const Cube& cube, RandomStream& rng);

/// Total oracle executions allowed per amplified GenerateCube call:
/// ceil(4 / sqrt(eps)).
int amplification_budget(double eps);

/// Grover iteration counts of the successive stages. The first stage runs no
/// iterations (measure the prepared state directly); stage j >= 1 runs
/// ceil(2^((j-1)/2)) iterations. Each stage is charged max(r, 1) and the
/// final stage is truncated so the charges sum to amplification_budget(eps).
std::vector<int> amplification_schedule(double eps);

/// Oracle executions charged for a stage with `iterations` Grover steps.
constexpr int stage_charge(int iterations) noexcept { return iterations > 0 ? iterations : 1; }

/// Probability that some stage of the schedule succeeds when one classical
/// attempt succeeds with probability p. A stage with r iterations succeeds
/// with probability sin^2((2r+1) asin(sqrt p)).
double amplified_success_probability(double p, double eps);

/// GenerateCube with amplitude amplification over the success event of one
/// classical attempt. On success returns a relevant cube (x, x^T) with
/// T disjoint from `excluded`, drawn from the distribution of successful
/// attempts. Each stage's iterations are charged as quantum queries; no
/// classical samples or queries are charged.
std::optional<Cube> amplified_generate_cube(MembershipOracle& oracle, SampleOracle& sampler,
                                            IndexSet excluded, double eps, RandomStream& rng);

}  // namespace quantum
}  // namespace qjunta
