#pragma once

#include <deque>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "qjunta/boolean_function.hpp"
#include "qjunta/oracles.hpp"
#include "qjunta/random.hpp"

namespace qjunta {

enum class Variant { classical, amplified };

enum class Action {
  generated_cube,
  generate_failed,
  fourier_nonempty,
  split_toward_x,
  split_toward_y,
  no_progress,
};

enum class Decision { accept, reject };

std::string_view to_string(Variant v) noexcept;
std::string_view to_string(Action a) noexcept;
std::string_view to_string(Decision d) noexcept;
Variant parse_variant(std::string_view text);

/// A relevant cube together with the already-queried corner values.
struct TrackedCube {
  Cube cube;
  bool value_x;
  bool value_y;

  friend bool operator==(const TrackedCube&, const TrackedCube&) = default;
};

struct TraceRecord {
  int iteration;
  Action action;
  /// 2|S| + |B| after the iteration.
  int potential;
  int relevant_count;
  int cube_count;
};

/// (S, B) plus bookkeeping. Cubes are processed in FIFO order.
struct TesterState {
  IndexSet relevant;
  std::deque<TrackedCube> cubes;
  int iteration = 0;
  std::vector<TraceRecord> trace;

  int potential() const noexcept { return 2 * relevant.size() + static_cast<int>(cubes.size()); }
  int progress() const noexcept { return relevant.size() + static_cast<int>(cubes.size()); }
};

struct Verdict {
  Decision decision;
  QueryLedger ledger;
  TesterState final_state;
};

/// Classical GenerateCube: up to ceil(2/eps) attempts, each drawing x ~ D and
/// a uniform T subset of [n]\excluded, querying f(x) and f(x^T). Returns the
/// first relevant (x, x^T).
std::optional<Cube> generate_cube(MembershipOracle& oracle, SampleOracle& sampler, IndexSet excluded,
                                  double eps, RandomStream& rng);

/// As generate_cube, keeping the corner values it queried.
std::optional<TrackedCube> generate_tracked_cube(MembershipOracle& oracle, SampleOracle& sampler,
                                                 IndexSet excluded, double eps, RandomStream& rng);

/// One iteration of the main loop. Requires |S| + |B| <= k; the state must
/// satisfy the tester invariants.
TesterState step(TesterState state, MembershipOracle& oracle, SampleOracle& sampler, int k, double eps,
                 RandomStream& rng, Variant variant);

struct TesterOptions {
  /// Iteration cap is iteration_factor * k. Only experiments change it.
  int iteration_factor = 18;
  /// Called with the state after every iteration.
  std::function<void(const TesterState&)> on_step;
};

/// The full tester. Requires 1 <= k < n and 0 < eps <= 1. Rejects iff
/// |S| + |B| > k at loop exit.
Verdict run_tester(MembershipOracle& oracle, SampleOracle& sampler, int k, double eps, RandomStream& rng,
                   Variant variant, const TesterOptions& options = {});

/// White-box check of the state invariants against the truth table: S and
/// every I(B) are pairwise disjoint, every I(B) is nonempty, every cube is
/// relevant, recorded corner values are correct, and every variable of S is
/// relevant for f.
bool check_invariants(const TesterState& state, const BooleanFunction& f);

}  // namespace qjunta
