#include "qjunta/tester.hpp"

#include <string>

#include "qjunta/errors.hpp"
#include "qjunta/quantum.hpp"

namespace qjunta {

std::string_view to_string(Variant v) noexcept {
  return v == Variant::classical ? "classical" : "amplified";
}

std::string_view to_string(Action a) noexcept {
  switch (a) {
    case Action::generated_cube: return "generated_cube";
    case Action::generate_failed: return "generate_failed";
    case Action::fourier_nonempty: return "fourier_nonempty";
    case Action::split_toward_x: return "split_toward_x";
    case Action::split_toward_y: return "split_toward_y";
    case Action::no_progress: return "no_progress";
  }
  return "unknown";
}

std::string_view to_string(Decision d) noexcept { return d == Decision::accept ? "accept" : "reject"; }

Variant parse_variant(std::string_view text) {
  if (text == "classical") return Variant::classical;
  if (text == "amplified") return Variant::amplified;
  throw ValidationError("unknown variant '" + std::string(text) + "'");
}

std::optional<TrackedCube> generate_tracked_cube(MembershipOracle& oracle, SampleOracle& sampler,
                                                 IndexSet excluded, double eps, RandomStream& rng) {
  const int attempts = attempt_budget(eps);
  const std::uint32_t free_mask = IndexSet::full(oracle.dimension()).mask() & ~excluded.mask();
  for (int a = 0; a < attempts; ++a) {
    const BitString x = sampler.draw(rng);
    const BitString y = flip(x, IndexSet(random_submask(rng, free_mask)));
    const bool fx = oracle.query(x);
    const bool fy = oracle.query(y);
    if (fx != fy) return TrackedCube{Cube(x, y), fx, fy};
  }
  return std::nullopt;
}

std::optional<Cube> generate_cube(MembershipOracle& oracle, SampleOracle& sampler, IndexSet excluded,
                                  double eps, RandomStream& rng) {
  auto tracked = generate_tracked_cube(oracle, sampler, excluded, eps, rng);
  if (!tracked) return std::nullopt;
  return tracked->cube;
}

namespace {

Action generate_step(TesterState& state, MembershipOracle& oracle, SampleOracle& sampler, double eps,
                     RandomStream& rng, Variant variant) {
  std::optional<TrackedCube> found;
  if (variant == Variant::classical) {
    found = generate_tracked_cube(oracle, sampler, state.relevant, eps, rng);
  } else if (auto cube = quantum::amplified_generate_cube(oracle, sampler, state.relevant, eps, rng)) {
    // The amplified cube is relevant by construction; one query fixes which
    // corner carries which value.
    const bool fx = oracle.query(cube->x());
    found = TrackedCube{*cube, fx, !fx};
  }
  if (!found) return Action::generate_failed;
  state.cubes.push_back(std::move(*found));
  return Action::generated_cube;
}

Action refine_step(TesterState& state, MembershipOracle& oracle, RandomStream& rng) {
  const TrackedCube current = state.cubes.front();
  const Cube& cube = current.cube;

  const IndexSet sampled = quantum::fourier_sample(oracle, cube, rng);
  if (!sampled.empty()) {
    state.cubes.pop_front();
    state.relevant = state.relevant | sampled;
    return Action::fourier_nonempty;
  }

  const IndexSet t(random_submask(rng, cube.free_variables().mask()));
  const BitString z = flip(cube.x(), t);
  const BitString w = flip(cube.y(), t);
  const bool fz = oracle.query(z);
  const bool fw = oracle.query(w);
  if (fz != fw) return Action::no_progress;

  state.cubes.pop_front();
  if (fz == current.value_y) {
    state.cubes.push_back({Cube(cube.x(), z), current.value_x, fz});
    state.cubes.push_back({Cube(cube.x(), w), current.value_x, fw});
    return Action::split_toward_x;
  }
  // fz == fw == value_x, since the corner values differ.
  state.cubes.push_back({Cube(z, cube.y()), fz, current.value_y});
  state.cubes.push_back({Cube(w, cube.y()), fw, current.value_y});
  return Action::split_toward_y;
}

}  // namespace

TesterState step(TesterState state, MembershipOracle& oracle, SampleOracle& sampler, int k, double eps,
                 RandomStream& rng, Variant variant) {
  check_eps(eps);
  if (state.progress() > k) {
    throw ValidationError("step called with |S| + |B| > k");
  }
  const Action action = state.cubes.empty() ? generate_step(state, oracle, sampler, eps, rng, variant)
                                            : refine_step(state, oracle, rng);
  ++state.iteration;
  state.trace.push_back({state.iteration, action, state.potential(), state.relevant.size(),
                         static_cast<int>(state.cubes.size())});
  return state;
}

Verdict run_tester(MembershipOracle& oracle, SampleOracle& sampler, int k, double eps, RandomStream& rng,
                   Variant variant, const TesterOptions& options) {
  check_eps(eps);
  if (oracle.dimension() != sampler.dimension()) {
    throw ValidationError("function and distribution dimensions differ");
  }
  if (k < 1 || k >= oracle.dimension()) {
    throw ValidationError("k must satisfy 1 <= k < n, got k=" + std::to_string(k) +
                          " n=" + std::to_string(oracle.dimension()));
  }
  if (options.iteration_factor < 1) throw ValidationError("iteration factor must be positive");

  TesterState state;
  const int cap = options.iteration_factor * k;
  while (state.progress() <= k && state.iteration < cap) {
    state = step(std::move(state), oracle, sampler, k, eps, rng, variant);
    if (options.on_step) options.on_step(state);
  }
  const Decision decision = state.progress() > k ? Decision::reject : Decision::accept;
  return {decision, oracle.ledger(), std::move(state)};
}

bool check_invariants(const TesterState& state, const BooleanFunction& f) {
  const IndexSet all = IndexSet::full(f.dimension());
  if (!state.relevant.subset_of(all)) return false;
  if (!state.relevant.subset_of(relevant_variables(f))) return false;
  IndexSet used = state.relevant;
  for (const auto& tracked : state.cubes) {
    const Cube& cube = tracked.cube;
    if (cube.ambient_dimension() != f.dimension()) return false;
    const IndexSet free = cube.free_variables();
    if (free.empty() || free.intersects(used)) return false;
    used = used | free;
    if (f(cube.x()) != tracked.value_x || f(cube.y()) != tracked.value_y) return false;
    if (tracked.value_x == tracked.value_y) return false;
  }
  return true;
}

}  // namespace qjunta
