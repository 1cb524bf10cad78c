#include "qjunta/quantum.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qjunta/errors.hpp"

namespace qjunta {

double attempt_success_probability(const BooleanFunction& f, const Distribution& d, IndexSet excluded) {
  if (f.dimension() != d.dimension()) {
    throw ValidationError("function and distribution dimensions differ");
  }
  if (excluded.max_variable() > f.dimension()) {
    throw ValidationError("excluded set exceeds dimension");
  }
  const int free_count = f.dimension() - excluded.size();
  std::vector<std::uint32_t> ones(std::size_t{1} << excluded.size(), 0);
  const auto size = static_cast<std::uint32_t>(f.size());
  for (std::uint32_t x = 0; x < size; ++x) {
    if (f.at(x)) ++ones[extract_bits(x, excluded)];
  }
  const double coset = std::ldexp(1.0, free_count);
  double p = 0.0;
  for (const auto& s : d.support()) {
    const double same_class_ones = ones[extract_bits(s.point, excluded)];
    const double differing = f.at(s.point) ? coset - same_class_ones : same_class_ones;
    p += s.weight * differing;
  }
  return p / coset;
}

namespace quantum {

IndexSet fourier_sample(MembershipOracle& oracle, const Cube& cube, RandomStream& rng) {
  if (cube.free_variables().empty()) {
    throw ValidationError("Fourier sampling needs a cube with nonempty I(B)");
  }
  const auto spectrum = restricted_spectrum(*oracle.f_, cube);
  oracle.charge_quantum(1);

  // Inverse CDF over the exact integer weights |B|^2 fhat(S)^2.
  std::uniform_int_distribution<std::uint64_t> pick(0, spectrum.total_weight() - 1);
  std::uint64_t u = pick(rng);
  for (std::size_t j = 0; j < spectrum.size(); ++j) {
    const std::uint64_t w = spectrum.squared_weight_at(j);
    if (u < w) return spectrum.subset_at(j);
    u -= w;
  }
  // Unreachable: the weights sum to total_weight() exactly.
  throw Error("Fourier sampling weights do not sum to |B|^2");
}

int amplification_budget(double eps) {
  check_eps(eps);
  return static_cast<int>(std::ceil(4.0 / std::sqrt(eps) - 1e-9));
}

std::vector<int> amplification_schedule(double eps) {
  const int budget = amplification_budget(eps);
  std::vector<int> stages{0};
  int charged = stage_charge(0);
  for (int j = 0; charged < budget; ++j) {
    const int r = std::min(static_cast<int>(std::ceil(std::pow(2.0, j / 2.0) - 1e-12)), budget - charged);
    stages.push_back(r);
    charged += stage_charge(r);
  }
  return stages;
}

namespace {

double stage_success(int iterations, double theta) {
  const double s = std::sin((2.0 * iterations + 1.0) * theta);
  return s * s;
}

}  // namespace

double amplified_success_probability(double p, double eps) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p must lie in [0, 1]");
  const double theta = std::asin(std::sqrt(p));
  double failure = 1.0;
  for (int r : amplification_schedule(eps)) failure *= 1.0 - stage_success(r, theta);
  return 1.0 - failure;
}

std::optional<Cube> amplified_generate_cube(MembershipOracle& oracle, SampleOracle& sampler,
                                            IndexSet excluded, double eps, RandomStream& rng) {
  check_eps(eps);
  const BooleanFunction& f = *oracle.f_;
  const Distribution& d = *sampler.d_;
  const double p = attempt_success_probability(f, d, excluded);
  const double theta = std::asin(std::sqrt(p));
  const std::uint32_t free_mask = IndexSet::full(f.dimension()).mask() & ~excluded.mask();

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int r : amplification_schedule(eps)) {
    oracle.charge_quantum(static_cast<std::uint64_t>(stage_charge(r)));
    if (unit(rng) < stage_success(r, theta)) {
      // Measurement collapsed onto the success subspace: draw from the
      // conditional distribution of successful attempts (uncharged).
      while (true) {
        const BitString x = d.draw(rng);
        const BitString y(x.dimension(), x.value() ^ random_submask(rng, free_mask));
        if (f.at(x.value()) != f.at(y.value())) return Cube(x, y);
      }
    }
  }
  return std::nullopt;
}

}  // namespace quantum
}  // namespace qjunta
