#include "qjunta/distribution.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "qjunta/errors.hpp"

namespace qjunta {

namespace {

std::vector<SupportPoint> normalize(std::vector<SupportPoint> points) {
  double total = 0.0;
  for (const auto& p : points) {
    if (!(p.weight >= 0.0) || !std::isfinite(p.weight)) {
      throw ValidationError("distribution weights must be finite and nonnegative");
    }
    total += p.weight;
  }
  if (!(total > 0.0)) throw ValidationError("distribution needs at least one positive weight");

  std::sort(points.begin(), points.end(),
            [](const SupportPoint& a, const SupportPoint& b) { return a.point < b.point; });
  std::vector<SupportPoint> merged;
  merged.reserve(points.size());
  for (const auto& p : points) {
    if (p.weight == 0.0) continue;
    if (!merged.empty() && merged.back().point == p.point) {
      merged.back().weight += p.weight;
    } else {
      merged.push_back(p);
    }
  }
  for (auto& p : merged) p.weight /= total;
  return merged;
}

// Splits extract_bits into three byte-wide lookups.
class Projector {
 public:
  explicit Projector(IndexSet variables) {
    int offset = 0;
    for (int chunk = 0; chunk < 3; ++chunk) {
      const IndexSet part((variables.mask() >> (8 * chunk)) & 0xffu);
      for (std::uint32_t b = 0; b < 256; ++b) {
        tables_[chunk][b] = extract_bits(b, part) << offset;
      }
      offset += part.size();
    }
  }

  std::uint32_t operator()(std::uint32_t x) const noexcept {
    return tables_[0][x & 0xffu] | tables_[1][(x >> 8) & 0xffu] | tables_[2][(x >> 16) & 0xffu];
  }

 private:
  std::array<std::array<std::uint32_t, 256>, 3> tables_{};
};

struct ClassWeights {
  std::vector<double> zero;
  std::vector<double> one;
};

ClassWeights accumulate(const BooleanFunction& f, const Distribution& d, IndexSet variables) {
  const Projector project(variables);
  const std::size_t classes = std::size_t{1} << variables.size();
  ClassWeights w{std::vector<double>(classes, 0.0), std::vector<double>(classes, 0.0)};
  for (const auto& p : d.support()) {
    const auto c = project(p.point);
    (f.at(p.point) ? w.one : w.zero)[c] += p.weight;
  }
  return w;
}

double fit_error(const ClassWeights& w) {
  double error = 0.0;
  for (std::size_t c = 0; c < w.zero.size(); ++c) error += std::min(w.zero[c], w.one[c]);
  return error;
}

}  // namespace

Distribution::Distribution(int n, std::vector<SupportPoint> support)
    : n_(n), support_(std::move(support)) {
  std::vector<double> weights;
  weights.reserve(support_.size());
  for (const auto& p : support_) weights.push_back(p.weight);
  sampler_ = std::discrete_distribution<std::size_t>::param_type(weights.begin(), weights.end());
}

Distribution Distribution::dense(int n, std::span<const double> weights) {
  check_dimension(n);
  if (weights.size() != (std::size_t{1} << n)) {
    throw ValidationError("dense distribution needs 2^" + std::to_string(n) + " weights, got " +
                          std::to_string(weights.size()));
  }
  std::vector<SupportPoint> points;
  points.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    points.push_back({static_cast<std::uint32_t>(i), weights[i]});
  }
  return Distribution(n, normalize(std::move(points)));
}

Distribution Distribution::sparse(int n, std::span<const SupportPoint> weights) {
  check_dimension(n);
  for (const auto& p : weights) {
    if ((p.point & ~low_mask(n)) != 0) {
      throw ValidationError("support point outside {0,1}^" + std::to_string(n));
    }
  }
  return Distribution(n, normalize({weights.begin(), weights.end()}));
}

Distribution Distribution::uniform(int n) {
  check_dimension(n);
  const std::size_t size = std::size_t{1} << n;
  std::vector<SupportPoint> points(size);
  const double w = 1.0 / static_cast<double>(size);
  for (std::size_t i = 0; i < size; ++i) points[i] = {static_cast<std::uint32_t>(i), w};
  return Distribution(n, std::move(points));
}

Distribution Distribution::point_mass(const BitString& x) {
  return Distribution(x.dimension(), {{x.value(), 1.0}});
}

double Distribution::probability(std::uint32_t x) const noexcept {
  auto it = std::lower_bound(support_.begin(), support_.end(), x,
                             [](const SupportPoint& p, std::uint32_t v) { return p.point < v; });
  return it != support_.end() && it->point == x ? it->weight : 0.0;
}

BitString Distribution::draw(RandomStream& rng) const {
  std::discrete_distribution<std::size_t> pick;
  return BitString(n_, support_[pick(rng, sampler_)].point);
}

Distribution make_distribution(int n, std::span<const double> dense_weights) {
  return Distribution::dense(n, dense_weights);
}

Distribution make_distribution(int n, std::span<const SupportPoint> sparse_weights) {
  return Distribution::sparse(n, sparse_weights);
}

double disagreement_probability(const BooleanFunction& f, const BooleanFunction& g,
                                const Distribution& d) {
  if (f.dimension() != d.dimension() || g.dimension() != d.dimension()) {
    throw ValidationError("function and distribution dimensions differ");
  }
  double total = 0.0;
  for (const auto& p : d.support()) {
    if (f.at(p.point) != g.at(p.point)) total += p.weight;
  }
  return total;
}

JuntaFit best_junta_on(const BooleanFunction& f, const Distribution& d, IndexSet variables) {
  if (f.dimension() != d.dimension()) {
    throw ValidationError("function and distribution dimensions differ");
  }
  if (variables.max_variable() > f.dimension()) {
    throw ValidationError("junta variables exceed dimension");
  }
  const auto w = accumulate(f, d, variables);
  std::vector<std::uint8_t> inner(w.zero.size());
  for (std::size_t c = 0; c < inner.size(); ++c) inner[c] = w.one[c] > w.zero[c] ? 1 : 0;
  return {BooleanFunction::from_junta(f.dimension(), variables, std::move(inner)), fit_error(w)};
}

double binomial(int n, int k) noexcept {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return std::round(out);
}

DistanceCertificate distance_to_k_junta(const BooleanFunction& f, const Distribution& d, int k) {
  const int n = f.dimension();
  if (k < 0) throw ValidationError("k must be nonnegative");
  if (d.dimension() != n) throw ValidationError("function and distribution dimensions differ");
  k = std::min(k, n);
  const double work = binomial(n, k) * std::ldexp(1.0, n);
  if (work > kDistanceWorkCap) {
    throw ResourceCapError("distance oracle work C(" + std::to_string(n) + "," + std::to_string(k) +
                           ")*2^" + std::to_string(n) + " exceeds cap");
  }

  // k-subsets of [n] in lexicographic order of their sorted members.
  std::vector<int> combo(static_cast<std::size_t>(k));
  std::iota(combo.begin(), combo.end(), 1);
  double best_error = 2.0;
  IndexSet best_subset;
  while (true) {
    const IndexSet subset = IndexSet::of(combo);
    const double error = fit_error(accumulate(f, d, subset));
    if (error < best_error) {
      best_error = error;
      best_subset = subset;
    }
    int i = k - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++combo[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  auto fit = best_junta_on(f, d, best_subset);
  return {fit.error, best_subset, std::move(fit.junta)};
}

}  // namespace qjunta
