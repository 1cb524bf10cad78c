#include "qjunta/boolean_function.hpp"

#include <cmath>
#include <string>

#include "qjunta/errors.hpp"

namespace qjunta {

namespace {

void check_binary(std::span<const std::uint8_t> table) {
  for (auto v : table) {
    if (v > 1) throw ValidationError("truth table entries must be 0 or 1");
  }
}

void check_cube_size(const Cube& cube) {
  if (cube.cube_dimension() > kMaxCubeDimension) {
    throw ResourceCapError("cube dimension " + std::to_string(cube.cube_dimension()) +
                           " exceeds enumeration cap " + std::to_string(kMaxCubeDimension));
  }
}

// Next submask of `mask` after `t` in increasing compact order.
constexpr std::uint32_t next_submask(std::uint32_t t, std::uint32_t mask) noexcept {
  return ((t | ~mask) + 1u) & mask;
}

}  // namespace

BooleanFunction::BooleanFunction(int n, std::vector<std::uint8_t> table)
    : n_(n), table_(std::move(table)) {
  check_dimension(n);
  if (table_.size() != (std::size_t{1} << n)) {
    throw ValidationError("truth table must have 2^" + std::to_string(n) + " entries, got " +
                          std::to_string(table_.size()));
  }
  check_binary(table_);
}

BooleanFunction BooleanFunction::constant(int n, bool value) {
  check_dimension(n);
  return BooleanFunction(n, std::vector<std::uint8_t>(std::size_t{1} << n, value ? 1 : 0));
}

BooleanFunction BooleanFunction::from_junta(int n, IndexSet variables,
                                            std::vector<std::uint8_t> inner_table) {
  check_dimension(n);
  if (variables.max_variable() > n) {
    throw ValidationError("junta variables " + variables.to_string() + " exceed dimension");
  }
  if (inner_table.size() != (std::size_t{1} << variables.size())) {
    throw ValidationError("junta inner table must have 2^|vars| entries");
  }
  check_binary(inner_table);
  auto f = tabulate(n, [&](std::uint32_t x) { return inner_table[extract_bits(x, variables)] != 0; });
  f.junta_ = JuntaBacking{variables, std::move(inner_table)};
  return f;
}

BooleanFunction BooleanFunction::parity(int n, IndexSet variables) {
  if (variables.max_variable() > n) throw ValidationError("parity variables exceed dimension");
  return tabulate(n, [m = variables.mask()](std::uint32_t x) { return (std::popcount(x & m) & 1) != 0; });
}

BooleanFunction BooleanFunction::dictator(int n, int variable) {
  if (variable < 1 || variable > n) throw ValidationError("dictator variable out of range");
  return tabulate(n, [variable](std::uint32_t x) { return ((x >> (variable - 1)) & 1u) != 0; });
}

bool BooleanFunction::operator()(const BitString& x) const {
  if (x.dimension() != n_) {
    throw ValidationError("input dimension " + std::to_string(x.dimension()) +
                          " does not match function dimension " + std::to_string(n_));
  }
  return at(x.value());
}

bool BooleanFunction::backing_consistent() const {
  if (!junta_) return true;
  for (std::uint32_t x = 0; x < table_.size(); ++x) {
    if (table_[x] != junta_->inner_table[extract_bits(x, junta_->variables)]) return false;
  }
  return true;
}

bool eval(const BooleanFunction& f, const BitString& x) { return f(x); }

IndexSet relevant_variables(const BooleanFunction& f) {
  std::uint32_t relevant = 0;
  const auto size = static_cast<std::uint32_t>(f.size());
  for (int i = 0; i < f.dimension(); ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    for (std::uint32_t x = 0; x < size; ++x) {
      if ((x & bit) == 0 && f.at(x) != f.at(x | bit)) {
        relevant |= bit;
        break;
      }
    }
  }
  return IndexSet(relevant);
}

bool is_k_junta(const BooleanFunction& f, int k) { return relevant_variables(f).size() <= k; }

Cube::Cube(BitString x, BitString y) : x_(x), y_(y) {
  if (x_.dimension() != y_.dimension()) {
    throw ValidationError("cube corners have different dimensions");
  }
}

std::vector<BitString> cube_points(const Cube& cube) {
  check_cube_size(cube);
  const std::uint32_t mask = cube.free_variables().mask();
  const std::size_t count = std::size_t{1} << cube.cube_dimension();
  std::vector<BitString> points;
  points.reserve(count);
  std::uint32_t t = 0;
  for (std::size_t j = 0; j < count; ++j, t = next_submask(t, mask)) {
    points.emplace_back(cube.ambient_dimension(), cube.x().value() ^ t);
  }
  return points;
}

RestrictedSpectrum::RestrictedSpectrum(Cube cube, std::vector<std::int32_t> sums)
    : cube_(std::move(cube)), sums_(std::move(sums)) {
  if (sums_.size() != (std::size_t{1} << cube_.cube_dimension())) {
    throw ValidationError("spectrum size does not match cube dimension");
  }
}

IndexSet RestrictedSpectrum::subset_at(std::size_t j) const noexcept {
  return IndexSet(deposit_bits(static_cast<std::uint32_t>(j), cube_.free_variables()));
}

std::size_t RestrictedSpectrum::index_of(IndexSet subset) const {
  if (!subset.subset_of(cube_.free_variables())) {
    throw ValidationError("subset " + subset.to_string() + " is not inside I(B) = " +
                          cube_.free_variables().to_string());
  }
  return extract_bits(subset.mask(), cube_.free_variables());
}

double RestrictedSpectrum::coefficient_at(std::size_t j) const noexcept {
  return std::ldexp(static_cast<double>(sums_[j]), -cube_dimension());
}

double RestrictedSpectrum::squared_norm() const noexcept {
  double total = 0.0;
  for (std::size_t j = 0; j < sums_.size(); ++j) {
    const double c = coefficient_at(j);
    total += c * c;
  }
  return total;
}

void walsh_hadamard_in_place(std::span<std::int32_t> values) noexcept {
  const std::size_t n = values.size();
  for (std::size_t half = 1; half < n; half <<= 1) {
    for (std::size_t block = 0; block < n; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const std::int32_t a = values[i];
        const std::int32_t b = values[i + half];
        values[i] = a + b;
        values[i + half] = a - b;
      }
    }
  }
}

RestrictedSpectrum restricted_spectrum(const BooleanFunction& f, const Cube& cube) {
  if (cube.ambient_dimension() != f.dimension()) {
    throw ValidationError("cube dimension does not match function dimension");
  }
  check_cube_size(cube);
  const std::uint32_t mask = cube.free_variables().mask();
  const std::uint32_t base = cube.x().value();
  std::vector<std::int32_t> signs(std::size_t{1} << cube.cube_dimension());
  std::uint32_t t = 0;
  for (std::size_t j = 0; j < signs.size(); ++j, t = next_submask(t, mask)) {
    signs[j] = f.at(base ^ t) ? -1 : 1;
  }
  walsh_hadamard_in_place(signs);
  return RestrictedSpectrum(cube, std::move(signs));
}

}  // namespace qjunta
