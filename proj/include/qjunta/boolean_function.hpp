#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qjunta/bits.hpp"

namespace qjunta {

/// Structured description of a junta: the function reads only `variables`,
/// through `inner_table` indexed by the compacted projection (lowest
/// variable at the least significant bit).
struct JuntaBacking {
  IndexSet variables;
  std::vector<std::uint8_t> inner_table;
};

/// A total function {0,1}^n -> {0,1} held as a dense truth table.
///
/// Entry i of the table is f evaluated at the bit-string with integer value
/// i (variable 1 = least significant bit).
class BooleanFunction {
 public:
  /// Takes 2^n entries, each 0 or 1.
  BooleanFunction(int n, std::vector<std::uint8_t> table);

  static BooleanFunction constant(int n, bool value);

  /// A junta reading `variables` through `inner_table` (2^|variables|
  /// entries). The full table is materialized and the backing retained.
  static BooleanFunction from_junta(int n, IndexSet variables, std::vector<std::uint8_t> inner_table);

  /// Tabulates `predicate(std::uint32_t index) -> bool` over {0,1}^n.
  template <class Predicate>
  static BooleanFunction tabulate(int n, Predicate&& predicate) {
    check_dimension(n);
    std::vector<std::uint8_t> table(std::size_t{1} << n);
    for (std::size_t i = 0; i < table.size(); ++i) {
      table[i] = predicate(static_cast<std::uint32_t>(i)) ? 1 : 0;
    }
    return BooleanFunction(n, std::move(table));
  }

  /// Parity of the variables in `variables`.
  static BooleanFunction parity(int n, IndexSet variables);
  /// f(x) = x_i.
  static BooleanFunction dictator(int n, int variable);

  int dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return table_.size(); }

  /// Evaluates at `x`. Throws ValidationError if dim(x) != n.
  bool operator()(const BitString& x) const;

  /// Unchecked evaluation at an integer-encoded point.
  bool at(std::uint32_t index) const noexcept { return table_[index] != 0; }

  const std::vector<std::uint8_t>& table() const noexcept { return table_; }
  const std::optional<JuntaBacking>& junta_backing() const noexcept { return junta_; }

  /// Exhaustively compares the tabulated values against the junta backing.
  /// True when no backing is present.
  bool backing_consistent() const;

  friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  int n_;
  std::vector<std::uint8_t> table_;
  std::optional<JuntaBacking> junta_;
};

bool eval(const BooleanFunction& f, const BitString& x);

/// The exact set of variables i with f(x) != f(x^i) for some x.
IndexSet relevant_variables(const BooleanFunction& f);

bool is_k_junta(const BooleanFunction& f, int k);

/// An axis-aligned subcube spanned by two opposite corners.
class Cube {
 public:
  Cube(BitString x, BitString y);

  const BitString& x() const noexcept { return x_; }
  const BitString& y() const noexcept { return y_; }

  /// I(B): the variables on which the corners disagree.
  IndexSet free_variables() const noexcept { return IndexSet(x_.value() ^ y_.value()); }
  int cube_dimension() const noexcept { return free_variables().size(); }
  int ambient_dimension() const noexcept { return x_.dimension(); }

  friend bool operator==(const Cube&, const Cube&) = default;

 private:
  BitString x_;
  BitString y_;
};

/// All 2^|I(B)| points of B. Point j is x^T where T is the j-th subset of
/// I(B) in compact order. Throws ResourceCapError above kMaxCubeDimension.
std::vector<BitString> cube_points(const Cube& cube);

/// Walsh-Hadamard spectrum of f restricted to a cube.
///
/// Phases are referenced to corner x: the coefficient of S subset of I(B) is
///   (1/|B|) * sum over T subset of I(B) of (-1)^(f(x^T) + |S & T|).
/// Coefficients are stored as exact integer sums; divide by |B| for the
/// real value. Squared coefficients are the Fourier-sampling distribution.
class RestrictedSpectrum {
 public:
  RestrictedSpectrum(Cube cube, std::vector<std::int32_t> sums);

  const Cube& base_cube() const noexcept { return cube_; }
  int cube_dimension() const noexcept { return cube_.cube_dimension(); }
  std::size_t size() const noexcept { return sums_.size(); }

  /// The subset of I(B) addressed by compact index j.
  IndexSet subset_at(std::size_t j) const noexcept;
  /// Compact index of a subset of I(B). Throws ValidationError otherwise.
  std::size_t index_of(IndexSet subset) const;

  double coefficient_at(std::size_t j) const noexcept;
  double coefficient(IndexSet subset) const { return coefficient_at(index_of(subset)); }

  /// |B|^2 * fhat(S)^2, an exact integer. Sampling weights.
  std::uint64_t squared_weight_at(std::size_t j) const noexcept {
    const auto s = static_cast<std::int64_t>(sums_[j]);
    return static_cast<std::uint64_t>(s * s);
  }
  /// |B|^2: the total of all squared weights.
  std::uint64_t total_weight() const noexcept { return std::uint64_t{1} << (2 * cube_dimension()); }

  double squared_norm() const noexcept;

  std::span<const std::int32_t> raw_sums() const noexcept { return sums_; }

 private:
  Cube cube_;
  std::vector<std::int32_t> sums_;
};

/// In-place unnormalized Walsh-Hadamard butterfly. `values.size()` must be a
/// power of two.
void walsh_hadamard_in_place(std::span<std::int32_t> values) noexcept;

RestrictedSpectrum restricted_spectrum(const BooleanFunction& f, const Cube& cube);

}  // namespace qjunta
