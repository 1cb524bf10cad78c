#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qjunta {

/// Largest supported ambient dimension (dense truth tables hold 2^n entries).
inline constexpr int kMaxVariables = 24;

/// Largest cube dimension |I(B)| whose spectrum may be enumerated.
inline constexpr int kMaxCubeDimension = 24;

/// Tolerance for floating-point spectral identities.
inline constexpr double kNormTolerance = 1e-9;

inline constexpr std::uint32_t low_mask(int bits) {
  return bits >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << bits) - 1u);
}

/// A set of variable indices drawn from [n] = {1, ..., n}.
///
/// Stored as a bitmask where variable i occupies bit i-1.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t mask) : mask_(mask) {}

  /// Builds a set from 1-based variable numbers. Throws ValidationError for
  /// any member outside 1..kMaxVariables.
  static IndexSet of(std::initializer_list<int> variables);
  static IndexSet of(std::span<const int> variables);

  /// The full index set [n].
  static IndexSet full(int n);

  constexpr std::uint32_t mask() const noexcept { return mask_; }
  constexpr int size() const noexcept { return std::popcount(mask_); }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr bool contains(int variable) const noexcept {
    return variable >= 1 && variable <= 32 && ((mask_ >> (variable - 1)) & 1u);
  }
  constexpr bool intersects(IndexSet other) const noexcept {
    return (mask_ & other.mask_) != 0;
  }
  constexpr bool subset_of(IndexSet other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }
  /// Largest member, or 0 for the empty set.
  constexpr int max_variable() const noexcept { return 32 - std::countl_zero(mask_); }

  /// Sorted 1-based members.
  std::vector<int> variables() const;

  /// Renders as "{1,3,4}".
  std::string to_string() const;

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.mask_ | b.mask_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.mask_ & b.mask_); }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(IndexSet, IndexSet) = default;
  friend constexpr auto operator<=>(IndexSet, IndexSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// A point of the hypercube {0,1}^n.
///
/// The integer value places variable 1 at the least significant bit. The
/// textual form lists variable 1 first, so "00100" has only x_3 set.
class BitString {
 public:
  BitString(int n, std::uint32_t value);

  static BitString zeros(int n) { return BitString(n, 0); }

  /// Parses a '0'/'1' string with variable 1 first.
  static BitString parse(std::string_view text);

  int dimension() const noexcept { return n_; }
  std::uint32_t value() const noexcept { return value_; }
  bool bit(int variable) const noexcept { return (value_ >> (variable - 1)) & 1u; }

  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  int n_;
  std::uint32_t value_;
};

/// x^T: x with the bits in T flipped. Throws ValidationError if T names a
/// variable beyond dim(x).
BitString flip(const BitString& x, IndexSet flipped);

/// Positions where x and y disagree. Throws ValidationError on a dimension
/// mismatch.
IndexSet disagreement(const BitString& x, const BitString& y);

/// Gathers the bits of `value` selected by `positions` into the low bits of
/// the result, preserving order.
std::uint32_t extract_bits(std::uint32_t value, IndexSet positions) noexcept;

/// Inverse of extract_bits: scatters the low bits of `compact` into the
/// positions selected by `positions`.
std::uint32_t deposit_bits(std::uint32_t compact, IndexSet positions) noexcept;

void check_dimension(int n);

}  // namespace qjunta
