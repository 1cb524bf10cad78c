#include "qjunta/bits.hpp"

#include "qjunta/errors.hpp"

namespace qjunta {

void check_dimension(int n) {
  if (n < 1 || n > kMaxVariables) {
    throw ValidationError("dimension " + std::to_string(n) + " outside 1.." +
                          std::to_string(kMaxVariables));
  }
}

IndexSet IndexSet::of(std::initializer_list<int> variables) {
  return of(std::span<const int>(variables.begin(), variables.size()));
}

IndexSet IndexSet::of(std::span<const int> variables) {
  std::uint32_t mask = 0;
  for (int v : variables) {
    if (v < 1 || v > kMaxVariables) {
      throw ValidationError("variable index " + std::to_string(v) + " out of range");
    }
    mask |= std::uint32_t{1} << (v - 1);
  }
  return IndexSet(mask);
}

IndexSet IndexSet::full(int n) {
  check_dimension(n);
  return IndexSet(low_mask(n));
}

std::vector<int> IndexSet::variables() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m) + 1);
  }
  return out;
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : variables()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

BitString::BitString(int n, std::uint32_t value) : n_(n), value_(value) {
  check_dimension(n);
  if ((value & ~low_mask(n)) != 0) {
    throw ValidationError("bit-string value has bits beyond dimension " + std::to_string(n));
  }
}

BitString BitString::parse(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxVariables)) {
    throw ValidationError("bit-string length must be 1.." + std::to_string(kMaxVariables));
  }
  std::uint32_t value = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      value |= std::uint32_t{1} << i;
    } else if (text[i] != '0') {
      throw ValidationError("bit-string contains a character other than 0/1: " + std::string(text));
    }
  }
  return BitString(static_cast<int>(text.size()), value);
}

std::string BitString::to_string() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    if ((value_ >> i) & 1u) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

BitString flip(const BitString& x, IndexSet flipped) {
  if (flipped.max_variable() > x.dimension()) {
    throw ValidationError("flip set " + flipped.to_string() + " exceeds dimension " +
                          std::to_string(x.dimension()));
  }
  return BitString(x.dimension(), x.value() ^ flipped.mask());
}

IndexSet disagreement(const BitString& x, const BitString& y) {
  if (x.dimension() != y.dimension()) {
    throw ValidationError("corner dimensions differ");
  }
  return IndexSet(x.value() ^ y.value());
}

std::uint32_t extract_bits(std::uint32_t value, IndexSet positions) noexcept {
  std::uint32_t out = 0;
  int slot = 0;
  for (std::uint32_t m = positions.mask(); m != 0; m &= m - 1, ++slot) {
    const int pos = std::countr_zero(m);
    out |= ((value >> pos) & 1u) << slot;
  }
  return out;
}

std::uint32_t deposit_bits(std::uint32_t compact, IndexSet positions) noexcept {
  std::uint32_t out = 0;
  int slot = 0;
  for (std::uint32_t m = positions.mask(); m != 0; m &= m - 1, ++slot) {
    const int pos = std::countr_zero(m);
    out |= ((compact >> slot) & 1u) << pos;
  }
  return out;
}

}  // namespace qjunta
