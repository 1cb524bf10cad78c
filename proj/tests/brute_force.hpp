#pragma once

// Test-only reference computations. Each one enumerates definitions directly
// and shares no code path with the library routine it checks beyond the
// basic BitString / BooleanFunction accessors.

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "qjunta/bits.hpp"
#include "qjunta/boolean_function.hpp"
#include "qjunta/distribution.hpp"

namespace brute {

inline std::vector<std::uint32_t> submasks(std::uint32_t mask) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t t = mask;; t = (t - 1) & mask) {
    out.push_back(t);
    if (t == 0) break;
  }
  return out;
}

/// Relevant variables straight from the definition f(x) != f(x^i).
inline qjunta::IndexSet relevant(const qjunta::BooleanFunction& f) {
  std::uint32_t found = 0;
  const int n = f.dimension();
  for (int i = 1; i <= n; ++i) {
    for (std::uint32_t v = 0; v < (std::uint32_t{1} << n); ++v) {
      const qjunta::BitString x(n, v);
      if (f(x) != f(qjunta::flip(x, qjunta::IndexSet::of({i})))) {
        found |= std::uint32_t{1} << (i - 1);
        break;
      }
    }
  }
  return qjunta::IndexSet(found);
}

/// Restricted Fourier coefficient by the O(|B|) direct sum, phases at x.
inline double coefficient(const qjunta::BooleanFunction& f, const qjunta::Cube& cube, qjunta::IndexSet s) {
  const std::uint32_t mask = cube.free_variables().mask();
  double total = 0.0;
  int count = 0;
  for (std::uint32_t t : submasks(mask)) {
    const qjunta::BitString z(cube.ambient_dimension(), cube.x().value() ^ t);
    const int exponent = (f(z) ? 1 : 0) + std::popcount(s.mask() & t);
    total += (exponent % 2 == 0) ? 1.0 : -1.0;
    ++count;
  }
  return total / count;
}

/// Pr[f(x) != f(x^T)] by enumerating the support of D and every T.
inline double attempt_probability(const qjunta::BooleanFunction& f, const qjunta::Distribution& d,
                                  qjunta::IndexSet excluded) {
  const std::uint32_t free = qjunta::low_mask(f.dimension()) & ~excluded.mask();
  const auto ts = submasks(free);
  double p = 0.0;
  for (const auto& s : d.support()) {
    int differing = 0;
    for (std::uint32_t t : ts) differing += f.at(s.point) != f.at(s.point ^ t);
    p += s.weight * differing / static_cast<double>(ts.size());
  }
  return p;
}

/// Distance to the nearest k-junta by enumerating every variable set of size
/// at most k and every inner truth table on it.
inline double distance(const qjunta::BooleanFunction& f, const qjunta::Distribution& d, int k) {
  const int n = f.dimension();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t vars = 0; vars < (std::uint32_t{1} << n); ++vars) {
    const int size = std::popcount(vars);
    if (size > k) continue;
    const std::uint64_t tables = std::uint64_t{1} << (std::uint64_t{1} << size);
    for (std::uint64_t table = 0; table < tables; ++table) {
      double err = 0.0;
      for (const auto& s : d.support()) {
        std::uint32_t cls = 0;
        int slot = 0;
        for (int i = 0; i < n; ++i) {
          if ((vars >> i) & 1u) cls |= ((s.point >> i) & 1u) << slot++;
        }
        const bool h = (table >> cls) & 1u;
        if (h != f.at(s.point)) err += s.weight;
      }
      best = std::min(best, err);
    }
  }
  return best;
}

}  // namespace brute
