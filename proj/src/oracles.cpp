#include "qjunta/oracles.hpp"

#include <cmath>
#include <string>

#include "qjunta/errors.hpp"
#include "qjunta/quantum.hpp"

namespace qjunta {

bool MembershipOracle::query(const BitString& x) {
  const bool value = (*f_)(x);
  ++ledger_->classical_queries;
  return value;
}

void MembershipOracle::charge_quantum(std::uint64_t amount) {
  if (amount == 0) throw ValidationError("quantum charge must be at least 1");
  ledger_->quantum_queries += amount;
}

BitString SampleOracle::draw(RandomStream& rng) {
  auto x = d_->draw(rng);
  ++ledger_->classical_samples;
  return x;
}

void check_eps(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw ValidationError("eps must satisfy 0 < eps <= 1, got " + std::to_string(eps));
  }
}

int attempt_budget(double eps) {
  check_eps(eps);
  return static_cast<int>(std::ceil(2.0 / eps - 1e-9));
}

LedgerBudget classical_budget(int k, double eps) {
  const auto iterations = static_cast<std::uint64_t>(18 * k);
  const auto attempts = static_cast<std::uint64_t>(attempt_budget(eps));
  return {iterations * (2 * attempts + 2), iterations * attempts, iterations};
}

LedgerBudget amplified_budget(int k, double eps) {
  const auto iterations = static_cast<std::uint64_t>(18 * k);
  return {iterations * 2, 0, iterations * static_cast<std::uint64_t>(quantum::amplification_budget(eps))};
}

}  // namespace qjunta
