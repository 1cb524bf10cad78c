#pragma once

#include <cstdint>
#include <optional>

#include "qjunta/boolean_function.hpp"
#include "qjunta/distribution.hpp"
#include "qjunta/random.hpp"

namespace qjunta {

/// Query counters for a single tester run. Counters only ever grow.
struct QueryLedger {
  std::uint64_t classical_queries = 0;
  std::uint64_t classical_samples = 0;
  std::uint64_t quantum_queries = 0;

  std::uint64_t total() const noexcept {
    return classical_queries + classical_samples + quantum_queries;
  }

  friend bool operator==(const QueryLedger&, const QueryLedger&) = default;
};

class MembershipOracle;
class SampleOracle;

namespace quantum {
IndexSet fourier_sample(MembershipOracle& oracle, const Cube& cube, RandomStream& rng);
std::optional<Cube> amplified_generate_cube(MembershipOracle& oracle, SampleOracle& sampler,
                                            IndexSet excluded, double eps, RandomStream& rng);
}  // namespace quantum

/// Counted access to f: classical point queries and quantum phase-oracle
/// executions. No caching; every execution is charged.
///
/// The function itself is visible only to the quantum simulation routines,
/// which need the full table to reproduce measurement statistics.
class MembershipOracle {
 public:
  MembershipOracle(const BooleanFunction& f, QueryLedger& ledger) : f_(&f), ledger_(&ledger) {}

  int dimension() const noexcept { return f_->dimension(); }

  /// f(x); charges one classical query.
  bool query(const BitString& x);

  /// Charges `amount` quantum oracle executions. Throws ValidationError for
  /// amount == 0.
  void charge_quantum(std::uint64_t amount);

  const QueryLedger& ledger() const noexcept { return *ledger_; }

 private:
  friend IndexSet quantum::fourier_sample(MembershipOracle&, const Cube&, RandomStream&);
  friend std::optional<Cube> quantum::amplified_generate_cube(MembershipOracle&, SampleOracle&,
                                                              IndexSet, double, RandomStream&);

  const BooleanFunction* f_;
  QueryLedger* ledger_;
};

/// Counted classical sample access to D.
class SampleOracle {
 public:
  SampleOracle(const Distribution& d, QueryLedger& ledger) : d_(&d), ledger_(&ledger) {}

  int dimension() const noexcept { return d_->dimension(); }

  /// x ~ D; charges one classical sample.
  BitString draw(RandomStream& rng);

  const QueryLedger& ledger() const noexcept { return *ledger_; }

 private:
  friend std::optional<Cube> quantum::amplified_generate_cube(MembershipOracle&, SampleOracle&,
                                                              IndexSet, double, RandomStream&);

  const Distribution* d_;
  QueryLedger* ledger_;
};

/// ceil(2/eps) with a guard against representation error (2/0.1 is 20).
int attempt_budget(double eps);

/// Throws ValidationError unless 0 < eps <= 1.
void check_eps(double eps);

/// Worst-case counter values a completed run with (k, eps) may reach.
struct LedgerBudget {
  std::uint64_t classical_queries;
  std::uint64_t classical_samples;
  std::uint64_t quantum_queries;

  bool admits(const QueryLedger& ledger) const noexcept {
    return ledger.classical_queries <= classical_queries &&
           ledger.classical_samples <= classical_samples && ledger.quantum_queries <= quantum_queries;
  }
};

/// Classical GenerateCube: 18k iterations, each at most ceil(2/eps) samples
/// and 2 ceil(2/eps) + 2 queries, and at most one quantum query.
LedgerBudget classical_budget(int k, double eps);

/// Amplified GenerateCube: quantum charge per iteration is at most
/// ceil(4/sqrt(eps)); no classical samples.
LedgerBudget amplified_budget(int k, double eps);

}  // namespace qjunta
