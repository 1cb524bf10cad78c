#include <doctest.h>

#include "qjunta/errors.hpp"
#include "qjunta/oracles.hpp"

using namespace qjunta;

TEST_CASE("membership queries are counted without caching") {
  const auto f = BooleanFunction::constant(3, true);
  QueryLedger ledger;
  MembershipOracle oracle(f, ledger);
  const auto x = BitString::parse("010");
  CHECK(oracle.query(x));
  CHECK(ledger.classical_queries == 1);
  CHECK(oracle.query(x));
  CHECK(ledger.classical_queries == 2);
  CHECK_THROWS_AS(oracle.query(BitString::parse("01")), ValidationError);
  CHECK(ledger.classical_queries == 2);
}

TEST_CASE("sample draws are counted") {
  const auto d = Distribution::point_mass(BitString::parse("1100"));
  QueryLedger ledger;
  SampleOracle sampler(d, ledger);
  RandomStream rng(4);
  for (int i = 0; i < 5; ++i) CHECK(sampler.draw(rng).to_string() == "1100");
  CHECK(ledger.classical_samples == 5);
  CHECK(ledger.classical_queries == 0);
}

TEST_CASE("quantum charges") {
  const auto f = BooleanFunction::constant(2, false);
  QueryLedger ledger;
  MembershipOracle oracle(f, ledger);
  oracle.charge_quantum(1);
  oracle.charge_quantum(3);
  CHECK(ledger.quantum_queries == 4);
  CHECK_THROWS_AS(oracle.charge_quantum(0), ValidationError);
  CHECK(ledger.total() == 4);
}

TEST_CASE("attempt budget and ledger bounds") {
  CHECK(attempt_budget(0.1) == 20);
  CHECK(attempt_budget(0.25) == 8);
  CHECK(attempt_budget(0.3) == 7);
  CHECK(attempt_budget(1.0) == 2);
  CHECK_THROWS_AS(attempt_budget(0.0), ValidationError);
  CHECK_THROWS_AS(attempt_budget(1.5), ValidationError);

  const auto b = classical_budget(3, 0.25);
  CHECK(b.quantum_queries == 54);
  CHECK(b.classical_samples == 54 * 8);
  CHECK(b.classical_queries == 54 * 18);
  CHECK(b.admits(QueryLedger{54 * 18, 54 * 8, 54}));
  CHECK_FALSE(b.admits(QueryLedger{0, 0, 55}));

  const auto a = amplified_budget(3, 0.04);
  CHECK(a.quantum_queries == 54 * 20);
  CHECK(a.classical_samples == 0);
}
