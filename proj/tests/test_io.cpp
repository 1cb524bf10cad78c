#include <doctest.h>

#include "qjunta/errors.hpp"
#include "qjunta/harness.hpp"
#include "qjunta/io.hpp"

using namespace qjunta;

TEST_CASE("table hex encoding") {
  // AND on two variables: only entry 3 is set -> integer 0b1000.
  CHECK(io::encode_table_hex({0, 0, 0, 1}) == "8");
  CHECK(io::encode_table_hex({1, 0}) == "1");
  CHECK(io::encode_table_hex({1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0}) == "0101");
  CHECK(io::decode_table_hex("0x8", 4) == std::vector<std::uint8_t>{0, 0, 0, 1});
  CHECK(io::decode_table_hex("0101", 16)[8] == 1);
  CHECK_THROWS_AS(io::decode_table_hex("4", 2), ValidationError);
  CHECK_THROWS_AS(io::decode_table_hex("88", 4), ValidationError);
  CHECK_THROWS_AS(io::decode_table_hex("g", 4), ValidationError);

  RandomStream rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t size = std::size_t{1} << (rng() % 12);
    std::vector<std::uint8_t> table(size);
    for (auto& v : table) v = rng() & 1u;
    CHECK(io::decode_table_hex(io::encode_table_hex(table), size) == table);
  }
}

TEST_CASE("function JSON") {
  RandomStream rng(2);
  const auto f = gen_random_junta(7, 3, rng);
  const auto j = io::to_json(f);
  CHECK(j.contains("junta"));
  const auto back = io::function_from_json(j);
  CHECK(back == f);
  CHECK(back.junta_backing()->variables == f.junta_backing()->variables);

  auto tampered = j;
  tampered["junta"]["inner_table"] = io::encode_table_hex(std::vector<std::uint8_t>(8, 0));
  if (f.table() != std::vector<std::uint8_t>(128, 0)) {
    CHECK_THROWS_AS(io::function_from_json(tampered), ValidationError);
  }
  CHECK_THROWS_AS(io::function_from_json(io::Json{{"n", 2}}), ValidationError);
  CHECK_THROWS_AS(io::function_from_json(io::Json{{"n", 2}, {"table", "8"}, {"extra", 1}}), ValidationError);
  CHECK_THROWS_AS(io::function_from_json(io::Json{{"n", "two"}, {"table", "8"}}), ValidationError);
}

TEST_CASE("distribution JSON") {
  const auto dense = io::distribution_from_json(io::Json::parse(R"({"n": 2, "dense": [1, 0, 0, 3]})"));
  CHECK(dense.probability(0) == 0.25);
  CHECK(dense.probability(3) == 0.75);
  const auto sparse =
      io::distribution_from_json(io::Json::parse(R"({"n": 3, "support": [{"x": "100", "w": 2}, {"x": "011", "w": 2}]})"));
  CHECK(sparse.probability(0b001u) == 0.5);
  CHECK(sparse.probability(0b110u) == 0.5);
  const auto again = io::distribution_from_json(io::to_json(sparse));
  CHECK(std::equal(again.support().begin(), again.support().end(), sparse.support().begin(),
                   sparse.support().end()));
  CHECK_THROWS_AS(io::distribution_from_json(io::Json::parse(R"({"n": 2})")), ValidationError);
  CHECK_THROWS_AS(io::distribution_from_json(io::Json::parse(R"({"n": 2, "support": [{"x": "101", "w": 1}]})")),
                  ValidationError);
  CHECK_THROWS_AS(io::distribution_from_json(io::Json::parse(R"({"n": 1, "dense": [1, -1]})")), ValidationError);
}

TEST_CASE("ledger, spectrum and trace JSON") {
  const auto ledger = io::to_json(QueryLedger{3, 2, 1});
  CHECK(ledger.dump() == R"({"classical_queries":3,"classical_samples":2,"quantum_queries":1,"total":6})");

  const auto f = BooleanFunction::tabulate(2, [](std::uint32_t x) { return x == 3; });
  const auto spectrum = io::to_json(restricted_spectrum(f, Cube(BitString::parse("00"), BitString::parse("11"))));
  CHECK(spectrum["coefficients"]["\xE2\x88\x85"] == 0.5);
  CHECK(spectrum["coefficients"]["{1,2}"] == -0.5);
  CHECK(spectrum["squared_sum"] == 1.0);

  TesterState state;
  state.trace = {{1, Action::generated_cube, 1, 0, 1}, {2, Action::split_toward_y, 2, 0, 2}};
  CHECK(io::trace_to_jsonl(state) ==
        "{\"iteration\":1,\"action\":\"generated_cube\",\"potential\":1,\"relevant_count\":0,\"cube_count\":1}\n"
        "{\"iteration\":2,\"action\":\"split_toward_y\",\"potential\":2,\"relevant_count\":0,\"cube_count\":2}\n");
}

TEST_CASE("experiment config JSON") {
  const auto config = io::config_from_json(io::Json::parse(R"({
      "n": 12, "k": 3, "eps": 0.25, "trials": 10, "master_seed": 18446744073709551615,
      "variant": "amplified", "fixture": {"family": "parity"}})"));
  CHECK(config.master_seed == 18446744073709551615ULL);
  CHECK(config.variant == Variant::amplified);
  CHECK(config.fixture.family == FixtureFamily::parity);
  CHECK(io::config_from_json(io::to_json(config)).master_seed == config.master_seed);

  CHECK_THROWS_AS(io::config_from_json(io::Json::parse(R"({"n": 12, "k": 3, "eps": 0.25, "trials": 0, "master_seed": 1})")),
                  ValidationError);
  CHECK_THROWS_AS(io::config_from_json(io::Json::parse(R"({"n": 12, "k": 3, "eps": 0.25, "trials": 5, "master_seed": -1})")),
                  ValidationError);
  CHECK_THROWS_AS(
      io::config_from_json(io::Json::parse(R"({"n": 12, "k": 3, "eps": 0.25, "trials": 5, "master_seed": 1, "bogus": 1})")),
      ValidationError);
}
