#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qjunta/boolean_function.hpp"
#include "qjunta/distribution.hpp"
#include "qjunta/harness.hpp"
#include "qjunta/oracles.hpp"
#include "qjunta/tester.hpp"

namespace qjunta::io {

using Json = nlohmann::ordered_json;

/// Hex encoding of a 2^m-entry table read as the integer sum of
/// table[i] * 2^i, most significant digit first, zero-padded to
/// ceil(2^m / 4) digits.
std::string encode_table_hex(const std::vector<std::uint8_t>& table);
/// Inverse of encode_table_hex; accepts an optional "0x" prefix and either
/// digit case. Throws ValidationError on bad digits, wrong length, or bits
/// beyond `entries`.
std::vector<std::uint8_t> decode_table_hex(std::string_view hex, std::size_t entries);

Json to_json(const BooleanFunction& f);
BooleanFunction function_from_json(const Json& j);

Json to_json(const Distribution& d);
Distribution distribution_from_json(const Json& j);

Json to_json(const QueryLedger& ledger);
Json to_json(const DistanceCertificate& cert);
Json to_json(const RestrictedSpectrum& spectrum);
Json to_json(const TraceRecord& record);
Json to_json(const Verdict& verdict);
Json to_json(const TrialReport& report);

/// One TraceRecord per line.
std::string trace_to_jsonl(const TesterState& state);

/// Per-trial CSV: trial,decision,classical_queries,classical_samples,
/// quantum_queries,iterations.
std::string outcomes_to_csv(const TrialReport& report);

Json to_json(const ExperimentConfig& config);
/// Unknown keys are rejected.
ExperimentConfig config_from_json(const Json& j);

/// Reads and parses a JSON file. Throws ValidationError on I/O or syntax
/// errors.
Json read_json_file(const std::filesystem::path& path);

}  // namespace qjunta::io
