#include "qjunta/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "qjunta/errors.hpp"

namespace qjunta::io {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

template <class T>
T required(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("field '") + key + "' has the wrong type: " + e.what());
  }
}

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) throw ValidationError(std::string(what) + " must be a JSON object");
  std::set<std::string> names(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    if (!names.count(key)) throw ValidationError(std::string("unknown field '") + key + "' in " + what);
  }
}

Json variables_json(IndexSet s) { return Json(s.variables()); }

IndexSet variables_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("variable list must be an array");
  std::vector<int> vars;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ValidationError("variable indices must be integers");
    vars.push_back(v.get<int>());
  }
  const IndexSet s = IndexSet::of(vars);
  if (static_cast<std::size_t>(s.size()) != vars.size()) {
    throw ValidationError("variable list contains duplicates");
  }
  return s;
}

std::string subset_key(IndexSet s) { return s.empty() ? "\xE2\x88\x85" : s.to_string(); }

Json stats_json(const CounterStats& s) {
  return Json{{"min", s.min}, {"mean", s.mean}, {"max", s.max}};
}

}  // namespace

std::string encode_table_hex(const std::vector<std::uint8_t>& table) {
  const std::size_t digits = (table.size() + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    int nibble = 0;
    for (int b = 0; b < 4; ++b) {
      const std::size_t i = 4 * d + static_cast<std::size_t>(b);
      if (i < table.size() && table[i]) nibble |= 1 << b;
    }
    out[digits - 1 - d] = kHexDigits[nibble];
  }
  return out;
}

std::vector<std::uint8_t> decode_table_hex(std::string_view hex, std::size_t entries) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  const std::size_t digits = (entries + 3) / 4;
  if (hex.size() != digits) {
    throw ValidationError("table needs " + std::to_string(digits) + " hex digits for " +
                          std::to_string(entries) + " entries, got " + std::to_string(hex.size()));
  }
  std::vector<std::uint8_t> table(entries, 0);
  for (std::size_t d = 0; d < digits; ++d) {
    const int nibble = hex_value(hex[digits - 1 - d]);
    if (nibble < 0) throw ValidationError("table contains a non-hex character");
    for (int b = 0; b < 4; ++b) {
      if (!((nibble >> b) & 1)) continue;
      const std::size_t i = 4 * d + static_cast<std::size_t>(b);
      if (i >= entries) throw ValidationError("table sets bits beyond its 2^n entries");
      table[i] = 1;
    }
  }
  return table;
}

Json to_json(const BooleanFunction& f) {
  Json j{{"n", f.dimension()}, {"table", encode_table_hex(f.table())}};
  if (const auto& junta = f.junta_backing()) {
    j["junta"] = Json{{"vars", variables_json(junta->variables)},
                      {"inner_table", encode_table_hex(junta->inner_table)}};
  }
  return j;
}

BooleanFunction function_from_json(const Json& j) {
  reject_unknown_keys(j, {"n", "table", "junta"}, "function");
  const int n = required<int>(j, "n");
  check_dimension(n);
  auto table = decode_table_hex(required<std::string>(j, "table"), std::size_t{1} << n);
  if (!j.contains("junta")) return BooleanFunction(n, std::move(table));

  const Json& junta = j.at("junta");
  reject_unknown_keys(junta, {"vars", "inner_table"}, "junta");
  const IndexSet vars = variables_from_json(junta.at("vars"));
  auto inner = decode_table_hex(required<std::string>(junta, "inner_table"), std::size_t{1} << vars.size());
  auto f = BooleanFunction::from_junta(n, vars, std::move(inner));
  if (f.table() != table) throw ValidationError("junta backing disagrees with the truth table");
  return f;
}

Json to_json(const Distribution& d) {
  Json support = Json::array();
  for (const auto& p : d.support()) {
    support.push_back(Json{{"x", BitString(d.dimension(), p.point).to_string()}, {"w", p.weight}});
  }
  return Json{{"n", d.dimension()}, {"support", std::move(support)}};
}

Distribution distribution_from_json(const Json& j) {
  reject_unknown_keys(j, {"n", "dense", "support"}, "distribution");
  const int n = required<int>(j, "n");
  check_dimension(n);
  if (j.contains("dense") == j.contains("support")) {
    throw ValidationError("distribution needs exactly one of 'dense' or 'support'");
  }
  if (j.contains("dense")) {
    const auto weights = required<std::vector<double>>(j, "dense");
    return make_distribution(n, std::span<const double>(weights));
  }
  const Json& support = j.at("support");
  if (!support.is_array()) throw ValidationError("'support' must be an array");
  std::vector<SupportPoint> points;
  for (const auto& entry : support) {
    reject_unknown_keys(entry, {"x", "w"}, "support entry");
    const auto x = BitString::parse(required<std::string>(entry, "x"));
    if (x.dimension() != n) throw ValidationError("support point length differs from n");
    points.push_back({x.value(), required<double>(entry, "w")});
  }
  return make_distribution(n, std::span<const SupportPoint>(points));
}

Json to_json(const QueryLedger& ledger) {
  return Json{{"classical_queries", ledger.classical_queries},
              {"classical_samples", ledger.classical_samples},
              {"quantum_queries", ledger.quantum_queries},
              {"total", ledger.total()}};
}

Json to_json(const DistanceCertificate& cert) {
  return Json{{"distance", cert.distance},
              {"best_subset", variables_json(cert.best_subset)},
              {"best_junta", to_json(cert.best_junta)}};
}

Json to_json(const RestrictedSpectrum& spectrum) {
  Json coefficients = Json::object();
  for (std::size_t j = 0; j < spectrum.size(); ++j) {
    coefficients[subset_key(spectrum.subset_at(j))] = spectrum.coefficient_at(j);
  }
  const auto& cube = spectrum.base_cube();
  return Json{{"cube", Json{{"x", cube.x().to_string()}, {"y", cube.y().to_string()}}},
              {"free_variables", variables_json(cube.free_variables())},
              {"coefficients", std::move(coefficients)},
              {"squared_sum", spectrum.squared_norm()}};
}

Json to_json(const TraceRecord& record) {
  return Json{{"iteration", record.iteration},
              {"action", std::string(to_string(record.action))},
              {"potential", record.potential},
              {"relevant_count", record.relevant_count},
              {"cube_count", record.cube_count}};
}

Json to_json(const Verdict& verdict) {
  return Json{{"decision", std::string(to_string(verdict.decision))},
              {"ledger", to_json(verdict.ledger)},
              {"iterations", verdict.final_state.iteration},
              {"relevant", variables_json(verdict.final_state.relevant)},
              {"cube_count", verdict.final_state.cubes.size()}};
}

std::string trace_to_jsonl(const TesterState& state) {
  std::string out;
  for (const auto& r : state.trace) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

Json to_json(const TrialReport& report) {
  Json j{{"trials", report.trials},
         {"rejections", report.rejections},
         {"acceptance_rate", report.acceptance_rate},
         {"rejection_rate", report.rejection_rate},
         {"confidence_interval",
          Json{{"level", 0.99}, {"lo", report.confidence_interval.first}, {"hi", report.confidence_interval.second}}},
         {"ledger_aggregates", Json{{"classical_queries", stats_json(report.classical_queries)},
                                    {"classical_samples", stats_json(report.classical_samples)},
                                    {"quantum_queries", stats_json(report.quantum_queries)},
                                    {"total", stats_json(report.total_queries)}}},
         {"iterations", stats_json(report.iterations)},
         {"potential_growth_rate", report.potential_growth_rate},
         {"growth_opportunities", report.growth_opportunities}};
  j["certified_distance"] = report.certified_distance ? Json(*report.certified_distance) : Json(nullptr);
  return j;
}

std::string outcomes_to_csv(const TrialReport& report) {
  std::ostringstream out;
  out << "trial,decision,classical_queries,classical_samples,quantum_queries,iterations\n";
  for (std::size_t i = 0; i < report.outcomes.size(); ++i) {
    const auto& o = report.outcomes[i];
    out << i << ',' << to_string(o.decision) << ',' << o.ledger.classical_queries << ','
        << o.ledger.classical_samples << ',' << o.ledger.quantum_queries << ',' << o.iterations << '\n';
  }
  return out.str();
}

Json to_json(const ExperimentConfig& config) {
  return Json{{"n", config.n},
              {"k", config.k},
              {"eps", config.eps},
              {"trials", config.trials},
              {"master_seed", config.master_seed},
              {"variant", std::string(to_string(config.variant))},
              {"fixture", Json{{"family", std::string(to_string(config.fixture.family))},
                               {"distribution", std::string(to_string(config.fixture.distribution))},
                               {"support_size", config.fixture.support_size},
                               {"per_trial", config.fixture.per_trial}}}};
}

ExperimentConfig config_from_json(const Json& j) {
  reject_unknown_keys(j, {"n", "k", "eps", "trials", "master_seed", "variant", "fixture"}, "config");
  ExperimentConfig c;
  c.n = required<int>(j, "n");
  c.k = required<int>(j, "k");
  c.eps = required<double>(j, "eps");
  c.trials = required<int>(j, "trials");
  if (!j.contains("master_seed") || !j.at("master_seed").is_number_unsigned()) {
    throw ValidationError("'master_seed' must be a nonnegative integer");
  }
  c.master_seed = j.at("master_seed").get<std::uint64_t>();
  if (j.contains("variant")) c.variant = parse_variant(required<std::string>(j, "variant"));
  if (j.contains("fixture")) {
    const Json& fx = j.at("fixture");
    reject_unknown_keys(fx, {"family", "distribution", "support_size", "per_trial"}, "fixture");
    c.fixture.family = parse_family(required<std::string>(fx, "family"));
    if (fx.contains("distribution")) {
      c.fixture.distribution = parse_distribution_kind(required<std::string>(fx, "distribution"));
    }
    if (fx.contains("support_size")) c.fixture.support_size = required<int>(fx, "support_size");
    if (fx.contains("per_trial")) c.fixture.per_trial = required<bool>(fx, "per_trial");
  }
  c.validate();
  return c;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

}  // namespace qjunta::io
