// qjunta: command-line front end for the junta tester.
//
// stdout carries only JSON; diagnostics go to stderr.
// Exit codes: 0 success, 2 validation, 3 certification failure,
// 4 resource cap, 1 anything else.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qjunta/distribution.hpp"
#include "qjunta/errors.hpp"
#include "qjunta/harness.hpp"
#include "qjunta/io.hpp"
#include "qjunta/oracles.hpp"
#include "qjunta/tester.hpp"

namespace {

using qjunta::io::Json;

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw qjunta::ValidationError("cannot write " + path);
  out << contents;
}

struct RunArgs {
  std::string function_path, dist_path, variant = "classical", trace_path;
  int k = 0;
  double eps = 0.0;
  std::uint64_t seed = 0;
};

int cmd_run(const RunArgs& a) {
  const auto f = qjunta::io::function_from_json(qjunta::io::read_json_file(a.function_path));
  const auto d = qjunta::io::distribution_from_json(qjunta::io::read_json_file(a.dist_path));
  const auto variant = qjunta::parse_variant(a.variant);
  qjunta::QueryLedger ledger;
  qjunta::MembershipOracle oracle(f, ledger);
  qjunta::SampleOracle sampler(d, ledger);
  qjunta::RandomStream rng(a.seed);
  const auto verdict = qjunta::run_tester(oracle, sampler, a.k, a.eps, rng, variant);
  if (!a.trace_path.empty()) write_file(a.trace_path, qjunta::io::trace_to_jsonl(verdict.final_state));
  std::cout << qjunta::io::to_json(verdict).dump(2) << '\n';
  return 0;
}

int cmd_experiment(const std::string& config_path, const std::string& csv_path, std::optional<int> trials) {
  auto config = qjunta::io::config_from_json(qjunta::io::read_json_file(config_path));
  if (trials) {
    config.trials = *trials;
    config.validate();
  }
  const auto report = qjunta::run_trials(config);
  if (!csv_path.empty()) write_file(csv_path, qjunta::io::outcomes_to_csv(report));
  Json out = qjunta::io::to_json(report);
  out["config"] = qjunta::io::to_json(config);
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_distance(const std::string& function_path, const std::string& dist_path, int k) {
  const auto f = qjunta::io::function_from_json(qjunta::io::read_json_file(function_path));
  const auto d = qjunta::io::distribution_from_json(qjunta::io::read_json_file(dist_path));
  if (k < 0) throw qjunta::ValidationError("k must be nonnegative");
  std::cout << qjunta::io::to_json(qjunta::distance_to_k_junta(f, d, k)).dump(2) << '\n';
  return 0;
}

int cmd_spectrum(const std::string& function_path, const std::string& cube_x, const std::string& cube_y) {
  const auto f = qjunta::io::function_from_json(qjunta::io::read_json_file(function_path));
  const qjunta::Cube cube(qjunta::BitString::parse(cube_x), qjunta::BitString::parse(cube_y));
  std::cout << qjunta::io::to_json(qjunta::restricted_spectrum(f, cube)).dump(2) << '\n';
  return 0;
}

struct GenArgs {
  std::string family, distribution = "uniform", out_function, out_dist;
  int n = 0, k = 0, support = 32;
  double eps = 0.1;
  std::uint64_t seed = 0;
};

int cmd_gen(const GenArgs& a) {
  qjunta::ExperimentConfig config;
  config.n = a.n;
  config.k = a.k;
  config.eps = a.eps;
  config.trials = 1;
  config.fixture.family = qjunta::parse_family(a.family);
  config.fixture.distribution = qjunta::parse_distribution_kind(a.distribution);
  config.fixture.support_size = a.support;
  config.validate();
  qjunta::RandomStream rng(a.seed);
  const auto fixture = qjunta::make_fixture(config, rng);
  write_file(a.out_function, qjunta::io::to_json(fixture.function).dump() + "\n");
  write_file(a.out_dist, qjunta::io::to_json(fixture.distribution).dump() + "\n");
  Json out{{"function", a.out_function}, {"dist", a.out_dist}};
  out["certified_distance"] = fixture.certificate ? Json(fixture.certificate->distance) : Json(nullptr);
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum distribution-free junta tester (exact simulation)", "qjunta"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run the tester once and print the verdict");
  run_cmd->add_option("--function", run.function_path, "Function JSON")->required();
  run_cmd->add_option("--dist", run.dist_path, "Distribution JSON")->required();
  run_cmd->add_option("--k", run.k, "Junta size")->required();
  run_cmd->add_option("--eps", run.eps, "Distance parameter")->required();
  run_cmd->add_option("--seed", run.seed, "Random seed")->required();
  run_cmd->add_option("--variant", run.variant, "classical|amplified");
  run_cmd->add_option("--trace", run.trace_path, "Write the iteration trace as JSON lines");

  std::string config_path, csv_path;
  std::optional<int> trials;
  auto* exp_cmd = app.add_subcommand("experiment", "Run a seeded Monte Carlo experiment");
  exp_cmd->add_option("--config", config_path, "Experiment config JSON")->required();
  exp_cmd->add_option("--csv", csv_path, "Write per-trial CSV");
  exp_cmd->add_option("--trials", trials, "Override the trial count from the config");

  std::string dist_function, dist_dist;
  int dist_k = 0;
  auto* dist_cmd = app.add_subcommand("distance", "Certify the exact distance to the nearest k-junta");
  dist_cmd->add_option("--function", dist_function, "Function JSON")->required();
  dist_cmd->add_option("--dist", dist_dist, "Distribution JSON")->required();
  dist_cmd->add_option("--k", dist_k, "Junta size")->required();

  std::string spec_function, cube_x, cube_y;
  auto* spec_cmd = app.add_subcommand("spectrum", "Print the Fourier spectrum of f restricted to a cube");
  spec_cmd->add_option("--function", spec_function, "Function JSON")->required();
  spec_cmd->add_option("--cube-x", cube_x, "Corner x, variable 1 first")->required();
  spec_cmd->add_option("--cube-y", cube_y, "Corner y, variable 1 first")->required();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate fixture files");
  gen_cmd->add_option("--family", gen.family, "junta|parity|random_function|planted|point_mass")->required();
  gen_cmd->add_option("--n", gen.n, "Dimension")->required();
  gen_cmd->add_option("--k", gen.k, "Junta size")->required();
  gen_cmd->add_option("--eps", gen.eps, "Certified distance for far families");
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->required();
  gen_cmd->add_option("--distribution", gen.distribution, "uniform|sparse (junta family)");
  gen_cmd->add_option("--support", gen.support, "Support size for sparse distributions");
  gen_cmd->add_option("--out-function", gen.out_function, "Output function JSON")->required();
  gen_cmd->add_option("--out-dist", gen.out_dist, "Output distribution JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return 2;
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*exp_cmd) return cmd_experiment(config_path, csv_path, trials);
    if (*dist_cmd) return cmd_distance(dist_function, dist_dist, dist_k);
    if (*spec_cmd) return cmd_spectrum(spec_function, cube_x, cube_y);
    if (*gen_cmd) return cmd_gen(gen);
  } catch (const qjunta::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const qjunta::CertificationError& e) {
    std::cerr << "certification failed: " << e.what() << '\n';
    return 3;
  } catch (const qjunta::ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
