#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

struct Result {
  int exit_code;
  std::string out;
};

Result run_cli(const std::string& args) {
  const std::string command = std::string(QJUNTA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer{};
  while (std::fgets(buffer.data(), buffer.size(), pipe) != nullptr) out += buffer.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("qjunta_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  void write(const std::string& name, const std::string& contents) const { std::ofstream(file(name)) << contents; }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("cli run") {
  TempDir dir;
  const auto gen = run_cli("gen --family junta --n 10 --k 2 --seed 3 --distribution sparse --support 16 --out-function " +
                           dir.file("f.json") + " --out-dist " + dir.file("d.json"));
  REQUIRE(gen.exit_code == 0);
  for (int seed = 0; seed < 5; ++seed) {
    const auto r = run_cli("run --function " + dir.file("f.json") + " --dist " + dir.file("d.json") +
                           " --k 2 --eps 0.1 --seed " + std::to_string(seed) + " --trace " + dir.file("t.jsonl"));
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["decision"] == "accept");
    CHECK(j["ledger"]["classical_samples"].get<int>() >= 0);
    CHECK(fs::exists(dir.file("t.jsonl")));
  }

  dir.write("bad.json", "{ not json");
  CHECK(run_cli("run --function " + dir.file("bad.json") + " --dist " + dir.file("d.json") +
                " --k 2 --eps 0.1 --seed 1")
            .exit_code == 2);
  CHECK(run_cli("run --function " + dir.file("f.json") + " --dist " + dir.file("d.json") + " --k 2 --eps 0 --seed 1")
            .exit_code == 2);
  // Seeds are mandatory.
  CHECK(run_cli("run --function " + dir.file("f.json") + " --dist " + dir.file("d.json") + " --k 2 --eps 0.1")
            .exit_code == 2);
  CHECK(run_cli("run --function " + dir.file("f.json") + " --dist " + dir.file("d.json") +
                " --k 2 --eps 0.1 --seed 1 --bogus 3")
            .exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("cli run output is deterministic") {
  TempDir dir;
  REQUIRE(run_cli("gen --family parity --n 8 --k 2 --eps 0.25 --seed 1 --out-function " + dir.file("f.json") +
                  " --out-dist " + dir.file("d.json"))
              .exit_code == 0);
  const std::string args = "run --function " + dir.file("f.json") + " --dist " + dir.file("d.json") +
                           " --k 2 --eps 0.25 --seed 99 --variant amplified";
  const auto a = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == run_cli(args).out);
}

TEST_CASE("cli distance") {
  TempDir dir;
  REQUIRE(run_cli("gen --family junta --n 8 --k 3 --seed 4 --out-function " + dir.file("j.json") + " --out-dist " +
                  dir.file("u.json"))
              .exit_code == 0);
  auto r = run_cli("distance --function " + dir.file("j.json") + " --dist " + dir.file("u.json") + " --k 3");
  REQUIRE(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["distance"] == 0.0);

  const auto gen = run_cli("gen --family parity --n 8 --k 2 --eps 0.3 --seed 4 --out-function " + dir.file("p.json") +
                           " --out-dist " + dir.file("pu.json"));
  REQUIRE(gen.exit_code == 0);
  CHECK(nlohmann::json::parse(gen.out)["certified_distance"] == 0.5);
  r = run_cli("distance --function " + dir.file("p.json") + " --dist " + dir.file("pu.json") + " --k 2");
  REQUIRE(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["distance"] == 0.5);

  CHECK(run_cli("gen --family parity --n 8 --k 2 --eps 0.6 --seed 4 --out-function " + dir.file("x.json") +
                " --out-dist " + dir.file("y.json"))
            .exit_code == 3);

  // C(20,10) * 2^20 is far above the work cap.
  dir.write("big_f.json", R"({"n": 20, "table": ")" + std::string(262144, '0') + R"("})");
  dir.write("big_d.json", R"({"n": 20, "support": [{"x": "00000000000000000000", "w": 1}]})");
  CHECK(run_cli("distance --function " + dir.file("big_f.json") + " --dist " + dir.file("big_d.json") + " --k 10")
            .exit_code == 4);
}

TEST_CASE("cli spectrum") {
  TempDir dir;
  dir.write("and.json", R"({"n": 2, "table": "8"})");
  auto r = run_cli("spectrum --function " + dir.file("and.json") + " --cube-x 00 --cube-y 11");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["coefficients"].size() == 4);
  for (const auto& [key, value] : j["coefficients"].items()) CHECK(std::abs(value.get<double>()) == 0.5);
  CHECK(j["squared_sum"] == 1.0);

  dir.write("const.json", R"({"n": 3, "table": "00"})");
  r = run_cli("spectrum --function " + dir.file("const.json") + " --cube-x 000 --cube-y 101");
  REQUIRE(r.exit_code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["coefficients"]["\xE2\x88\x85"] == 1.0);

  dir.write("parity.json", R"({"n": 3, "table": "96"})");
  r = run_cli("spectrum --function " + dir.file("parity.json") + " --cube-x 000 --cube-y 111");
  REQUIRE(r.exit_code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["coefficients"]["{1,2,3}"].get<double>()) == 1.0);

  CHECK(run_cli("spectrum --function " + dir.file("and.json") + " --cube-x 00 --cube-y 111").exit_code == 2);
}

TEST_CASE("cli experiment") {
  TempDir dir;
  const std::string root = QJUNTA_SOURCE_DIR;
  auto r = run_cli("experiment --config " + root + "/configs/soundness.json --csv " + dir.file("s.csv"));
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rejection_rate"].get<double>() >= 0.466);
  CHECK(j["certified_distance"] == 0.5);
  CHECK(fs::exists(dir.file("s.csv")));
  CHECK(r.out == run_cli("experiment --config " + root + "/configs/soundness.json").out);

  r = run_cli("experiment --config " + root + "/configs/completeness.json");
  REQUIRE(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["acceptance_rate"] == 1.0);

  r = run_cli("experiment --config " + root + "/configs/soundness.json --trials 7");
  REQUIRE(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["trials"] == 7);
  CHECK(run_cli("experiment --config " + root + "/configs/soundness.json --trials 0").exit_code == 2);

  dir.write("zero.json", R"({"n": 8, "k": 2, "eps": 0.1, "trials": 0, "master_seed": 1})");
  CHECK(run_cli("experiment --config " + dir.file("zero.json")).exit_code == 2);
  dir.write("uncertifiable.json",
            R"({"n": 8, "k": 2, "eps": 0.7, "trials": 5, "master_seed": 1, "fixture": {"family": "parity"}})");
  CHECK(run_cli("experiment --config " + dir.file("uncertifiable.json")).exit_code == 3);
}
