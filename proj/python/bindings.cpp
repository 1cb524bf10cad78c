#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qjunta/errors.hpp"
#include "qjunta/harness.hpp"
#include "qjunta/io.hpp"
#include "qjunta/quantum.hpp"
#include "qjunta/tester.hpp"

namespace py = pybind11;
using namespace qjunta;

namespace {

IndexSet to_set(const std::vector<int>& variables) { return IndexSet::of(std::span<const int>(variables)); }

Cube to_cube(const std::string& x, const std::string& y) { return Cube(BitString::parse(x), BitString::parse(y)); }

// Python sees JSON documents as plain strings; the package wrapper decodes them.
std::string dump(const io::Json& j) { return j.dump(); }

io::Json parse(const std::string& text) {
  try {
    return io::Json::parse(text);
  } catch (const io::Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

Distribution distribution_from(int n, const py::object& weights) {
  if (py::isinstance<py::dict>(weights)) {
    std::vector<SupportPoint> points;
    for (const auto& [key, value] : weights.cast<py::dict>()) {
      const auto text = key.cast<std::string>();
      if (static_cast<int>(text.size()) != n) throw ValidationError("support point length does not match n");
      points.push_back({BitString::parse(text).value(), value.cast<double>()});
    }
    return Distribution::sparse(n, points);
  }
  const auto dense = weights.cast<std::vector<double>>();
  return Distribution::dense(n, dense);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Junta testing under arbitrary distributions, with simulated quantum sampling";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<CertificationError>(m, "CertificationError", base.ptr());
  py::register_exception<ResourceCapError>(m, "ResourceCapError", base.ptr());

  py::class_<BooleanFunction>(m, "BooleanFunction")
      .def(py::init<int, std::vector<std::uint8_t>>(), py::arg("n"), py::arg("table"))
      .def_static("constant", &BooleanFunction::constant, py::arg("n"), py::arg("value"))
      .def_static(
          "parity", [](int n, const std::vector<int>& vars) { return BooleanFunction::parity(n, to_set(vars)); },
          py::arg("n"), py::arg("variables"))
      .def_static("dictator", &BooleanFunction::dictator, py::arg("n"), py::arg("variable"))
      .def_static(
          "from_junta",
          [](int n, const std::vector<int>& vars, std::vector<std::uint8_t> inner) {
            return BooleanFunction::from_junta(n, to_set(vars), std::move(inner));
          },
          py::arg("n"), py::arg("variables"), py::arg("inner_table"))
      .def_static(
          "from_json", [](const std::string& text) { return io::function_from_json(parse(text)); },
          py::arg("text"))
      .def_property_readonly("n", &BooleanFunction::dimension)
      .def_property_readonly("table", [](const BooleanFunction& f) { return f.table(); })
      .def("__call__", [](const BooleanFunction& f, const std::string& x) { return f(BitString::parse(x)); })
      .def("to_json", [](const BooleanFunction& f) { return dump(io::to_json(f)); })
      .def("__eq__", [](const BooleanFunction& a, const BooleanFunction& b) { return a == b; });

  py::class_<Distribution>(m, "Distribution")
      .def(py::init(&distribution_from), py::arg("n"), py::arg("weights"),
           "weights: a list of 2^n dense weights or a dict mapping bit-strings to weights")
      .def_static("uniform", &Distribution::uniform, py::arg("n"))
      .def_static(
          "point_mass", [](const std::string& x) { return Distribution::point_mass(BitString::parse(x)); },
          py::arg("x"))
      .def_static(
          "from_json", [](const std::string& text) { return io::distribution_from_json(parse(text)); },
          py::arg("text"))
      .def_property_readonly("n", &Distribution::dimension)
      .def("probability",
           [](const Distribution& d, const std::string& x) { return d.probability(BitString::parse(x).value()); })
      .def("support",
           [](const Distribution& d) {
             std::vector<std::pair<std::string, double>> out;
             for (const auto& p : d.support()) out.emplace_back(BitString(d.dimension(), p.point).to_string(), p.weight);
             return out;
           })
      .def("to_json", [](const Distribution& d) { return dump(io::to_json(d)); });

  m.def(
      "relevant_variables", [](const BooleanFunction& f) { return relevant_variables(f).variables(); },
      py::arg("f"));
  m.def("is_k_junta", &is_k_junta, py::arg("f"), py::arg("k"));
  m.def(
      "restricted_spectrum",
      [](const BooleanFunction& f, const std::string& x, const std::string& y) {
        return dump(io::to_json(restricted_spectrum(f, to_cube(x, y))));
      },
      py::arg("f"), py::arg("x"), py::arg("y"));
  m.def(
      "distance_to_k_junta",
      [](const BooleanFunction& f, const Distribution& d, int k) {
        py::gil_scoped_release release;
        return dump(io::to_json(distance_to_k_junta(f, d, k)));
      },
      py::arg("f"), py::arg("d"), py::arg("k"));
  m.def(
      "fourier_sample",
      [](const BooleanFunction& f, const std::string& x, const std::string& y, int draws, std::uint64_t seed) {
        QueryLedger ledger;
        MembershipOracle oracle(f, ledger);
        RandomStream rng(seed);
        const Cube cube = to_cube(x, y);
        std::vector<std::vector<int>> out;
        out.reserve(static_cast<std::size_t>(draws));
        for (int i = 0; i < draws; ++i) out.push_back(quantum::fourier_sample(oracle, cube, rng).variables());
        return out;
      },
      py::arg("f"), py::arg("x"), py::arg("y"), py::arg("draws") = 1, py::arg("seed") = 0);
  m.def(
      "run_tester",
      [](const BooleanFunction& f, const Distribution& d, int k, double eps, std::uint64_t seed,
         const std::string& variant) {
        py::gil_scoped_release release;
        QueryLedger ledger;
        MembershipOracle oracle(f, ledger);
        SampleOracle sampler(d, ledger);
        RandomStream rng(seed);
        return dump(io::to_json(run_tester(oracle, sampler, k, eps, rng, parse_variant(variant))));
      },
      py::arg("f"), py::arg("d"), py::arg("k"), py::arg("eps"), py::arg("seed"), py::arg("variant") = "classical");
  m.def(
      "run_trials",
      [](const std::string& config_text) {
        const auto config = io::config_from_json(parse(config_text));
        py::gil_scoped_release release;
        return dump(io::to_json(run_trials(config)));
      },
      py::arg("config"));
  m.def("wilson_interval", &wilson_interval, py::arg("successes"), py::arg("trials"), py::arg("z") = kWilsonZ99);
}
