#include <sym3inv/cli.hpp>
#include <sym3inv/optimizer.hpp>
#include <sym3inv/syzygy.hpp>
#include <sym3inv/tensor_io.hpp>
#include <sym3inv/witness.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using nlohmann::json;

namespace {

// Components arrive as a JSON array: strings for rationals, numbers for floats.
sym3::AnyTensor parse_components(const std::string& components) {
  const json c = json::parse(components);
  const bool exact = !c.empty() && c[0].is_string();
  return sym3::tensor_from_json({{"format", "sym3-v1"}, {"field", exact ? "rational" : "float"}, {"components", c}});
}

std::string invariants(const std::string& components) {
  return std::visit(
      [](const auto& t) {
        const auto inv = sym3::invariants_of(t);
        json out = json::object();
        for (int i = 0; i < sym3::kInvariantCount; ++i)
          out[std::string(sym3::kInvariantInfo[i].name)] = sym3::scalar_to_json(inv.values[i]);
        return out.dump();
      },
      parse_components(components));
}

std::string decompose(const std::string& components) {
  return std::visit(
      [](const auto& t) {
        const auto h = sym3::decompose(t);
        json d = json::array();
        for (const auto& x : h.deviator.c) d.push_back(sym3::scalar_to_json(x));
        json u = json::array();
        for (const auto& x : h.vector.e) u.push_back(sym3::scalar_to_json(x));
        return json{{"deviator", d}, {"vector", u}}.dump();
      },
      parse_components(components));
}

std::string discover(int basis, int degree, std::uint64_t seed) {
  sym3::DiscoveryOptions opt;
  opt.basis = basis == 11 ? sym3::Basis::Eleven : sym3::Basis::Thirteen;
  opt.degree = degree;
  opt.seed = seed;
  const auto d = sym3::discover_relations(opt);
  json rels = json::array();
  for (const auto& r : d.relations) {
    json terms = json::array();
    for (const auto& t : r.terms()) terms.push_back({sym3::format_rational(t.coefficient), t.product.to_string()});
    rels.push_back(terms);
  }
  json known = json::object();
  for (const auto& r : sym3::builtin_relations())
    if (r.degree() == degree && r.basis() == opt.basis) known[r.name()] = sym3::spans_relation(d, r);
  return json{{"products", d.products.size()}, {"rank", d.rank}, {"relations", rels}, {"builtin_in_span", known}}
      .dump();
}

std::string witness(const std::string& name, std::optional<double> theta,
                    std::optional<std::array<double, 4>> abcd) {
  const auto which = sym3::witness_case_from_name(name);
  if (!which) throw std::invalid_argument("unknown witness case " + name);
  const auto r = sym3::run_witness(*which, {theta, abcd});
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(sym3::check_to_json(c));
  return json{{"pass", r.pass}, {"checks", checks}, {"details", r.details}}.dump();
}

std::string minimize(std::uint64_t seed, int starts, int iters) {
  const auto m = sym3::opt::minimize(seed, starts, iters);
  return json{{"value", m.value},
              {"gradient_norm", m.gradient_norm},
              {"deviator", m.best.deviator().c},
              {"vector", m.best.vector().e}}
      .dump();
}

py::tuple run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sym3inv");
  const auto o = sym3::cli::run(args);
  return py::make_tuple(o.exit_code, o.out, o.err);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Invariants of symmetric third-order tensors (JSON-string interface).";
  m.def("invariants", &invariants, py::arg("components"));
  m.def("decompose", &decompose, py::arg("components"));
  m.def("discover", &discover, py::arg("basis"), py::arg("degree"), py::arg("seed"));
  m.def("witness", &witness, py::arg("case"), py::arg("theta") = py::none(), py::arg("abcd") = py::none());
  m.def("minimize", &minimize, py::arg("seed"), py::arg("starts") = 200, py::arg("iters") = 500);
  m.def("reported_minimizer_value", [] { return sym3::opt::objective(sym3::opt::reported_minimizer()); });
  m.def("run_cli", &run_cli, py::arg("args"));
}
