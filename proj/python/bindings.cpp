#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "syzygy/audit.hpp"
#include "syzygy/corpus.hpp"
#include "syzygy/ideal.hpp"
#include "syzygy/numtheory.hpp"
#include "syzygy/template.hpp"

namespace py = pybind11;
using namespace syz;

namespace {

std::string betti_json(const std::string& ideal_json, std::optional<int> i_max, int row_cap) {
  auto ideal = ideal_from_json(ideal_json);
  AuditOptions opt;
  opt.i_max = i_max;
  opt.row_cap = row_cap;
  return visit_field(ideal.field, [&](auto f) {
    QuotientAlgebra<decltype(f)> a(f, ideal.num_vars(), ideal.generators);
    return compute_invariants(a, ideal.metadata, opt).betti.to_json();
  });
}

std::string audit_json(const std::string& ideal_json, const std::vector<std::string>& checks,
                       std::optional<int> i_max, int heavy_max_vars) {
  AuditOptions opt;
  opt.only = {checks.begin(), checks.end()};
  opt.i_max = i_max;
  opt.heavy_max_vars = heavy_max_vars;
  return run_audit(ideal_from_json(ideal_json), opt).to_json();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("binom_mod", &binom_mod, py::arg("n"), py::arg("i"), py::arg("p"));
  m.def(
      "is_good",
      [](std::uint32_t p, int n) {
        auto v = is_good(p, n);
        return py::make_tuple(v.good, to_string(v.kind));
      },
      py::arg("p"), py::arg("n"), "Returns (good, case).");
  m.def("exceptional_prime", &exceptional_prime, py::arg("n"));

  m.def("audit_check_ids", &audit_check_ids);
  m.def("betti_json", &betti_json, py::arg("ideal_json"), py::arg("i_max") = std::nullopt,
        py::arg("row_cap") = 8);
  m.def("audit_json", &audit_json, py::arg("ideal_json"), py::arg("checks") = std::vector<std::string>{},
        py::arg("i_max") = std::nullopt, py::arg("heavy_max_vars") = 6);
  m.def(
      "generate",
      [](const std::string& family, const std::vector<int>& params, std::uint64_t seed,
         std::optional<std::uint32_t> characteristic) {
        return ideal_to_json(generate_family(family, params, seed, characteristic).ideal);
      },
      py::arg("family"), py::arg("params") = std::vector<int>{}, py::arg("seed") = 1,
      py::arg("characteristic") = std::nullopt);
  m.def(
      "template_text", [](int q, int cols, int rows) { return render_template(q, cols, rows).to_text(); },
      py::arg("q") = 2, py::arg("cols") = 14, py::arg("rows") = 9);
}
