#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "acx/suites.hpp"

namespace py = pybind11;
using namespace acx;

namespace {

py::dict validation_to_dict(const ValidationReport& rep, uint32_t n) {
  py::dict out;
  out["pass"] = rep.pass;
  py::list entries;
  for (const auto& e : rep.entries) {
    py::dict d;
    d["gamma"] = idx_name(n, e.gamma);
    d["residual"] = e.residual.str();
    d["zero"] = e.residual.is_zero();
    entries.append(d);
  }
  out["entries"] = entries;
  return out;
}

Manifest load_manifest(const std::string& path) { return parse_manifest(path); }

py::dict run_suite_py(const std::string& path, const std::string& suite,
                      py::object seed_obj, py::object max_degree_obj) {
  Manifest m = load_manifest(path);
  uint64_t seed = seed_obj.is_none() ? m.seed : seed_obj.cast<uint64_t>();
  int md = max_degree_obj.is_none() ? m.sweep_degree() : max_degree_obj.cast<int>();
  Report rep = run_suite(m, suite, seed, md);
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(rep.to_json().dump());
}

py::list cohomology_dims_py(const std::string& path) {
  Manifest m = load_manifest(path);
  FrameSpec spec = m.to_spec();
  spec.ensure_valid();
  py::list rows;
  for (int p = 0; p <= static_cast<int>(m.n); ++p)
    for (int q = 0; q <= static_cast<int>(m.n); ++q) {
      DolbeaultCohomology dol = dolbeault_cohomology(spec, p, q);
      py::dict row;
      row["p"] = p;
      row["q"] = q;
      row["mubar"] = dol.dim_mubar;
      row["dolbeault"] = dol.dim;
      rows.append(row);
    }
  return rows;
}

py::dict deform_check_py(const std::string& path, const std::string& check,
                         const std::string& phi, const std::string& form) {
  Manifest m = load_manifest(path);
  FrameSpec spec = m.to_spec();
  spec.ensure_valid();
  auto pit = m.beltrami.find(phi);
  if (pit == m.beltrami.end()) fail(Errc::ParseError, "unknown beltrami '" + phi + "'");
  py::dict out;
  out["check"] = check;
  if (check == "mc") {
    VectorForm mc = maurer_cartan(spec, pit->second);
    out["flat"] = mc.is_zero();
    out["residual"] = mc.str();
    return out;
  }
  auto fit = m.forms.find(form);
  if (fit == m.forms.end()) fail(Errc::ParseError, "unknown form '" + form + "'");
  DeformedStructure ds(spec, pit->second);
  bool predicate, native;
  if (check == "prop2") {
    predicate = n0_closedness_predicate(ds, fit->second);
    native = n0_closed_native(ds, fit->second);
  } else if (check == "thm5") {
    predicate = dolbeault_class_predicate(ds, fit->second);
    native = dolbeault_class_native(ds, fit->second);
  } else if (check == "thm6") {
    predicate = nq_closedness_predicate(ds, fit->second);
    native = nq_closed_native(ds, fit->second);
  } else {
    fail(Errc::ParseError, "unknown deform check '" + check + "'");
  }
  out["predicate"] = predicate;
  out["native"] = native;
  out["agree"] = predicate == native;
  return out;
}

py::dict validate_py(const std::string& path) {
  Manifest m = load_manifest(path);
  FrameSpec spec = m.to_spec();
  return validation_to_dict(spec.validate(), m.n);
}

py::list dtheta_py(const std::string& path) {
  Manifest m = load_manifest(path);
  py::list out;
  for (uint32_t g = 0; g < m.n; ++g) out.append(m.dtheta[g].str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_acx, mod) {
  mod.doc() = "exact bigraded exterior calculus on invariant frames";

  py::register_exception<Error>(mod, "AcxError");

  mod.def("validate", &validate_py, py::arg("manifest"),
          "frame validation report for a manifest file");
  mod.def("run_suite", &run_suite_py, py::arg("manifest"), py::arg("suite") = "all",
          py::arg("seed") = py::none(), py::arg("max_degree") = py::none(),
          "run an identity suite; returns the report as a dict");
  mod.def("cohomology_dims", &cohomology_dims_py, py::arg("manifest"),
          "invariant μ̄/Dolbeault cohomology dimensions for all (p,q)");
  mod.def("deform_check", &deform_check_py, py::arg("manifest"), py::arg("check"),
          py::arg("phi"), py::arg("form") = "",
          "evaluate mc/prop2/thm5/thm6 for named inputs");
  mod.def("dtheta_table", &dtheta_py, py::arg("manifest"),
          "string form of the structure table");
  mod.def("suite_names", [] { return suite_names(); });
}
