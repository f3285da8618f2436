#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ktree/colouring.hpp"
#include "ktree/construct.hpp"
#include "ktree/error.hpp"
#include "ktree/oracle.hpp"
#include "ktree/pipeline.hpp"
#include "ktree/reflect.hpp"
#include "ktree/serialize.hpp"
#include "ktree/stability.hpp"

namespace py = pybind11;
using namespace ktree;

namespace {

std::string tree_module_json(long d, long e, int m, bool stable) {
  TreeModule tm = construct_tree_module(d, e, m, stable);
  Json out;
  out["construction"] = tm.construction;
  out["tuple"] = tm.tuple;
  out["stable"] = tm.stable;
  out["stability_note"] = tm.stability_note;
  out["plan"] = plan_to_json(tm.plan);
  out["stages"] = stages_to_json(tm.stages);
  out["gamma_vertices"] = tm.gamma.vertices.size();
  out["gamma_arrows"] = tm.gamma.arrows.size();
  out["tree"] = is_tree(tm.gamma);
  out["representation"] = representation_to_json(tm.kronecker);
  out["cover"] = representation_to_json(tm.cover);
  return out.dump();
}

std::string verify_json(const std::string& rep, const std::vector<std::string>& checks) {
  return checks_to_json(run_checks(deserialize_representation(rep), checks)).dump();
}

std::string reflect_json(const std::string& rep, bool inverse) {
  Representation x = deserialize_representation(rep);
  return serialize(inverse ? kronecker_coreflect(x) : kronecker_reflect(x));
}

}  // namespace

PYBIND11_MODULE(_ktree, mod) {
  mod.doc() = "Tree modules of the m-Kronecker quiver";
  py::register_exception<PropertyViolation>(mod, "PropertyViolation", PyExc_RuntimeError);

  mod.def("simple_tuple", [](long d, long e, long n) { return simple_tuple(d, e, n).s; }, py::arg("d"), py::arg("e"),
          py::arg("n"));
  mod.def("default_n", &default_n, py::arg("d"), py::arg("e"), py::arg("m"));
  mod.def("brute_simple_tuples", &brute_simple_tuples, py::arg("d"), py::arg("e"), py::arg("n"));
  mod.def("simple_stable", &simple_stable, py::arg("s"));
  mod.def("classify_root", [](long d, long e, long m) { return std::string(to_string(classify_root(d, e, m).kind)); },
          py::arg("d"), py::arg("e"), py::arg("m"));
  mod.def("reflect_dim", &kronecker_reflect_dim, py::arg("d"), py::arg("e"), py::arg("m"));
  mod.def("tree_module_json", &tree_module_json, py::arg("d"), py::arg("e"), py::arg("m") = 3,
          py::arg("stable") = false, py::call_guard<py::gil_scoped_release>());
  mod.def("verify_json", &verify_json, py::arg("representation"), py::arg("checks"),
          py::call_guard<py::gil_scoped_release>());
  mod.def("reflect_json", &reflect_json, py::arg("representation"), py::arg("inverse") = false);
  mod.def(
      "hom_dim",
      [](const std::string& x, const std::string& y) {
        return hom_dim(deserialize_representation(x), deserialize_representation(y));
      },
      py::arg("x"), py::arg("y"));
  mod.def(
      "is_indecomposable",
      [](const std::string& x) { return is_indecomposable(deserialize_representation(x)).indecomposable; },
      py::arg("representation"));
}
