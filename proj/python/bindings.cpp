#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cogkit/catalog.hpp"
#include "cogkit/immersion.hpp"
#include "cogkit/io.hpp"
#include "cogkit/ops.hpp"
#include "cogkit/presentation.hpp"

namespace py = pybind11;
using namespace cogkit;

namespace {

py::list violations(const Report& r) {
  py::list out;
  for (const auto& v : r.violations()) out.append(py::make_tuple(std::string(to_string(v.code)), v.witness));
  return out;
}

Report check_complex(const ComplexOfGroups& c) {
  Report r = validate_scwol(*c.base);
  if (r.ok()) r = validate_cog(c);
  return r;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite complexes of groups";

  // The module holds the type; the translator only borrows it.
  static PyObject* error_type = py::exception<Error>(m, "CogkitError").ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  m.def(
      "run",
      [](const std::string& command, std::vector<std::string> paths, std::optional<std::string> cog,
         std::optional<std::string> scwol, std::optional<std::string> mor, std::optional<std::string> vertex,
         std::string tree, std::optional<std::string> format, std::uint64_t seed, std::size_t count,
         std::size_t budget) {
        Options o;
        o.paths = std::move(paths);
        o.cog = std::move(cog);
        o.scwol = std::move(scwol);
        o.mor = std::move(mor);
        o.vertex = std::move(vertex);
        o.tree = std::move(tree);
        o.format = std::move(format);
        o.seed = seed;
        o.count = count;
        o.budget = budget;
        Outcome out;
        {
          py::gil_scoped_release release;
          out = run_command(command, o);
        }
        return py::make_tuple(out.exit_code, out.output, out.error);
      },
      py::arg("command"), py::arg("paths") = std::vector<std::string>{}, py::arg("cog") = py::none(),
      py::arg("scwol") = py::none(), py::arg("mor") = py::none(), py::arg("vertex") = py::none(),
      py::arg("tree") = "bfs", py::arg("format") = py::none(), py::arg("seed") = 1, py::arg("count") = 20,
      py::arg("budget") = kDefaultSearchBudget,
      "Runs a subcommand; returns (exit_code, output, error).");
  m.def("commands", &command_names);

  py::class_<FiniteGroup, std::shared_ptr<FiniteGroup>>(m, "Group")
      .def_static(
          "from_table",
          [](const std::vector<std::vector<Elem>>& t, Elem e) {
            return std::make_shared<FiniteGroup>(FiniteGroup::from_cayley_table(t, e));
          },
          py::arg("table"), py::arg("identity") = 0)
      .def_static(
          "from_permutations",
          [](std::size_t degree, const std::vector<Permutation>& gens) {
            return std::make_shared<FiniteGroup>(FiniteGroup::from_permutation_generators(degree, gens));
          },
          py::arg("degree"), py::arg("generators"))
      .def_static("cyclic", [](std::size_t n) { return std::make_shared<FiniteGroup>(*cyclic_group(n)); })
      .def_static("dihedral", [](std::size_t n) { return std::make_shared<FiniteGroup>(*dihedral_group(n)); })
      .def_static("symmetric", [](std::size_t n) { return std::make_shared<FiniteGroup>(*symmetric_group(n)); })
      .def_static("quaternion", [] { return std::make_shared<FiniteGroup>(*quaternion_group()); })
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("element_order", &FiniteGroup::element_order)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("table", &FiniteGroup::table)
      .def("abelian_invariants", [](const FiniteGroup& g) { return abelian_invariants(g); })
      .def("__len__", &FiniteGroup::order);

  py::class_<Workspace>(m, "Workspace")
      .def(py::init<>())
      .def("load", [](Workspace& ws, const std::string& path) { ws.load_path(path); })
      .def("load_text", &Workspace::load_text, py::arg("text"), py::arg("where") = "<string>")
      .def("items", &Workspace::items)
      .def("ids", &Workspace::ids_of_kind, py::arg("kind"))
      .def("validate", [](Workspace& ws, const std::string& id) { return violations(check_complex(*ws.complex(id))); })
      .def("local_orders",
           [](Workspace& ws, const std::string& id) {
             std::vector<std::size_t> out;
             for (const auto& g : ws.complex(id)->groups) out.push_back(g->order());
             return out;
           })
      .def("abelianization",
           [](Workspace& ws, const std::string& id) {
             const CogPtr c = ws.complex(id);
             return abelianization(pi1_presentation(*c, maximal_tree(*c->base)));
           })
      .def("is_immersion",
           [](Workspace& ws, const std::string& id) { return check_immersion(ws.cog_morphism(id)).immersion; })
      .def("f_vector", [](Workspace& ws, const std::string& id) {
        return geometric_realization(*ws.scwol_like(id)).f_vector();
      });
}
