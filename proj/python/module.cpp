#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sombor/anneal.hpp"
#include "sombor/constructor.hpp"
#include "sombor/index.hpp"
#include "sombor/io.hpp"
#include "sombor/oracle.hpp"
#include "sombor/structure.hpp"
#include "sombor/swap.hpp"
#include "sombor/theorems.hpp"

namespace py = pybind11;
using namespace sombor;

namespace {

// Structured results cross the boundary as JSON text; the package decodes them.
std::string dump(const nlohmann::json& j) { return j.dump(); }

Tree tree_from(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> e(edges.begin(), edges.end());
  return Tree(n, e);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Maximum Sombor index trees for a given degree sequence";

  py::register_exception<Error>(m, "SomborError", PyExc_ValueError);

  py::class_<Tree>(m, "Tree")
      .def(py::init(&tree_from), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Tree::vertex_count)
      .def("edges", [](const Tree& t) {
        std::vector<std::pair<int, int>> out;
        for (auto [u, v] : t.edges()) out.emplace_back(u, v);
        return out;
      })
      .def("degrees", &Tree::degrees)
      .def("internal_degrees", &Tree::internal_degrees)
      .def("leaves", &Tree::leaves)
      .def("to_json", [](const Tree& t) { return dump(tree_to_json(t)); })
      .def("to_dot", &to_dot)
      .def("__eq__", [](const Tree& a, const Tree& b) { return a == b; })
      .def("__repr__", [](const Tree& t) {
        return "<Tree n=" + std::to_string(t.vertex_count()) + ">";
      });

  m.def("edge_weight", &edge_weight, py::arg("x"), py::arg("y"));
  m.def("sombor_index", &sombor_index, py::arg("tree"));
  m.def("canonical_form", &canonical_form, py::arg("tree"));
  m.def(
      "construct_max_tree",
      [](std::vector<int> degrees) { return construct_max_tree(DegreeSequence::validate(std::move(degrees))); },
      py::arg("degrees"));
  m.def(
      "decompose",
      [](std::vector<int> degrees) {
        py::list out;
        for (const auto& s : decompose(DegreeSequence::validate(std::move(degrees)))) {
          py::dict d;
          d["kind"] = s.kind == SubtreeKind::Chain ? "chain" : "base";
          d["root_degree"] = s.root_degree;
          d["child_degrees"] = s.child_degrees;
          d["filler_leaves"] = s.filler_leaves;
          out.append(d);
        }
        return out;
      },
      py::arg("degrees"));
  m.def(
      "_oracle_max",
      [](std::vector<int> degrees, std::uint64_t cap, int workers) {
        const auto d = DegreeSequence::validate(std::move(degrees));
        OracleResult r;
        {
          py::gil_scoped_release release;
          r = oracle_max(d, cap, workers);
        }
        return dump(to_json(r));
      },
      py::arg("degrees"), py::arg("cap") = kDefaultEnumerationCap, py::arg("workers") = 1);
  m.def(
      "_is_local_max", [](const Tree& t) { return dump(to_json(is_local_max(t))); }, py::arg("tree"));
  m.def(
      "_check_theorem1",
      [](const Tree& t, bool all_records) { return dump(check_theorem1(t).to_json(all_records)); },
      py::arg("tree"), py::arg("all_records") = false);
  m.def(
      "_anneal_search",
      [](std::vector<int> degrees, std::uint64_t budget, std::uint64_t seed) {
        AnnealOptions options;
        options.budget = budget;
        options.seed = seed;
        const auto d = DegreeSequence::validate(std::move(degrees));
        AnnealResult r{Tree(2, std::vector<Edge>{{0, 1}})};
        {
          py::gil_scoped_release release;
          r = anneal_search(d, options);
        }
        return dump(to_json(r));
      },
      py::arg("degrees"), py::arg("budget") = 100000, py::arg("seed") = 42);
}
