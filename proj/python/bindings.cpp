#include <map>
#include <sstream>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clawpath/generators.hpp"
#include "clawpath/io.hpp"
#include "clawpath/oracles.hpp"
#include "clawpath/pipeline.hpp"
#include "clawpath/recognizers.hpp"

namespace py = pybind11;
using namespace clawpath;

namespace {

// JSON values cross the boundary as native Python objects.
py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }
Json from_python(const py::object& o) { return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }

std::vector<VertexId> as_vector(const VertexSet& s) { return s.to_vector(); }

Instance make_instance(const Graph& g, std::vector<VertexId> terminals, Variant v) {
  Instance inst{g, std::move(terminals), v};
  inst.validate();
  return inst;
}

}  // namespace

PYBIND11_MODULE(clawpath, m) {
  m.doc() = "Ordered induced paths, induced disjoint paths and induced cycles in claw-free graphs";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<NotClawFree>(m, "NotClawFreeError", precondition.ptr());
  py::register_exception<SearchExhausted>(m, "SearchExhausted", PyExc_RuntimeError);

  py::enum_<Verdict>(m, "Verdict")
      .value("YES", Verdict::Yes)
      .value("NO", Verdict::No)
      .value("EXHAUSTED", Verdict::Exhausted);
  py::enum_<Variant>(m, "Variant")
      .value("ORDERED_PATH", Variant::OrderedPath)
      .value("PATH", Variant::Path)
      .value("DISJOINT_PATHS", Variant::DisjointPaths)
      .value("CYCLE", Variant::Cycle);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return build_graph(n, edges); }), py::arg("n"),
           py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("vertices", &Graph::vertices)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, VertexId v) { return as_vector(g.neighbors(v)); })
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("is_connected", &Graph::is_connected)
      .def("induced", [](const Graph& g, const std::vector<VertexId>& keep) {
        return induced_subgraph(g, VertexSet::of(g.capacity(), keep));
      })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
      });

  py::class_<Instance>(m, "Instance")
      .def(py::init(&make_instance), py::arg("graph"), py::arg("terminals"), py::arg("variant") = Variant::OrderedPath)
      .def_readonly("graph", &Instance::graph)
      .def_readonly("terminals", &Instance::terminals)
      .def_readonly("variant", &Instance::variant)
      .def("to_json", [](const Instance& i) { return to_python(to_json(i)); })
      .def_static("from_json", [](const py::object& o) { return instance_from_json(from_python(o)); })
      .def_static("from_edge_list", [](const std::string& text) {
        std::istringstream in(text);
        return read_edge_list(in);
      });

  py::class_<PipelineConfig>(m, "PipelineConfig")
      .def(py::init<>())
      .def_property(
          "budget_nodes", [](const PipelineConfig& c) { return c.budget.max_nodes; },
          [](PipelineConfig& c, std::uint64_t n) { c.budget.max_nodes = n; })
      .def_property(
          "time_limit_ms", [](const PipelineConfig& c) { return c.budget.time_limit.count(); },
          [](PipelineConfig& c, std::int64_t ms) { c.budget.time_limit = std::chrono::milliseconds(ms); })
      .def_readwrite("debug_level", &PipelineConfig::debug_level)
      .def_readwrite("strip_construction", &PipelineConfig::strip_construction)
      .def_readwrite("window", &PipelineConfig::window)
      .def_readwrite("seed", &PipelineConfig::seed)
      .def_readwrite("shuffle_branches", &PipelineConfig::shuffle_branches)
      .def_readwrite("parallel_branches", &PipelineConfig::parallel_branches)
      .def_readwrite("max_k", &PipelineConfig::max_k)
      .def_readwrite("oracle_only", &PipelineConfig::oracle_only)
      .def_readwrite("force_oracle", &PipelineConfig::force_oracle)
      .def_readwrite("observer", &PipelineConfig::observer);

  py::class_<Answer>(m, "Answer")
      .def_readonly("verdict", &Answer::verdict)
      .def_property_readonly("certificate",
                             [](const Answer& a) -> std::optional<std::vector<VertexId>> {
                               if (!a.certificate) return std::nullopt;
                               return a.certificate->sequence;
                             })
      .def_property_readonly("paths",
                             [](const Answer& a) {
                               std::vector<std::vector<VertexId>> out;
                               for (const auto& p : a.paths) out.push_back(p.sequence);
                               return out;
                             })
      .def_readonly("cycle", &Answer::cycle)
      .def_property_readonly("stats", [](const Answer& a) { return to_python(to_json(a.stats)); })
      .def_property_readonly("trace",
                             [](const Answer& a) -> py::object {
                               return a.trace ? to_python(to_json(*a.trace)) : py::none();
                             })
      .def("to_json", [](const Answer& a) { return to_python(to_json(a)); })
      .def_static("from_json", [](const py::object& o) { return answer_from_json(from_python(o)); });

  // The GIL is released while solving; observer callbacks take it back, also
  // from branch worker threads.
  using release = py::call_guard<py::gil_scoped_release>;
  auto cfg_default = py::arg("config") = PipelineConfig{};
  m.def("solve", &solve, py::arg("instance"), cfg_default, release(), "Dispatch on the instance's variant");
  m.def("solve_ordered", &solve_ordered, py::arg("instance"), cfg_default, release());
  m.def("solve_k_in_a_path", &solve_k_in_a_path, py::arg("instance"), cfg_default, release());
  m.def("solve_induced_disjoint_paths", &solve_induced_disjoint_paths, py::arg("instance"), cfg_default, release());
  m.def("solve_induced_cycle", &solve_induced_cycle, py::arg("instance"), cfg_default, release());
  m.def("solve_by_oracle", [](const Instance& inst) { return solve_by_oracle(inst); }, py::arg("instance"));
  m.def("verify", &verify, py::arg("instance"), py::arg("answer"));

  m.def("find_claw", [](const Graph& g) -> std::optional<std::pair<VertexId, std::vector<VertexId>>> {
    auto c = find_claw(g);
    if (!c) return std::nullopt;
    return std::make_pair(c->center, std::vector<VertexId>(c->leaves.begin(), c->leaves.end()));
  });
  m.def("is_quasi_line", &is_quasi_line);
  m.def("find_homogeneous_clique", [](const Graph& g) -> std::optional<std::vector<VertexId>> {
    auto a = find_homogeneous_clique(g);
    if (!a) return std::nullopt;
    return a->to_vector();
  });
  m.def("find_homogeneous_pair",
        [](const Graph& g) -> std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> {
          auto w = find_homogeneous_pair(g);
          if (!w) return std::nullopt;
          return std::make_pair(w->a.to_vector(), w->b.to_vector());
        });
  m.def("recognize_linear_interval", [](const Graph& g) -> py::object {
    auto r = recognize_linear_interval(g);
    return r ? to_python(to_json(*r)) : py::none();
  });
  m.def("recognize_circular_interval", [](const Graph& g) -> py::object {
    auto r = recognize_circular_interval(g);
    return r ? to_python(to_json(*r)) : py::none();
  });
  m.def("is_line_graph", [](const Graph& g) { return line_graph_root(g).has_value(); });

  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("complete_graph", &complete_graph);
  m.def("star_graph", &star_graph);
  m.def("line_graph_of", &line_graph_of);
  m.def(
      "random_claw_free_graph",
      [](const std::string& family, std::size_t max_n, std::uint64_t seed) {
        static const std::map<std::string, Family> names{{"line-graph", Family::LineGraph},
                                                         {"proper-interval", Family::ProperInterval},
                                                         {"proper-circular", Family::ProperCircular},
                                                         {"strip-composition", Family::StripComposition}};
        auto it = names.find(family);
        if (it == names.end()) throw InputError("unknown family " + family);
        Rng rng(seed);
        return random_family_graph(it->second, max_n, rng);
      },
      py::arg("family"), py::arg("max_n"), py::arg("seed"));
}
