#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "parlearn/errors.hpp"
#include "parlearn/experiments.hpp"
#include "parlearn/io.hpp"
#include "parlearn/learner.hpp"

namespace py = pybind11;
using namespace parlearn;

// Graphs, targets and rationals cross the boundary as JSON text in the same
// formats the CLI reads and writes.

namespace {

WeightedGraph target_of(const std::string& text) {
  return weighted_graph_from_json(Json::parse(text));
}

LabeledMultigraph graph_of(const std::string& text) {
  return graph_from_json(Json::parse(text));
}

py::dict learn_json(const std::string& target, std::size_t max_vertices,
                    std::size_t max_edges, std::size_t iteration_cap) {
  Teacher teacher(target_of(target), TeacherConfig{max_vertices, max_edges, 0, 0});
  std::optional<LearnResult> found;
  {
    py::gil_scoped_release release;
    found.emplace(learn(teacher, LearnerConfig{iteration_cap}));
  }
  const LearnResult& result = *found;
  py::dict out;
  out["hypothesis"] = to_json(result.hypothesis).dump();
  out["transcript"] = result.transcript.to_jsonl();
  out["rounds"] = result.rounds;
  out["value_queries"] = result.queries.value_count;
  out["equivalence_queries"] = result.queries.equivalence_count;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact learning of rigid partition functions";
  py::register_exception<Error>(m, "ParlearnError");

  m.def("hom", [](const std::string& graph, const std::string& target) {
    return to_string(hom(graph_of(graph), target_of(target)));
  }, py::arg("graph"), py::arg("target"));
  m.def("canonical_code", [](const std::string& graph) {
    return py::bytes(canonical_code(graph_of(graph)));
  }, py::arg("graph"));
  m.def("is_rigid", [](const std::string& t) { return is_rigid(target_of(t)); }, py::arg("target"));
  m.def("is_twin_free", [](const std::string& t) { return is_twin_free(target_of(t)); },
        py::arg("target"));
  m.def("make_twin_free", [](const std::string& t) {
    return to_json(make_twin_free(target_of(t))).dump();
  }, py::arg("target"));
  m.def("weighted_iso", [](const std::string& a, const std::string& b) {
    return weighted_iso(target_of(a), target_of(b));
  }, py::arg("h1"), py::arg("h2"));
  m.def("generate_target", [](std::size_t q, std::size_t d, std::uint64_t seed) {
    return to_json(generate_target(q, d, seed)).dump();
  }, py::arg("q"), py::arg("denominator_bound") = 3, py::arg("seed") = 0);
  m.def("learn", &learn_json, py::arg("target"), py::arg("max_vertices") = 6,
        py::arg("max_edges") = 8, py::arg("iteration_cap") = LearnerConfig{}.iteration_cap);
  m.def("rank_experiment", [](const std::string& t, std::size_t k, std::size_t samples,
                              std::uint64_t seed) {
    return to_csv(rank_experiment(target_of(t), k, samples, seed));
  }, py::arg("target"), py::arg("k") = 1, py::arg("samples") = 25, py::arg("seed") = 0);
  m.def("rigidity_stats", [](std::size_t n_min, std::size_t n_max, std::size_t samples,
                             std::uint64_t seed) {
    return to_csv(rigidity_stats(n_min, n_max, samples, seed));
  }, py::arg("n_min") = 4, py::arg("n_max") = 8, py::arg("samples") = 200, py::arg("seed") = 0);
}
