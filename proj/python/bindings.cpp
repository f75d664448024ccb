#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coxroots/error.hpp"
#include "coxroots/game.hpp"
#include "coxroots/graph.hpp"
#include "coxroots/recognizer.hpp"
#include "coxroots/roots.hpp"

namespace py = pybind11;
using namespace coxroots;

namespace {

// Words cross the boundary as lists of vertex names.
Word to_word(const CoxeterGraph& g, const std::vector<std::string>& names) {
  Word w;
  for (const auto& n : names) w.push_back(g.index(n));
  return w;
}

Word to_word(const CoxeterGraph& g, const py::object& word) {
  if (py::isinstance<py::str>(word)) return parse_word(g, word.cast<std::string>());
  return to_word(g, word.cast<std::vector<std::string>>());
}

std::vector<std::string> names_of(const CoxeterGraph& g, const Word& w) {
  std::vector<std::string> out;
  for (Vertex v : w) out.push_back(g.name(v));
  return out;
}

std::vector<std::string> rendered(const GamePosition& p) {
  std::vector<std::string> out;
  for (const auto& v : p.values) out.push_back(v.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_coxroots, m) {
  m.doc() = "coxroots core bindings";

  py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted");
  py::register_exception<CapExceeded>(m, "CapExceeded");
  py::register_exception<Error>(m, "CoxrootsError", PyExc_ValueError);

  py::class_<CoxeterGraph>(m, "CoxeterGraph")
      .def_property_readonly("names", &CoxeterGraph::names)
      .def("__len__", &CoxeterGraph::size)
      .def("label", [](const CoxeterGraph& g, const std::string& u, const std::string& v) {
        return g.label(g.index(u), g.index(v)).to_string();
      })
      .def("to_text", [](const CoxeterGraph& g) { return to_text(g); })
      .def("to_json", [](const CoxeterGraph& g) { return to_json(g); })
      .def("__eq__", &CoxeterGraph::operator==)
      .def("__repr__", [](const CoxeterGraph& g) {
        return "<CoxeterGraph " + std::to_string(g.size()) + " vertices, " + std::to_string(g.edges().size()) +
               " edges>";
      });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); }, py::arg("text"));
  m.def(
      "catalog",
      [](const std::string& family, int n) { return catalog_by_name(family, n).graph; },
      py::arg("family"), py::arg("n") = 0);

  m.def(
      "has_intervening_neighbours",
      [](const CoxeterGraph& g, const py::object& w) { return has_intervening_neighbours(to_word(g, w), g).holds; },
      py::arg("graph"), py::arg("word"));
  m.def(
      "bicoloured_word",
      [](const CoxeterGraph& g, const std::string& start, std::size_t length) {
        return names_of(g, bicoloured_word(g, g.index(start), length));
      },
      py::arg("graph"), py::arg("start"), py::arg("length"));
  m.def(
      "find_affine_witness",
      [](const CoxeterGraph& g) -> py::object {
        const auto w = find_affine_witness(g);
        if (!w) return py::none();
        return py::make_tuple(w->entry.name(), names_of(g, w->vertices));
      },
      py::arg("graph"));

  m.def(
      "small_roots",
      [](const CoxeterGraph& g) {
        const auto small = enumerate_small_roots(g);
        std::vector<std::string> out;
        std::string text = format_small_roots(small);
        std::size_t start = 0;
        for (std::size_t nl; (nl = text.find('\n', start)) != std::string::npos; start = nl + 1) {
          out.push_back(text.substr(start, nl - start));
        }
        return out;
      },
      py::arg("graph"), "Small roots in canonical rendering, sorted.");

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("reduced", &Verdict::reduced)
      .def_readonly("non_exact", &Verdict::non_exact)
      .def_property_readonly("witness",
                             [](const Verdict& v) -> py::object {
                               if (!v.witness) return py::none();
                               return py::make_tuple(v.witness->i, v.witness->j);
                             })
      .def("__bool__", [](const Verdict& v) { return v.reduced; });

  m.def(
      "is_reduced", [](const CoxeterGraph& g, const py::object& w) { return is_reduced(to_word(g, w), g); },
      py::arg("graph"), py::arg("word"));
  m.def(
      "reduce_fully",
      [](const CoxeterGraph& g, const py::object& w) { return names_of(g, reduce_fully(to_word(g, w), g)); },
      py::arg("graph"), py::arg("word"));
  m.def(
      "check_speyer",
      [](const CoxeterGraph& g, std::size_t samples, std::size_t max_length, std::uint64_t seed, bool force) {
        SpeyerOptions opt;
        opt.samples = samples;
        opt.max_length = max_length;
        opt.seed = seed;
        opt.force = force;
        const auto report = check_speyer_property(g, opt);
        std::vector<std::vector<std::string>> bad;
        for (const auto& c : report.counterexamples) bad.push_back(names_of(g, c.word));
        return bad;
      },
      py::arg("graph"), py::arg("samples") = 1000, py::arg("max_length") = 40, py::arg("seed") = 0,
      py::arg("force") = false, "Counterexample words; empty when every sampled word is reduced.");

  py::class_<GamePosition>(m, "GamePosition")
      .def_property_readonly("values", &rendered)
      .def("render", &GamePosition::to_string, py::arg("graph"))
      .def("__eq__", &GamePosition::operator==);

  m.def(
      "initial_position", [](const CoxeterGraph& g, const py::object& w) { return initial_position(g, to_word(g, w)); },
      py::arg("graph"), py::arg("word"));
  m.def(
      "legal_moves",
      [](const GamePosition& p, const CoxeterGraph& g) { return names_of(g, legal_moves(p, g)); }, py::arg("position"),
      py::arg("graph"));
  m.def(
      "fire", [](const GamePosition& p, const CoxeterGraph& g, const std::string& t) { return fire(p, g.index(t), g); },
      py::arg("position"), py::arg("graph"), py::arg("vertex"));
  m.def(
      "explore",
      [](const GamePosition& p, const CoxeterGraph& g, std::size_t depth) -> py::tuple {
        const auto r = explore(p, g, depth);
        switch (r.kind) {
          case ExploreResult::Kind::converged:
            return py::make_tuple("converged", r.final_position->to_string(g), r.length);
          case ExploreResult::Kind::open_beyond_cap:
            return py::make_tuple("open", py::none(), r.positions_seen);
          case ExploreResult::Kind::non_confluent:
            break;
        }
        return py::make_tuple("non_confluent", py::none(), r.positions_seen);
      },
      py::arg("position"), py::arg("graph"), py::arg("depth"));
}
