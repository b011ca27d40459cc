#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toricheap/classifier.hpp"
#include "toricheap/cyclic.hpp"
#include "toricheap/errors.hpp"
#include "toricheap/graph_io.hpp"
#include "toricheap/report.hpp"
#include "toricheap/toric.hpp"

namespace py = pybind11;
using namespace toricheap;

namespace {

py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<std::string> words_out(const CoxeterGraph& g, const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(format_word(g, w));
  return out;
}

std::vector<std::string> cyclic_out(const CoxeterGraph& g, const std::vector<CyclicWord>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(format_cyclic_word(g, w));
  return out;
}

std::vector<std::string> elements_out(const CoxeterGraph& g, const std::vector<NormalForm>& elements) {
  std::vector<std::string> out;
  for (const auto& e : elements) out.push_back(format_word(g, e.word));
  return out;
}

SimpleGraph simple_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) { return {n, edges}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cyclic reducibility and toric heaps in Coxeter groups";

  // Later registrations are tried first, so the subclass goes second.
  const auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ResourceLimit>(m, "ResourceLimit", error.ptr());

  py::class_<CoxeterGraph>(m, "CoxeterGraph")
      .def_static("load", [](const std::string& path) { return load_coxeter_graph_file(path); }, py::arg("path"))
      .def_static("from_json", [](const std::string& text) { return load_coxeter_graph(json::parse(text)); },
                  py::arg("text"))
      .def("to_json", [](const CoxeterGraph& g) { return graph_to_json(g).dump(); })
      .def_property_readonly("rank", &CoxeterGraph::rank)
      .def_property_readonly("generators", &CoxeterGraph::generators)
      .def("m", [](const CoxeterGraph& g, const std::string& s, const std::string& t) -> py::object {
        const auto b = g.m(g.index_of(s), g.index_of(t));
        if (b.is_infinite()) return py::float_(INFINITY);
        return py::int_(b.value());
      })
      .def("is_finite_type", [](const CoxeterGraph& g) { return is_finite_type(g); })
      .def("__repr__", [](const CoxeterGraph& g) { return "<CoxeterGraph rank " + std::to_string(g.rank()) + ">"; });

  m.def("is_reduced", [](const CoxeterGraph& g, const std::string& w) { return is_reduced(g, parse_word(g, w)); });
  m.def("normal_form", [](const CoxeterGraph& g, const std::string& w) {
    return format_word(g, normal_form(g, parse_word(g, w)).word);
  });
  m.def("length", [](const CoxeterGraph& g, const std::string& w) { return normal_form(g, parse_word(g, w)).length; });
  m.def("reduced_words",
        [](const CoxeterGraph& g, const std::string& w) { return words_out(g, reduced_words(g, parse_word(g, w))); });
  m.def("commutativity_classes", [](const CoxeterGraph& g, const std::string& w) {
    std::vector<std::vector<std::string>> out;
    for (const auto& cls : commutativity_classes(g, parse_word(g, w))) out.push_back(words_out(g, cls));
    return out;
  });
  m.def("conjugate", [](const CoxeterGraph& g, const std::string& v, const std::string& w) {
    return format_word(g, conjugate(g, parse_word(g, v), parse_word(g, w)).word);
  });
  m.def("power_length", [](const CoxeterGraph& g, const std::string& w, std::size_t k) {
    return power_length(g, parse_word(g, w), k);
  });
  m.def("enumerate_reduced_words", [](const CoxeterGraph& g, std::size_t max_length) {
    return words_out(g, enumerate_reduced_words(g, max_length));
  });

  m.def("is_torically_reduced",
        [](const CoxeterGraph& g, const std::string& w) { return is_torically_reduced(g, parse_word(g, w)); });
  m.def("rtor_cyclic_class", [](const CoxeterGraph& g, const std::string& w) {
    return cyclic_out(g, rtor_cyclic_class(g, parse_word(g, w)));
  });
  m.def("ctor_class",
        [](const CoxeterGraph& g, const std::string& w) { return cyclic_out(g, ctor_class(g, parse_word(g, w))); });
  m.def("rtor_words",
        [](const CoxeterGraph& g, const std::string& w) { return words_out(g, rtor_words(g, parse_word(g, w))); });
  m.def("torically_equivalent_elements", [](const CoxeterGraph& g, const std::string& w) {
    return elements_out(g, torically_equivalent_elements(g, parse_word(g, w)));
  });
  m.def("ltor", [](const CoxeterGraph& g, const std::string& w) {
    return cyclic_out(g, ltor(toric_heap_of_word(g, parse_word(g, w))));
  });

  m.def("classify",
        [](const CoxeterGraph& g, const std::string& w) { return to_python(report_json(g, classify(g, parse_word(g, w)))); });
  m.def("verdict", [](const CoxeterGraph& g, const std::string& w) { return verdict_name(verdict_of(g, parse_word(g, w))); });
  m.def("coxeter_conjugacy_classes", [](const CoxeterGraph& g) {
    std::vector<std::vector<std::string>> out;
    for (const auto& cls : coxeter_conjugacy_classes(g)) out.push_back(elements_out(g, cls));
    return out;
  });
  m.def("logarithmic_probe", [](const CoxeterGraph& g, const std::string& w, std::size_t K) {
    const auto p = logarithmic_probe(g, parse_word(g, w), K);
    py::dict d;
    d["bound"] = p.bound;
    d["length"] = p.length;
    d["power_lengths"] = p.power_lengths;
    d["violation"] = p.violation ? py::object(py::int_(*p.violation)) : py::object(py::none());
    return d;
  });
  m.def("conjecture_probe", [](const CoxeterGraph& g, const std::string& w) {
    return to_python(conjecture_probe_json(g, conjecture_probe(g, parse_word(g, w))));
  });

  m.def("tutte",
        [](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges, std::int64_t x, std::int64_t y) {
          return tutte(simple_graph(n, edges), x, y);
        },
        py::arg("n"), py::arg("edges"), py::arg("x"), py::arg("y"));
  m.def("acyclic_orientation_count", [](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    return all_acyclic_orientations(std::make_shared<const SimpleGraph>(simple_graph(n, edges))).size();
  });
  m.def("toric_class_sizes", [](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::vector<std::size_t> out;
    for (const auto& cls : toric_classes(std::make_shared<const SimpleGraph>(simple_graph(n, edges)))) {
      out.push_back(cls.size());
    }
    return out;
  });
}
