#include "toricheap/report.hpp"

#include <sstream>

namespace toricheap {

namespace {

std::string vertex_name(Vertex v, const std::vector<std::string>& names) {
  return names.empty() ? std::to_string(v + 1) : names[v];
}

json optional_word(const CoxeterGraph& g, const std::optional<Word>& w) {
  return w ? json(format_word(g, *w)) : json(nullptr);
}

}  // namespace

json words_json(const CoxeterGraph& g, const std::vector<Word>& words) {
  json out = json::array();
  for (const auto& w : words) out.push_back(format_word(g, w));
  return out;
}

json cyclic_words_json(const CoxeterGraph& g, const std::vector<CyclicWord>& words) {
  json out = json::array();
  for (const auto& w : words) out.push_back(format_cyclic_word(g, w));
  return out;
}

json normal_forms_json(const CoxeterGraph& g, const std::vector<NormalForm>& elements) {
  json out = json::array();
  for (const auto& nf : elements) out.push_back({{"normalForm", format_word(g, nf.word)}, {"length", nf.length}});
  return out;
}

json orientation_json(const AcyclicOrientation& o, const std::vector<std::string>& names) {
  json arcs = json::array();
  for (const auto& [a, b] : o.arcs()) arcs.push_back({vertex_name(a, names), vertex_name(b, names)});
  return {{"bits", o.bitstring()}, {"arcs", arcs}};
}

json report_json(const CoxeterGraph& g, const ClassificationReport& r) {
  json witnesses = {
      {"nonReducedRotation", optional_word(g, r.witnesses.non_reduced_rotation)},
      {"toricRefutation", words_json(g, r.witnesses.toric_refutation)},
      {"cfcCounterexample", optional_word(g, r.witnesses.cfc_counterexample)},
      {"secondCommutativityClass", optional_word(g, r.witnesses.second_commutativity_class)},
      {"secondCyclicClass", r.witnesses.second_cyclic_class
                                ? json(format_cyclic_word(g, *r.witnesses.second_cyclic_class))
                                : json(nullptr)},
  };
  json counts = {
      {"reducedWords", r.counts.reduced_words},
      {"commutativityClasses", r.counts.commutativity_classes},
      {"cyclicWords", r.counts.cyclic_words},
      {"cyclicCommutativityClasses", r.counts.cyclic_commutativity_classes},
      {"toricallyReducedWords", r.counts.torically_reduced_words},
      {"elements", r.counts.elements},
  };
  return {
      {"word", format_word(g, r.word)},
      {"reduced", r.reduced},
      {"cyclicallyReduced", r.cyclically_reduced},
      {"cyclicallyReducedElement", r.cyclically_reduced_element},
      {"toricallyReduced", r.torically_reduced},
      {"fc", r.fc},
      {"cfc", r.cfc},
      {"tfc", r.tfc},
      {"fauxCfc", r.faux_cfc},
      {"coxeterElement", r.coxeter_element},
      {"counts", counts},
      {"witnesses", witnesses},
  };
}

json heap_json(const Heap& h) {
  const auto& g = h.graph();
  json labels = json::array();
  for (std::size_t i = 0; i < h.size(); ++i) labels.push_back(g.name(h.label(i)));
  auto pairs = [](const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    json out = json::array();
    for (const auto& [a, b] : edges) out.push_back({a + 1, b + 1});
    return out;
  };
  return {{"word", format_word(g, h.word())},
          {"size", h.size()},
          {"labels", labels},
          {"hasse", pairs(hasse_edges(h))},
          {"closure", pairs(closure_edges(h))}};
}

json toric_heap_json(const ToricHeap& t, const Limits& limits) {
  const auto& g = t.graph();
  json labels = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) labels.push_back(g.name(t.label(i)));
  return {{"word", format_word(g, t.word())},
          {"size", t.size()},
          {"labels", labels},
          {"representative", orientation_json(t.toric().representative())},
          {"classSize", t.toric().members(limits)->size()}};
}

json conjecture_probe_json(const CoxeterGraph& g, const ConjectureProbe& p) {
  return {{"nonTheorem", true},
          {"note", "empirical probe of an open conjecture; evidence only, not a proof"},
          {"word", format_word(g, p.word)},
          {"rotation", p.rotation},
          {"s", g.name(p.s)},
          {"t", g.name(p.t)},
          {"m", p.m},
          {"u", format_word(g, p.u)},
          {"wordFauxCfc", p.word_faux_cfc},
          {"uToricallyReduced", p.u_torically_reduced},
          {"hypothesisHolds", p.hypothesis_holds},
          {"shortened", format_word(g, p.shortened)},
          {"shortenedVerdict", verdict_name(p.shortened_verdict)},
          {"consistent", p.consistent}};
}

json cvmt_probe_json(const CoxeterGraph& g, const CvmtProbe& p) {
  json cex = json::array();
  for (const auto& c : p.counterexamples) {
    cex.push_back({{"word", format_word(g, c.word)},
                   {"conjugator", format_word(g, c.conjugator)},
                   {"conjugate", format_word(g, c.conjugate.word)}});
  }
  return {{"nonTheorem", true},
          {"note", "bounded conjugator search; evidence only, not a proof"},
          {"elementsChecked", p.elements_checked},
          {"elementsSkipped", p.elements_skipped},
          {"conjugatesExamined", p.conjugates_examined},
          {"maxConjugatorLength", p.max_conjugator_length},
          {"counterexamples", cex}};
}

std::string heap_dot(const Heap& h) {
  std::ostringstream os;
  os << "digraph heap {\n";
  for (std::size_t i = 0; i < h.size(); ++i) {
    os << "  pos" << i + 1 << " [label=\"" << h.graph().name(h.label(i)) << "\"];\n";
  }
  for (const auto& [a, b] : hasse_edges(h)) os << "  pos" << a + 1 << " -> pos" << b + 1 << ";\n";
  os << "}\n";
  return os.str();
}

std::string toric_dot(const ToricPoset& t, const CoxeterGraph& g, const Word& labels, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    os << "  pos" << i + 1 << " [label=\"" << g.name(labels[i]) << "\"];\n";
  }
  for (const auto& [a, b] : t.representative().arcs()) os << "  pos" << a + 1 << " -> pos" << b + 1 << ";\n";
  os << "}\n";
  return os.str();
}

std::string orientation_dot(const CoxeterGraph& g, const AcyclicOrientation& o) {
  std::ostringstream os;
  os << "digraph orientation {\n";
  for (Gen s = 0; s < g.rank(); ++s) os << "  \"" << g.name(s) << "\";\n";
  for (const auto& [a, b] : o.arcs()) {
    os << "  \"" << g.name(static_cast<Gen>(a)) << "\" -> \"" << g.name(static_cast<Gen>(b)) << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace toricheap
