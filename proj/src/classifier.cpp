#include "toricheap/classifier.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "toricheap/errors.hpp"
#include "toricheap/toric.hpp"

namespace toricheap {

namespace {

Word alternating(Gen s, Gen t, std::size_t len) {
  Word w;
  for (std::size_t k = 0; k < len; ++k) w.push_back(k % 2 == 0 ? s : t);
  return w;
}

void require_reduced(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  if (!is_reduced(g, w, limits)) throw NotReduced("word is not reduced: " + format_word(g, w));
}

// Finds a reduced word of the element with a rotation that is not reduced or
// not FC. Words known to be fine are shared between rotations.
std::optional<Word> find_cfc_counterexample(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  std::unordered_set<Word, WordHash> good;
  for (const auto& u : reduced_words(g, w, limits)) {
    for (std::size_t k = 0; k < std::max<std::size_t>(u.size(), 1); ++k) {
      const Word r = rotate(u, k);
      if (good.count(r)) continue;
      if (!is_reduced(g, r, limits)) return u;
      if (commutativity_classes(g, r, limits).size() != 1) return u;
      for (auto& x : reduced_words(g, r, limits)) good.insert(std::move(x));
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_fc(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  return commutativity_classes(g, w, limits).size() == 1;
}

bool is_cfc(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  require_reduced(g, w, limits);
  return !find_cfc_counterexample(g, w, limits).has_value();
}

bool is_tfc(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  if (!is_torically_reduced(g, w, limits)) return false;
  return cyclic_decomposition(g, w, limits).size() == 1;
}

bool is_faux_cfc(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  return is_tfc(g, w, limits) && !is_cfc(g, w, limits);
}

ClassificationReport classify(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  validate_word(g, w);
  ClassificationReport r;
  r.word = w;
  r.reduced = is_reduced(g, w, limits);
  r.coxeter_element = is_coxeter_word(g, w);

  r.cyclically_reduced = true;
  for (std::size_t k = 0; k < std::max<std::size_t>(w.size(), 1); ++k) {
    Word rot = rotate(w, k);
    if (!is_reduced(g, rot, limits)) {
      r.cyclically_reduced = false;
      r.witnesses.non_reduced_rotation = std::move(rot);
      break;
    }
  }

  if (r.reduced) {
    const auto classes = commutativity_classes(g, w, limits);
    r.counts.commutativity_classes = classes.size();
    for (const auto& c : classes) r.counts.reduced_words += c.size();
    r.fc = classes.size() == 1;
    for (const auto& c : classes) {
      if (!std::binary_search(c.begin(), c.end(), w, ShortlexLess{})) {
        r.witnesses.second_commutativity_class = c.front();
        break;
      }
    }
    r.cyclically_reduced_element = is_cyclically_reduced_element(g, w, limits);
    r.witnesses.cfc_counterexample = find_cfc_counterexample(g, w, limits);
    r.cfc = !r.witnesses.cfc_counterexample.has_value();
  }

  const auto toric = toric_reducedness(g, w, limits);
  r.torically_reduced = toric.torically_reduced;
  r.witnesses.toric_refutation = toric.witness;
  if (r.torically_reduced) {
    const auto decomposition = cyclic_decomposition(g, w, limits);
    r.counts.cyclic_commutativity_classes = decomposition.size();
    const CyclicWord own = cyclic_word(w);
    for (const auto& cls : decomposition) {
      r.counts.cyclic_words += cls.size();
      if (!r.witnesses.second_cyclic_class && !std::binary_search(cls.begin(), cls.end(), own)) {
        r.witnesses.second_cyclic_class = cls.front();
      }
    }
    r.counts.torically_reduced_words = rtor_words(g, w, limits).size();
    r.counts.elements = torically_equivalent_elements(g, w, limits).size();
    r.tfc = decomposition.size() == 1;
  }
  r.faux_cfc = r.tfc && !r.cfc;
  return r;
}

LogarithmicProbe logarithmic_probe(const CoxeterGraph& g, const Word& w, std::size_t K, const Limits& limits) {
  if (K < 1) throw PreconditionViolated("the probe bound K must be at least 1");
  require_reduced(g, w, limits);
  LogarithmicProbe probe;
  probe.bound = K;
  probe.length = w.size();
  Word acc;
  for (std::size_t k = 1; k <= K; ++k) {
    acc.insert(acc.end(), w.begin(), w.end());
    acc = normal_form(g, acc, limits).word;
    probe.power_lengths.push_back(acc.size());
    if (acc.size() < k * w.size()) {
      probe.violation = k;
      break;
    }
  }
  return probe;
}

std::shared_ptr<const SimpleGraph> coxeter_simple_graph(const CoxeterGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& b : g.bonds()) edges.emplace_back(b.s, b.t);
  return std::make_shared<const SimpleGraph>(g.rank(), std::move(edges));
}

bool is_coxeter_word(const CoxeterGraph& g, const Word& w) {
  if (w.size() != g.rank()) return false;
  std::vector<bool> seen(g.rank(), false);
  for (Gen s : w) {
    if (s >= g.rank() || seen[s]) return false;
    seen[s] = true;
  }
  return true;
}

AcyclicOrientation coxeter_to_orientation(const CoxeterGraph& g, const Word& c) {
  if (!is_coxeter_word(g, c)) throw NotACoxeterWord("not a Coxeter word: " + format_word(g, c));
  return AcyclicOrientation::from_order(coxeter_simple_graph(g), std::vector<Vertex>(c.begin(), c.end()));
}

Word orientation_to_coxeter(const CoxeterGraph& g, const AcyclicOrientation& o) {
  if (!(o.graph() == *coxeter_simple_graph(g))) throw GraphMismatch("orientation is not over the Coxeter graph");
  const auto order = o.topological_order();
  return {order.begin(), order.end()};
}

std::vector<Word> coxeter_words(const CoxeterGraph& g) {
  if (g.rank() > 10) throw TooLarge("Coxeter word enumeration limited to rank 10");
  Word c(g.rank());
  std::iota(c.begin(), c.end(), Gen{0});
  std::vector<Word> out;
  do {
    out.push_back(c);
  } while (std::next_permutation(c.begin(), c.end()));
  return out;
}

std::vector<NormalForm> coxeter_elements(const CoxeterGraph& g, const Limits& limits) {
  std::vector<NormalForm> out;
  for (const auto& o : all_acyclic_orientations(coxeter_simple_graph(g), limits)) {
    out.push_back(normal_form(g, orientation_to_coxeter(g, o), limits));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<NormalForm>> coxeter_conjugacy_classes(const CoxeterGraph& g, const Limits& limits) {
  std::vector<std::vector<NormalForm>> out;
  for (const auto& cls : toric_classes(coxeter_simple_graph(g), limits)) {
    std::vector<NormalForm> elements;
    for (const auto& o : cls) elements.push_back(normal_form(g, orientation_to_coxeter(g, o), limits));
    std::sort(elements.begin(), elements.end());
    out.push_back(std::move(elements));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::optional<Word> coxeter_conjugator(const CoxeterGraph& g, const Word& c, const Word& c2, const Limits& limits) {
  const AcyclicOrientation start = coxeter_to_orientation(g, c);
  const AcyclicOrientation goal = coxeter_to_orientation(g, c2);
  // Flipping a source s turns s u into u s; flipping a sink turns u s into
  // s u. Either way the new element is s c s.
  std::unordered_map<Bitset, std::pair<Bitset, Gen>, BitsetHash> parent;
  std::deque<AcyclicOrientation> queue{start};
  parent.emplace(start.bits(), std::pair{start.bits(), Gen{0}});
  while (!queue.empty()) {
    const AcyclicOrientation cur = std::move(queue.front());
    queue.pop_front();
    if (cur.bits() == goal.bits()) {
      Word v;
      for (Bitset b = cur.bits(); !(b == start.bits());) {
        const auto& [prev, s] = parent.at(b);
        v.push_back(s);
        b = prev;
      }
      std::reverse(v.begin(), v.end());
      return v;
    }
    for (Vertex s = 0; s < g.rank(); ++s) {
      if (cur.graph().incident(s).empty()) continue;
      std::optional<AcyclicOrientation> next;
      if (cur.is_source(s)) {
        next = flip_source(cur, s);
      } else if (cur.is_sink(s)) {
        next = flip_sink(cur, s);
      }
      if (!next || parent.count(next->bits())) continue;
      if (parent.size() >= limits.max_class) throw ClassCapExceeded("toric class search exceeded its cap");
      parent.emplace(next->bits(), std::pair{cur.bits(), static_cast<Gen>(s)});
      queue.push_back(std::move(*next));
    }
  }
  return std::nullopt;
}

bool odd_braid_obstruction(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  for (const auto& u : rtor_words(g, w, limits)) {
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      if (!has_braid_factor_at(g, u, i)) continue;
      const BondStrength m = g.m(u[i], u[i + 1]);
      if (m.is_odd() && m.value() >= 3) return true;
    }
  }
  return false;
}

TfcConstruction tfc_constructor(const CoxeterGraph& g, Gen s, Gen t, const Word& u, const Limits& limits) {
  validate_word(g, Word{s, t});
  validate_word(g, u);
  const auto nbrs = g.neighbors(s);
  if (nbrs.size() != 1 || nbrs.front() != t) {
    throw PreconditionViolated(g.name(s) + " is not an endpoint adjacent to " + g.name(t));
  }
  const BondStrength m = g.m(s, t);
  if (!m.is_even()) throw PreconditionViolated("the spoke " + g.name(s) + "-" + g.name(t) + " is not even");
  if (std::find(u.begin(), u.end(), s) != u.end() || std::find(u.begin(), u.end(), t) != u.end()) {
    throw PreconditionViolated("u must avoid " + g.name(s) + " and " + g.name(t));
  }
  if (!is_reduced(g, u, limits) || !is_cfc(g, u, limits)) {
    throw PreconditionViolated("u is not a reduced word of a CFC element");
  }
  TfcConstruction out;
  out.word = alternating(s, t, static_cast<std::size_t>(m.value()));
  out.word.insert(out.word.end(), u.begin(), u.end());
  if (!is_reduced(g, out.word, limits)) throw PreconditionViolated("the product is not reduced");
  out.tfc = is_tfc(g, out.word, limits);
  out.cfc = is_cfc(g, out.word, limits);
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::CFC: return "CFC";
    case Verdict::FauxCFC: return "fauxCFC";
    case Verdict::NotTFC: return "notTFC";
  }
  return "";
}

Verdict verdict_of(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  if (!is_tfc(g, w, limits)) return Verdict::NotTFC;
  return is_cfc(g, w, limits) ? Verdict::CFC : Verdict::FauxCFC;
}

ConjectureProbe conjecture_probe(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  validate_word(g, w);
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Word r = rotate(w, k);
    if (r.size() < 2 || r[0] == r[1]) continue;
    const BondStrength m = g.m(r[0], r[1]);
    if (m.is_infinite() || m.value() < 3 || !has_braid_factor_at(g, r, 0)) continue;
    ConjectureProbe p;
    p.word = w;
    p.rotation = k;
    p.s = r[0];
    p.t = r[1];
    p.m = m.value();
    p.u.assign(r.begin() + m.value(), r.end());
    p.word_faux_cfc = is_faux_cfc(g, w, limits);
    p.u_torically_reduced = is_torically_reduced(g, p.u, limits);
    p.hypothesis_holds = p.word_faux_cfc && p.u_torically_reduced;
    p.shortened = alternating(p.s, p.t, static_cast<std::size_t>(p.m - 2));
    p.shortened.insert(p.shortened.end(), p.u.begin(), p.u.end());
    p.shortened_verdict = verdict_of(g, p.shortened, limits);
    p.consistent = !(p.hypothesis_holds && p.shortened_verdict == Verdict::NotTFC);
    return p;
  }
  throw ShapeMismatch("no rotation of " + format_word(g, w) + " starts with a long braid factor");
}

bool has_infinite_support_components(const CoxeterGraph& g, const Word& w) {
  const auto supp = support(w);
  if (supp.empty()) return false;
  const CoxeterGraph sub = induced_subgraph(g, supp);
  for (const auto& comp : components(sub)) {
    if (is_finite_type(induced_subgraph(sub, {comp.begin(), comp.end()}))) return false;
  }
  return true;
}

CvmtProbe cvmt_probe(const CoxeterGraph& g, const std::vector<Word>& words, std::size_t max_conjugator_length,
                     const Limits& limits) {
  CvmtProbe probe;
  probe.max_conjugator_length = max_conjugator_length;
  std::set<NormalForm> conjugators;
  for (const auto& v : enumerate_reduced_words(g, max_conjugator_length, limits)) {
    conjugators.insert(normal_form(g, v, limits));
  }
  std::set<NormalForm> done;
  for (const auto& w : words) {
    if (!is_torically_reduced(g, w, limits)) continue;
    const NormalForm nf = normal_form(g, w, limits);
    if (!done.insert(nf).second) continue;
    if (!has_infinite_support_components(g, w)) {
      ++probe.elements_skipped;
      continue;
    }
    ++probe.elements_checked;
    const auto cls = torically_equivalent_elements(g, w, limits);
    const std::set<NormalForm> same(cls.begin(), cls.end());
    for (const auto& v : conjugators) {
      const NormalForm u = conjugate(g, v.word, w, limits);
      ++probe.conjugates_examined;
      if (same.count(u) || !is_torically_reduced(g, u.word, limits)) continue;
      probe.counterexamples.push_back({w, v.word, u});
    }
  }
  return probe;
}

}  // namespace toricheap
