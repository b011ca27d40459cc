#include "toricheap/cyclic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "toricheap/errors.hpp"
#include "toricheap/heap.hpp"

namespace toricheap {

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  Word out(w.begin() + static_cast<long>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(k));
  return out;
}

CyclicWord cyclic_word(const Word& w) {
  Word best = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word r = rotate(w, k);
    if (shortlex_less(r, best)) best = std::move(r);
  }
  return {std::move(best)};
}

std::vector<Word> rotations(const CyclicWord& cw) {
  std::vector<Word> out{cw.canonical};
  for (std::size_t k = 1; k < cw.length(); ++k) {
    Word r = rotate(cw.canonical, k);
    if (r == cw.canonical) break;
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_cyclic_word(const CoxeterGraph& g, const CyclicWord& cw) {
  return "[" + format_word(g, cw.canonical) + "]";
}

bool is_cyclically_reduced_word(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  validate_word(g, w);
  for (std::size_t k = 0; k < std::max<std::size_t>(w.size(), 1); ++k) {
    if (!is_reduced(g, rotate(w, k), limits)) return false;
  }
  return true;
}

bool is_cyclically_reduced_element(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  for (const auto& u : reduced_words(g, w, limits)) {
    if (!is_cyclically_reduced_word(g, u, limits)) return false;
  }
  return true;
}

ToricReducedness toric_reducedness(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  validate_word(g, w);
  ToricReducedness result;
  std::unordered_map<Word, Word, WordHash> parent;
  std::deque<Word> queue;
  parent.emplace(w, Word{});
  queue.push_back(w);

  auto refute = [&](const Word& bad) {
    result.torically_reduced = false;
    for (Word cur = bad;;) {
      result.witness.push_back(cur);
      if (cur == w) break;
      cur = parent.at(cur);
    }
    std::reverse(result.witness.begin(), result.witness.end());
  };

  if (adjacent_repeat(w)) {
    refute(w);
    result.visited = 1;
    return result;
  }
  while (!queue.empty()) {
    const Word cur = std::move(queue.front());
    queue.pop_front();
    std::vector<Word> next = braid_neighbors(g, cur, BraidKind::All);
    if (cur.size() > 1) next.push_back(rotate(cur, 1));
    for (auto& u : next) {
      if (parent.count(u)) continue;
      if (parent.size() >= limits.max_orbit) {
        throw OrbitCapExceeded("rotation and braid closure exceeds " + std::to_string(limits.max_orbit) + " words");
      }
      parent.emplace(u, cur);
      if (adjacent_repeat(u)) {
        result.visited = parent.size();
        refute(u);
        return result;
      }
      queue.push_back(std::move(u));
    }
  }
  result.visited = parent.size();
  return result;
}

bool is_torically_reduced(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  return toric_reducedness(g, w, limits).torically_reduced;
}

namespace {

std::vector<CyclicWord> cyclic_closure(const CoxeterGraph& g, const Word& w, BraidKind kind, const Limits& limits) {
  validate_word(g, w);
  const CyclicWord start = cyclic_word(w);
  std::set<CyclicWord> seen{start};
  std::deque<CyclicWord> queue{start};
  while (!queue.empty()) {
    const CyclicWord cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& r : rotations(cur)) {
      for (const auto& u : braid_neighbors(g, r, kind)) {
        CyclicWord cu = cyclic_word(u);
        if (seen.count(cu)) continue;
        if (seen.size() >= limits.max_orbit) {
          throw OrbitCapExceeded("cyclic class exceeds " + std::to_string(limits.max_orbit) + " cyclic words");
        }
        seen.insert(cu);
        queue.push_back(std::move(cu));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<CyclicWord> rtor_cyclic_class(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  if (!is_torically_reduced(g, w, limits)) throw NotToricallyReduced("word is not torically reduced: " + format_word(g, w));
  return cyclic_closure(g, w, BraidKind::All, limits);
}

std::vector<CyclicWord> ctor_class(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  return cyclic_closure(g, w, BraidKind::Short, limits);
}

std::vector<std::vector<CyclicWord>> cyclic_decomposition(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  const auto all = rtor_cyclic_class(g, w, limits);
  std::set<CyclicWord> assigned;
  std::vector<std::vector<CyclicWord>> classes;
  for (const auto& cw : all) {
    if (assigned.count(cw)) continue;
    auto cls = ctor_class(g, cw.canonical, limits);
    assigned.insert(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Word> rtor_words(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  std::vector<Word> out;
  for (const auto& cw : rtor_cyclic_class(g, w, limits)) {
    for (auto& r : rotations(cw)) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), ShortlexLess{});
  return out;
}

std::vector<NormalForm> torically_equivalent_elements(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  std::set<NormalForm> elements;
  for (const auto& u : rtor_words(g, w, limits)) elements.insert(normal_form(g, u, limits));
  return {elements.begin(), elements.end()};
}

ToricHeap::ToricHeap(CoxeterGraph graph, Word word, ToricPoset toric)
    : graph_(std::move(graph)), word_(std::move(word)), toric_(std::move(toric)) {}

ToricHeap toric_heap_of_word(const CoxeterGraph& g, const Word& w) {
  auto gw = std::make_shared<const SimpleGraph>(word_graph(g, w));
  return ToricHeap(g, w, ToricPoset(AcyclicOrientation::natural(gw)));
}

bool toric_heaps_isomorphic(const ToricHeap& t1, const ToricHeap& t2, const Limits& limits) {
  if (!(t1.graph() == t2.graph())) throw GraphMismatch("toric heaps live over different Coxeter graphs");
  const std::size_t m = t1.size();
  if (m != t2.size()) return false;
  if (m == 0) return true;
  const SimpleGraph& g1 = t1.toric().graph();
  const auto g2 = t2.toric().representative().graph_ptr();
  if (g1.edge_count() != g2->edge_count()) return false;

  // Occurrences of each letter form a toric chain, so an isomorphism maps
  // them onto the occurrences in t2 by some cyclic shift, one per letter.
  std::map<Gen, std::vector<std::size_t>> occ1, occ2;
  for (std::size_t i = 0; i < m; ++i) occ1[t1.label(i)].push_back(i);
  for (std::size_t i = 0; i < m; ++i) occ2[t2.label(i)].push_back(i);
  if (occ1.size() != occ2.size()) return false;
  std::vector<std::pair<const std::vector<std::size_t>*, const std::vector<std::size_t>*>> letters;
  for (const auto& [s, pos] : occ1) {
    auto it = occ2.find(s);
    if (it == occ2.end() || it->second.size() != pos.size()) return false;
    letters.emplace_back(&pos, &it->second);
  }

  const auto targets = t2.toric().members(limits);
  const auto arcs1 = t1.toric().representative().arcs();
  std::vector<std::size_t> shift(letters.size(), 0);
  std::vector<Vertex> f(m);
  std::size_t tried = 0;
  while (true) {
    if (++tried > limits.max_orbit) throw OrbitCapExceeded("toric heap isomorphism search exceeded the orbit cap");
    for (std::size_t l = 0; l < letters.size(); ++l) {
      const auto& [from, to] = letters[l];
      for (std::size_t j = 0; j < from->size(); ++j) f[(*from)[j]] = (*to)[(j + shift[l]) % to->size()];
    }
    std::vector<std::pair<Vertex, Vertex>> arcs;
    bool edges_match = true;
    for (const auto& [a, b] : arcs1) {
      if (!g2->has_edge(f[a], f[b])) {
        edges_match = false;
        break;
      }
      arcs.emplace_back(f[a], f[b]);
    }
    if (edges_match && targets->count(AcyclicOrientation::from_arcs(g2, arcs).bits())) return true;
    std::size_t l = 0;
    while (l < letters.size() && ++shift[l] == letters[l].first->size()) shift[l++] = 0;
    if (l == letters.size()) return false;
  }
}

std::vector<CyclicWord> ltor(const ToricHeap& t, const Limits& limits) {
  std::set<CyclicWord> out;
  for (const auto& order : total_toric_extensions(t.toric(), limits)) {
    Word w;
    w.reserve(order.size());
    for (Vertex v : order) w.push_back(t.label(v));
    out.insert(cyclic_word(w));
  }
  return {out.begin(), out.end()};
}

}  // namespace toricheap
