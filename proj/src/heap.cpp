#include "toricheap/heap.hpp"

#include <algorithm>
#include <map>

#include "toricheap/errors.hpp"

namespace toricheap {

Poset::Poset(std::vector<Bitset> above) : above_(std::move(above)) {}

Poset Poset::from_orientation(const AcyclicOrientation& o) { return Poset(o.reachability()); }

std::vector<std::pair<std::size_t, std::size_t>> Poset::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!less(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k) {
        if (less(i, k) && less(k, j)) cover = false;
      }
      if (cover) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::closure_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (less(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

bool Poset::is_chain(const std::vector<std::size_t>& subset) const {
  for (auto i : subset) {
    if (i >= size()) throw OutOfRange("element " + std::to_string(i) + " out of range");
  }
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      if (!comparable(subset[a], subset[b])) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> Poset::linear_extensions(std::size_t cap) const {
  const std::size_t n = size();
  std::vector<std::size_t> below_count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (less(i, j)) ++below_count[j];
    }
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::vector<bool> used(n, false);

  auto recurse = [&](auto& self) -> void {
    if (current.size() == n) {
      if (out.size() >= cap) throw ExtensionCapExceeded("more than " + std::to_string(cap) + " linear extensions");
      out.push_back(current);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || below_count[v] != 0) continue;
      used[v] = true;
      current.push_back(v);
      for (std::size_t j = 0; j < n; ++j) {
        if (less(v, j)) --below_count[j];
      }
      self(self);
      for (std::size_t j = 0; j < n; ++j) {
        if (less(v, j)) ++below_count[j];
      }
      current.pop_back();
      used[v] = false;
    }
  };
  recurse(recurse);
  return out;
}

Heap::Heap(CoxeterGraph graph, Word word, Poset order)
    : graph_(std::move(graph)), word_(std::move(word)), order_(std::move(order)) {}

SimpleGraph word_graph(const CoxeterGraph& g, const Word& w) {
  validate_word(g, w);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (!g.commutes(w[i], w[j])) edges.emplace_back(i, j);
    }
  }
  return {w.size(), std::move(edges)};
}

Heap heap_of_word(const CoxeterGraph& g, const Word& w) {
  validate_word(g, w);
  const std::size_t n = w.size();
  std::vector<Bitset> above(n, Bitset(n));
  // Every edge points to a later position, so a reverse sweep closes the order.
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.commutes(w[i], w[j])) continue;
      above[i].set(j);
      above[i] |= above[j];
    }
  }
  return Heap(g, w, Poset(std::move(above)));
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const Heap& h) { return h.order().hasse_edges(); }

std::vector<std::pair<std::size_t, std::size_t>> closure_edges(const Heap& h) { return h.order().closure_edges(); }

std::vector<Word> linear_extensions(const Heap& h, const Limits& limits) {
  std::vector<Word> out;
  for (const auto& ext : h.order().linear_extensions(limits.max_extensions)) {
    Word w;
    w.reserve(ext.size());
    for (auto i : ext) w.push_back(h.label(i));
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), ShortlexLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> occurrence_map(const Word& from, const Word& to) {
  if (from.size() != to.size()) return {};
  std::map<Gen, std::vector<std::size_t>> positions;
  for (std::size_t i = 0; i < to.size(); ++i) positions[to[i]].push_back(i);
  std::map<Gen, std::size_t> seen;
  std::vector<std::size_t> f(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto it = positions.find(from[i]);
    const std::size_t k = seen[from[i]]++;
    if (it == positions.end() || k >= it->second.size()) return {};
    f[i] = it->second[k];
  }
  return f;
}

bool heaps_isomorphic(const Heap& h1, const Heap& h2) {
  if (!(h1.graph() == h2.graph())) throw GraphMismatch("heaps live over different Coxeter graphs");
  if (h1.size() != h2.size()) return false;
  if (h1.size() == 0) return true;
  const auto f = occurrence_map(h1.word(), h2.word());
  if (f.empty()) return false;
  for (std::size_t i = 0; i < h1.size(); ++i) {
    for (std::size_t j = 0; j < h1.size(); ++j) {
      if (h1.order().less(i, j) != h2.order().less(f[i], f[j])) return false;
    }
  }
  return true;
}

bool is_chain(const Heap& h, const std::vector<std::size_t>& subset) { return h.order().is_chain(subset); }

}  // namespace toricheap
