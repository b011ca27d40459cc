#pragma once

// Brute-force reference implementations. Each one follows the textbook
// definition as directly as possible and shares no code with the library
// beyond the graph and word containers.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "toricheap/coxeter.hpp"
#include "toricheap/digraph.hpp"

namespace oracle {

using toricheap::CoxeterGraph;
using toricheap::Gen;
using toricheap::SimpleGraph;
using toricheap::Word;

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;
// dir[e] true means edges[e].first -> edges[e].second.
using Dirs = std::vector<bool>;

inline Edges edges_of(const SimpleGraph& g) {
  Edges out;
  for (const auto& [u, v] : g.edges()) out.emplace_back(u, v);
  return out;
}

inline std::vector<std::vector<std::size_t>> out_lists(std::size_t n, const Edges& edges, const Dirs& dir) {
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (!dir[e]) std::swap(u, v);
    out[u].push_back(v);
  }
  return out;
}

// Kahn's algorithm.
inline bool acyclic(std::size_t n, const Edges& edges, const Dirs& dir) {
  std::vector<std::size_t> indeg(n, 0);
  const auto out = out_lists(n, edges, dir);
  for (const auto& l : out) {
    for (auto v : l) ++indeg[v];
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const auto v = ready.back();
    ready.pop_back();
    ++seen;
    for (auto w : out[v]) {
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  return seen == n;
}

inline std::vector<Dirs> acyclic_orientations(std::size_t n, const Edges& edges) {
  std::vector<Dirs> out;
  const std::size_t m = edges.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Dirs d(m);
    for (std::size_t e = 0; e < m; ++e) d[e] = (mask >> e) & 1;
    if (acyclic(n, edges, d)) out.push_back(std::move(d));
  }
  return out;
}

// Whitney rank expansion: sum over A of (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A)).
inline std::int64_t tutte(std::size_t n, const Edges& edges, std::int64_t x, std::int64_t y) {
  auto rank = [&](std::uint64_t mask) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t v) {
      return parent[v] == v ? v : parent[v] = root(parent[v]);
    };
    std::int64_t r = 0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!((mask >> e) & 1)) continue;
      const auto a = root(edges[e].first), b = root(edges[e].second);
      if (a != b) {
        parent[a] = b;
        ++r;
      }
    }
    return r;
  };
  auto power = [](std::int64_t b, std::int64_t e) {
    std::int64_t p = 1;
    while (e-- > 0) p *= b;
    return p;
  };
  const std::uint64_t full = (std::uint64_t{1} << edges.size()) - 1;
  const std::int64_t rE = rank(full);
  std::int64_t total = 0;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    const std::int64_t rA = rank(mask);
    const std::int64_t size = std::popcount(mask);
    total += power(x - 1, rE - rA) * power(y - 1, size - rA);
  }
  return total;
}

inline bool is_source(std::size_t v, const Edges& edges, const Dirs& dir) {
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].first == v && !dir[e]) return false;
    if (edges[e].second == v && dir[e]) return false;
  }
  return true;
}

inline bool is_sink(std::size_t v, const Edges& edges, const Dirs& dir) {
  Dirs flipped(dir.size());
  for (std::size_t e = 0; e < dir.size(); ++e) flipped[e] = !dir[e];
  return is_source(v, edges, flipped);
}

inline Dirs reverse_at(std::size_t v, const Edges& edges, Dirs dir) {
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].first == v || edges[e].second == v) dir[e] = !dir[e];
  }
  return dir;
}

// Closure under source-to-sink and sink-to-source moves.
inline std::set<Dirs> toric_class(std::size_t n, const Edges& edges, const Dirs& start) {
  std::set<Dirs> seen{start};
  std::deque<Dirs> queue{start};
  while (!queue.empty()) {
    const Dirs d = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < n; ++v) {
      if (!is_source(v, edges, d) && !is_sink(v, edges, d)) continue;
      Dirs next = reverse_at(v, edges, d);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

inline std::size_t toric_class_count(std::size_t n, const Edges& edges) {
  std::set<Dirs> done;
  std::size_t classes = 0;
  for (const auto& d : acyclic_orientations(n, edges)) {
    if (done.count(d)) continue;
    ++classes;
    for (const auto& m : toric_class(n, edges, d)) done.insert(m);
  }
  return classes;
}

inline bool has_arc(const Edges& edges, const Dirs& dir, std::size_t a, std::size_t b) {
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e] == std::pair{a, b}) return dir[e];
    if (edges[e] == std::pair{b, a}) return !dir[e];
  }
  return false;
}

// Vertex sets of all toric directed paths: directed paths i1 -> ... -> ik
// whose closing arc i1 -> ik is present. Singletons count.
inline std::set<std::vector<std::size_t>> toric_path_sets(std::size_t n, const Edges& edges, const Dirs& dir) {
  std::set<std::vector<std::size_t>> out;
  const auto succ = out_lists(n, edges, dir);
  std::vector<std::size_t> path;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    path.push_back(v);
    if (path.size() == 1 || has_arc(edges, dir, path.front(), v)) {
      auto s = path;
      std::sort(s.begin(), s.end());
      out.insert(s);
    }
    for (auto w : succ[v]) walk(w);
    path.pop_back();
  };
  for (std::size_t v = 0; v < n; ++v) walk(v);
  return out;
}

inline bool is_toric_chain(std::size_t n, const Edges& edges, const Dirs& dir, std::vector<std::size_t> subset) {
  std::sort(subset.begin(), subset.end());
  if (subset.empty()) return true;
  for (const auto& s : toric_path_sets(n, edges, dir)) {
    if (std::includes(s.begin(), s.end(), subset.begin(), subset.end())) return true;
  }
  return false;
}

// All toric chains as sorted vertex sets, including the empty set.
inline std::set<std::vector<std::size_t>> toric_chains(std::size_t n, const Edges& edges, const Dirs& dir) {
  std::set<std::vector<std::size_t>> out{{}};
  for (const auto& s : toric_path_sets(n, edges, dir)) {
    const std::size_t k = s.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<std::size_t> sub;
      for (std::size_t i = 0; i < k; ++i) {
        if ((mask >> i) & 1) sub.push_back(s[i]);
      }
      out.insert(sub);
    }
  }
  return out;
}

// Orientation of the edges induced by a linear order of the vertices.
inline Dirs from_order(const Edges& edges, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  Dirs d(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) d[e] = pos[edges[e].first] < pos[edges[e].second];
  return d;
}

// Scan of all (n-1)! cyclic orders with vertex 0 first. A cyclic order is a
// total toric extension when one of its rotations orients G into the class.
inline std::vector<std::vector<std::size_t>> total_toric_extensions(std::size_t n, const Edges& edges,
                                                                    const Dirs& dir) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return {{}};
  const auto cls = toric_class(n, edges, dir);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<std::size_t> rot(order.begin() + k, order.end());
      rot.insert(rot.end(), order.begin(), order.begin() + k);
      if (cls.count(from_order(edges, rot))) {
        out.push_back(order);
        break;
      }
    }
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return out;
}

// Word graph: positions i < j joined when their letters are equal or bonded.
inline Edges word_edges(const CoxeterGraph& g, const Word& w) {
  Edges out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] == w[j] || !g.commutes(w[i], w[j])) out.emplace_back(i, j);
    }
  }
  return out;
}

// Heap order as a full relation matrix via Floyd-Warshall closure.
inline std::vector<std::vector<bool>> heap_relation(const CoxeterGraph& g, const Word& w) {
  const std::size_t n = w.size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (const auto& [i, j] : word_edges(g, w)) less[i][j] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (less[i][k] && less[k][j]) less[i][j] = true;
      }
    }
  }
  return less;
}

// Calls f on every label-preserving bijection positions(w1) -> positions(w2).
inline bool for_each_label_bijection(const Word& w1, const Word& w2,
                                     const std::function<bool(const std::vector<std::size_t>&)>& f) {
  if (w1.size() != w2.size()) return false;
  std::vector<std::size_t> perm(w2.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < w1.size() && ok; ++i) ok = w1[i] == w2[perm[i]];
    if (ok && f(perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool heaps_isomorphic(const CoxeterGraph& g, const Word& w1, const Word& w2) {
  const auto a = heap_relation(g, w1), b = heap_relation(g, w2);
  return for_each_label_bijection(w1, w2, [&](const std::vector<std::size_t>& p) {
    for (std::size_t i = 0; i < w1.size(); ++i) {
      for (std::size_t j = 0; j < w1.size(); ++j) {
        if (a[i][j] != b[p[i]][p[j]]) return false;
      }
    }
    return true;
  });
}

// Toric heaps agree when a label-preserving bijection carries the natural
// orientation of w1's word graph into the toric class of w2's.
inline bool toric_heaps_isomorphic(const CoxeterGraph& g, const Word& w1, const Word& w2) {
  const auto e2 = word_edges(g, w2);
  const auto cls = toric_class(w2.size(), e2, Dirs(e2.size(), true));
  const auto e1 = word_edges(g, w1);
  if (e1.size() != e2.size()) return false;
  return for_each_label_bijection(w1, w2, [&](const std::vector<std::size_t>& p) {
    Dirs d(e2.size());
    for (const auto& [i, j] : e1) {
      const auto a = p[i], b = p[j];
      for (std::size_t e = 0; e < e2.size(); ++e) {
        if (e2[e] == std::pair{a, b}) d[e] = true;
        if (e2[e] == std::pair{b, a}) d[e] = false;
      }
    }
    return cls.count(d) > 0;
  });
}

inline Word rotation(const Word& w, std::size_t k) {
  Word r(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return r;
}

inline Word least_rotation(const Word& w) {
  Word best = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word r = rotation(w, k);
    if (toricheap::shortlex_less(r, best)) best = std::move(r);
  }
  return best;
}

// Linear commutation class: closure under swaps of adjacent commuting letters.
inline std::set<Word> commutation_class(const CoxeterGraph& g, const Word& w) {
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    const Word u = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      if (u[i] == u[i + 1] || !g.commutes(u[i], u[i + 1])) continue;
      Word v = u;
      std::swap(v[i], v[i + 1]);
      if (seen.insert(v).second) queue.push_back(std::move(v));
    }
  }
  return seen;
}

// Cyclic-word closure under rotation and the given local moves; words are
// kept as their least rotations.
inline std::set<Word> cyclic_closure(const Word& w, const std::function<std::vector<Word>(const Word&)>& moves) {
  std::set<Word> seen{least_rotation(w)};
  std::deque<Word> queue{least_rotation(w)};
  while (!queue.empty()) {
    const Word u = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < std::max<std::size_t>(u.size(), 1); ++k) {
      for (const auto& v : moves(rotation(u, k))) {
        Word c = least_rotation(v);
        if (seen.insert(c).second) queue.push_back(std::move(c));
      }
    }
  }
  return seen;
}

inline std::vector<Word> commutation_moves(const CoxeterGraph& g, const Word& u) {
  std::vector<Word> out;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    if (u[i] == u[i + 1] || !g.commutes(u[i], u[i + 1])) continue;
    Word v = u;
    std::swap(v[i], v[i + 1]);
    out.push_back(std::move(v));
  }
  return out;
}

inline std::vector<Word> braid_moves(const CoxeterGraph& g, const Word& u) {
  std::vector<Word> out;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    const Gen s = u[i], t = u[i + 1];
    const auto m = g.m(s, t);
    if (s == t || m.is_infinite()) continue;
    const auto len = static_cast<std::size_t>(m.value());
    if (i + len > u.size()) continue;
    bool alternating = true;
    for (std::size_t k = 0; k < len && alternating; ++k) alternating = u[i + k] == (k % 2 == 0 ? s : t);
    if (!alternating) continue;
    Word v = u;
    for (std::size_t k = 0; k < len; ++k) v[i + k] = (k % 2 == 0 ? t : s);
    out.push_back(std::move(v));
  }
  return out;
}

inline std::set<Word> ctor_closure(const CoxeterGraph& g, const Word& w) {
  return cyclic_closure(w, [&](const Word& u) { return commutation_moves(g, u); });
}

inline std::set<Word> rtor_closure(const CoxeterGraph& g, const Word& w) {
  return cyclic_closure(w, [&](const Word& u) { return braid_moves(g, u); });
}

}  // namespace oracle
