#include "toricheap/toric.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "toricheap/errors.hpp"

namespace toricheap {

namespace {

void check_vertex(const SimpleGraph& g, Vertex v) {
  if (v >= g.vertex_count()) throw OutOfRange("vertex " + std::to_string(v) + " out of range");
}

bool bits_is_source(const SimpleGraph& g, const Bitset& bits, Vertex v) {
  for (std::size_t e : g.incident(v)) {
    const bool from_low = bits.test(e);
    const Vertex tail = from_low ? g.edges()[e].first : g.edges()[e].second;
    if (tail != v) return false;
  }
  return true;
}

bool bits_is_sink(const SimpleGraph& g, const Bitset& bits, Vertex v) {
  for (std::size_t e : g.incident(v)) {
    const bool from_low = bits.test(e);
    const Vertex head = from_low ? g.edges()[e].second : g.edges()[e].first;
    if (head != v) return false;
  }
  return true;
}

Bitset bits_flip_vertex(const SimpleGraph& g, Bitset bits, Vertex v) {
  for (std::size_t e : g.incident(v)) bits.flip(e);
  return bits;
}

bool bitstring_less(const Bitset& a, const Bitset& b) {
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (a.test(e) != b.test(e)) return b.test(e);
  }
  return false;
}

std::vector<AcyclicOrientation> sorted_orientations(std::shared_ptr<const SimpleGraph> g, const OrientationSet& set) {
  std::vector<Bitset> bits(set.begin(), set.end());
  std::sort(bits.begin(), bits.end(), bitstring_less);
  std::vector<AcyclicOrientation> out;
  out.reserve(bits.size());
  for (auto& b : bits) out.emplace_back(g, std::move(b));
  return out;
}

// Multigraph for Tutte evaluation: vertices 0..n-1, loops allowed.
struct Multigraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

bool connected_without(const Multigraph& m, std::size_t skip, std::size_t a, std::size_t b) {
  std::vector<std::size_t> parent(m.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    if (i == skip) continue;
    parent[find(m.edges[i].first)] = find(m.edges[i].second);
  }
  return find(a) == find(b);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OutOfRange("Tutte value overflows 64 bits");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OutOfRange("Tutte value overflows 64 bits");
  return r;
}

class TutteEvaluator {
 public:
  TutteEvaluator(std::int64_t x, std::int64_t y) : x_(x), y_(y) {}

  std::int64_t eval(Multigraph m) {
    normalize(m);
    auto it = memo_.find(m.edges);
    if (it != memo_.end()) return it->second;
    std::int64_t result = 1;
    if (!m.edges.empty()) {
      const std::size_t e = m.edges.size() - 1;
      const auto [u, v] = m.edges[e];
      Multigraph deleted = m;
      deleted.edges.pop_back();
      if (u == v) {
        result = checked_mul(y_, eval(std::move(deleted)));
      } else if (!connected_without(m, e, u, v)) {
        result = checked_mul(x_, eval(contract(m, e)));
      } else {
        result = checked_add(eval(std::move(deleted)), eval(contract(m, e)));
      }
    }
    memo_.emplace(m.edges, result);
    return result;
  }

 private:
  static Multigraph contract(const Multigraph& m, std::size_t e) {
    const auto [u, v] = m.edges[e];
    Multigraph out;
    out.n = m.n;
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
      if (i == e) continue;
      auto [a, b] = m.edges[i];
      if (a == v) a = u;
      if (b == v) b = u;
      out.edges.emplace_back(a, b);
    }
    return out;
  }

  // Relabels the vertices touched by edges densely in first-use order of the
  // sorted edge list; isolated vertices do not affect T.
  static void normalize(Multigraph& m) {
    for (auto& [a, b] : m.edges) {
      if (a > b) std::swap(a, b);
    }
    std::sort(m.edges.begin(), m.edges.end());
    std::map<std::size_t, std::size_t> relabel;
    for (auto& [a, b] : m.edges) {
      a = relabel.try_emplace(a, relabel.size()).first->second;
      b = relabel.try_emplace(b, relabel.size()).first->second;
      if (a > b) std::swap(a, b);
    }
    std::sort(m.edges.begin(), m.edges.end());
    m.n = relabel.size();
  }

  std::int64_t x_;
  std::int64_t y_;
  std::map<std::vector<std::pair<std::size_t, std::size_t>>, std::int64_t> memo_;
};

// Calls f on every linear extension of the order given by `above` that
// starts with `first`, which must be minimal.
void for_each_extension_from(const std::vector<Bitset>& above, Vertex first, const std::function<void(const std::vector<Vertex>&)>& f) {
  const std::size_t n = above.size();
  std::vector<std::size_t> below(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (above[i].test(j)) ++below[j];
    }
  }
  if (below[first] != 0) return;
  std::vector<Vertex> current;
  std::vector<bool> used(n, false);
  auto take = [&](Vertex v) {
    used[v] = true;
    current.push_back(v);
    for (std::size_t j = 0; j < n; ++j) {
      if (above[v].test(j)) --below[j];
    }
  };
  auto untake = [&](Vertex v) {
    for (std::size_t j = 0; j < n; ++j) {
      if (above[v].test(j)) ++below[j];
    }
    current.pop_back();
    used[v] = false;
  };
  auto recurse = [&](auto& self) -> void {
    if (current.size() == n) {
      f(current);
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v] || below[v] != 0) continue;
      take(v);
      self(self);
      untake(v);
    }
  };
  take(first);
  recurse(recurse);
}

}  // namespace

std::vector<AcyclicOrientation> all_acyclic_orientations(std::shared_ptr<const SimpleGraph> graph, const Limits& limits) {
  const SimpleGraph& g = *graph;
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (m > limits.max_edges) {
    throw TooLarge("graph has " + std::to_string(m) + " edges; the limit is " + std::to_string(limits.max_edges));
  }
  // Orient edges one at a time, rejecting u -> v whenever v already reaches u.
  std::vector<std::vector<Vertex>> succ(n);
  Bitset bits(m);
  std::vector<Bitset> found;
  auto reaches = [&](Vertex from, Vertex to) {
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      if (v == to) return true;
      for (Vertex w : succ[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return false;
  };
  auto recurse = [&](auto& self, std::size_t e) -> void {
    if (e == m) {
      if (found.size() >= limits.max_class) {
        throw ClassCapExceeded("more than " + std::to_string(limits.max_class) + " acyclic orientations");
      }
      found.push_back(bits);
      return;
    }
    const auto [u, v] = g.edges()[e];
    for (const bool forward : {false, true}) {
      const Vertex tail = forward ? u : v;
      const Vertex head = forward ? v : u;
      if (reaches(head, tail)) continue;
      bits.set(e, forward);
      succ[tail].push_back(head);
      self(self, e + 1);
      succ[tail].pop_back();
    }
    bits.set(e, false);
  };
  recurse(recurse, 0);
  std::sort(found.begin(), found.end(), bitstring_less);
  std::vector<AcyclicOrientation> out;
  out.reserve(found.size());
  for (auto& b : found) out.emplace_back(graph, std::move(b));
  return out;
}

AcyclicOrientation flip_source(const AcyclicOrientation& o, Vertex v) {
  check_vertex(o.graph(), v);
  if (!o.is_source(v)) throw NotASource("vertex " + std::to_string(v) + " is not a source");
  return {o.graph_ptr(), bits_flip_vertex(o.graph(), o.bits(), v)};
}

AcyclicOrientation flip_sink(const AcyclicOrientation& o, Vertex v) {
  check_vertex(o.graph(), v);
  if (!o.is_sink(v)) throw NotASource("vertex " + std::to_string(v) + " is not a sink");
  return {o.graph_ptr(), bits_flip_vertex(o.graph(), o.bits(), v)};
}

OrientationSet toric_class_bits(const SimpleGraph& g, const Bitset& start, const Limits& limits) {
  OrientationSet seen{start};
  std::deque<Bitset> queue{start};
  while (!queue.empty()) {
    const Bitset cur = std::move(queue.front());
    queue.pop_front();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.incident(v).empty()) continue;
      if (!bits_is_source(g, cur, v) && !bits_is_sink(g, cur, v)) continue;
      Bitset next = bits_flip_vertex(g, cur, v);
      if (seen.count(next)) continue;
      if (seen.size() >= limits.max_class) {
        throw ClassCapExceeded("toric class exceeds " + std::to_string(limits.max_class) + " orientations");
      }
      seen.insert(next);
      queue.push_back(std::move(next));
    }
  }
  return seen;
}

std::vector<AcyclicOrientation> toric_class(const AcyclicOrientation& o, const Limits& limits) {
  return sorted_orientations(o.graph_ptr(), toric_class_bits(o.graph(), o.bits(), limits));
}

std::vector<std::vector<AcyclicOrientation>> toric_classes(std::shared_ptr<const SimpleGraph> graph, const Limits& limits) {
  const auto all = all_acyclic_orientations(graph, limits);
  OrientationSet assigned;
  std::vector<std::vector<AcyclicOrientation>> classes;
  for (const auto& o : all) {
    if (assigned.count(o.bits())) continue;
    auto cls = toric_class_bits(*graph, o.bits(), limits);
    assigned.insert(cls.begin(), cls.end());
    classes.push_back(sorted_orientations(graph, cls));
  }
  return classes;
}

std::int64_t tutte(const SimpleGraph& g, std::int64_t x, std::int64_t y, const Limits& limits) {
  if (g.edge_count() > limits.max_edges) {
    throw TooLarge("Tutte evaluation limited to " + std::to_string(limits.max_edges) + " edges");
  }
  Multigraph m;
  m.n = g.vertex_count();
  m.edges = g.edges();
  return TutteEvaluator(x, y).eval(std::move(m));
}

ToricPoset::ToricPoset(AcyclicOrientation representative) : rep_(std::move(representative)) {}

ToricPoset ToricPoset::materialized(const Limits& limits) const {
  ToricPoset copy = *this;
  copy.cache_ = members(limits);
  return copy;
}

std::shared_ptr<const OrientationSet> ToricPoset::members(const Limits& limits) const {
  if (cache_) return cache_;
  return std::make_shared<const OrientationSet>(toric_class_bits(rep_.graph(), rep_.bits(), limits));
}

bool ToricPoset::contains(const AcyclicOrientation& o, const Limits& limits) const {
  if (!(o.graph() == graph())) return false;
  return members(limits)->count(o.bits()) > 0;
}

bool same_toric_poset(const ToricPoset& a, const ToricPoset& b, const Limits& limits) {
  return a.contains(b.representative(), limits);
}

bool is_toric_directed_path(const AcyclicOrientation& o, const std::vector<Vertex>& sequence) {
  for (Vertex v : sequence) check_vertex(o.graph(), v);
  if (sequence.size() <= 1) return true;
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    if (!o.has_arc(sequence[i], sequence[i + 1])) return false;
  }
  return o.has_arc(sequence.front(), sequence.back());
}

bool is_toric_chain(const ToricPoset& t, const std::vector<Vertex>& subset) {
  const auto& o = t.representative();
  for (Vertex v : subset) check_vertex(o.graph(), v);
  std::vector<Vertex> c = subset;
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  if (c.size() <= 1) return true;
  const auto reach = o.reachability();
  auto le = [&](Vertex a, Vertex b) { return a == b || reach[a].test(b); };
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (!le(c[i], c[j]) && !le(c[j], c[i])) return false;
    }
  }
  for (const auto& [x, y] : o.arcs()) {
    if (std::all_of(c.begin(), c.end(), [&](Vertex v) { return le(x, v) && le(v, y); })) return true;
  }
  return false;
}

ToricPoset toric_transitive_closure(const ToricPoset& t) {
  const auto& o = t.representative();
  const SimpleGraph& g = o.graph();
  const auto reach = o.reachability();
  std::vector<std::pair<Vertex, Vertex>> arcs = o.arcs();
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (g.has_edge(u, v) || !is_toric_chain(t, {u, v})) continue;
      arcs.emplace_back(reach[u].test(v) ? std::pair{u, v} : std::pair{v, u});
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges = arcs;
  auto closed = std::make_shared<const SimpleGraph>(g.vertex_count(), std::move(edges));
  return ToricPoset(AcyclicOrientation::from_arcs(closed, arcs));
}

ToricPoset toric_hasse(const ToricPoset& t, const Limits& limits) {
  const auto target = total_toric_extensions(t, limits);
  AcyclicOrientation current = t.representative();
  std::size_t e = 0;
  while (e < current.graph().edge_count()) {
    auto smaller = std::make_shared<const SimpleGraph>(current.graph().without_edge(e));
    AcyclicOrientation candidate = current.restrict_to(smaller);
    if (total_toric_extensions(ToricPoset(candidate), limits) == target) {
      current = std::move(candidate);
    } else {
      ++e;
    }
  }
  return ToricPoset(std::move(current));
}

bool is_toric_extension(const ToricPoset& big, const ToricPoset& small, const Limits& limits) {
  if (!small.graph().is_subgraph_of(big.graph())) {
    throw GraphMismatch("the smaller toric poset's graph is not a subgraph of the larger one's");
  }
  auto sub = small.representative().graph_ptr();
  const auto targets = small.members(limits);
  const auto sources = big.members(limits);
  for (const auto& bits : *sources) {
    const AcyclicOrientation o(big.representative().graph_ptr(), bits);
    if (targets->count(o.restrict_to(sub).bits())) return true;
  }
  return false;
}

std::vector<std::vector<Vertex>> total_toric_extensions(const ToricPoset& t, const Limits& limits) {
  const SimpleGraph& g = t.graph();
  const std::size_t n = g.vertex_count();
  if (n > limits.max_toric_vertices) {
    throw TooLarge("total toric extensions limited to " + std::to_string(limits.max_toric_vertices) + " vertices");
  }
  if (n == 0) return {{}};
  // A cyclic ordering qualifies iff its linearization starting at vertex 0
  // does: rotating a linearization is a source-to-sink move on G. That
  // linearization restricts to a member with 0 as a source, so it is a linear
  // extension, starting at 0, of such a member.
  std::set<std::vector<Vertex>> found;
  const auto members = t.members(limits);
  for (const auto& bits : *members) {
    if (!bits_is_source(g, bits, 0)) continue;
    const AcyclicOrientation o(t.representative().graph_ptr(), bits);
    for_each_extension_from(o.reachability(), 0, [&](const std::vector<Vertex>& order) {
      if (found.size() >= limits.max_extensions && !found.count(order)) {
        throw ExtensionCapExceeded("more than " + std::to_string(limits.max_extensions) + " total toric extensions");
      }
      found.insert(order);
    });
  }
  return {found.begin(), found.end()};
}

}  // namespace toricheap
