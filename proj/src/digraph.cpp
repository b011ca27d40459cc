#include "toricheap/digraph.hpp"

#include <algorithm>
#include <string>

#include "toricheap/errors.hpp"

namespace toricheap {

SimpleGraph::SimpleGraph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n) {
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) throw OutOfRange("edge endpoint out of range");
    if (u == v) throw InvalidGraph("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  index_.assign(n * n, -1);
  incident_.assign(n, {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    index_[u * n + v] = index_[v * n + u] = static_cast<long>(e);
    incident_[u].push_back(e);
    incident_[v].push_back(e);
  }
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return {n, std::move(e)};
}

SimpleGraph SimpleGraph::path(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return {n, std::move(e)};
}

SimpleGraph SimpleGraph::cycle(std::size_t n) {
  auto e = path(n).edges();
  if (n >= 3) e.emplace_back(0, n - 1);
  return {n, std::move(e)};
}

SimpleGraph SimpleGraph::edgeless(std::size_t n) { return {n, {}}; }

long SimpleGraph::edge_index(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) throw OutOfRange("vertex out of range");
  return index_[u * n_ + v];
}

SimpleGraph SimpleGraph::without_edge(std::size_t e) const {
  auto edges = edges_;
  edges.erase(edges.begin() + static_cast<long>(e));
  return {n_, std::move(edges)};
}

bool SimpleGraph::is_subgraph_of(const SimpleGraph& other) const {
  if (n_ != other.n_) return false;
  return std::all_of(edges_.begin(), edges_.end(), [&](const auto& e) { return other.has_edge(e.first, e.second); });
}

bool is_acyclic(const SimpleGraph& g, const Bitset& forward) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indeg(n, 0);
  std::vector<std::vector<Vertex>> succ(n);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges()[e];
    if (!forward.test(e)) std::swap(u, v);
    succ[u].push_back(v);
    ++indeg[v];
  }
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    if (indeg[v] == 0) stack.push_back(v);
  }
  std::size_t seen = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    ++seen;
    for (Vertex w : succ[v]) {
      if (--indeg[w] == 0) stack.push_back(w);
    }
  }
  return seen == n;
}

AcyclicOrientation::AcyclicOrientation(std::shared_ptr<const SimpleGraph> graph, Bitset forward)
    : graph_(std::move(graph)), forward_(std::move(forward)) {
  if (forward_.size() != graph_->edge_count()) throw NotAcyclic("orientation size does not match edge count");
  if (!is_acyclic(*graph_, forward_)) throw NotAcyclic("orientation contains a directed cycle");
}

AcyclicOrientation AcyclicOrientation::natural(std::shared_ptr<const SimpleGraph> graph) {
  Bitset bits(graph->edge_count());
  for (std::size_t e = 0; e < bits.size(); ++e) bits.set(e);
  return {std::move(graph), std::move(bits)};
}

AcyclicOrientation AcyclicOrientation::from_order(std::shared_ptr<const SimpleGraph> graph, const std::vector<Vertex>& order) {
  std::vector<std::size_t> pos(graph->vertex_count(), 0);
  if (order.size() != graph->vertex_count()) throw OutOfRange("order must list every vertex once");
  std::vector<bool> hit(order.size(), false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= order.size() || hit[order[i]]) throw OutOfRange("order must list every vertex once");
    hit[order[i]] = true;
    pos[order[i]] = i;
  }
  Bitset bits(graph->edge_count());
  for (std::size_t e = 0; e < bits.size(); ++e) {
    const auto [u, v] = graph->edges()[e];
    bits.set(e, pos[u] < pos[v]);
  }
  return {std::move(graph), std::move(bits)};
}

AcyclicOrientation AcyclicOrientation::from_arcs(std::shared_ptr<const SimpleGraph> graph,
                                                 const std::vector<std::pair<Vertex, Vertex>>& arcs) {
  Bitset bits(graph->edge_count());
  std::vector<bool> hit(graph->edge_count(), false);
  for (const auto& [a, b] : arcs) {
    const long e = graph->edge_index(a, b);
    if (e < 0) throw OutOfRange("arc is not an edge of the graph");
    if (hit[static_cast<std::size_t>(e)]) throw OutOfRange("edge oriented twice");
    hit[static_cast<std::size_t>(e)] = true;
    bits.set(static_cast<std::size_t>(e), a < b);
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) throw OutOfRange("not every edge is oriented");
  return {std::move(graph), std::move(bits)};
}

std::pair<Vertex, Vertex> AcyclicOrientation::arc(std::size_t e) const {
  const auto [u, v] = graph_->edges()[e];
  return forward_.test(e) ? std::pair{u, v} : std::pair{v, u};
}

std::vector<std::pair<Vertex, Vertex>> AcyclicOrientation::arcs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t e = 0; e < graph_->edge_count(); ++e) out.push_back(arc(e));
  return out;
}

bool AcyclicOrientation::has_arc(Vertex from, Vertex to) const {
  const long e = graph_->edge_index(from, to);
  return e >= 0 && arc(static_cast<std::size_t>(e)).first == from;
}

bool AcyclicOrientation::is_source(Vertex v) const {
  for (std::size_t e : graph_->incident(v)) {
    if (arc(e).first != v) return false;
  }
  return true;
}

bool AcyclicOrientation::is_sink(Vertex v) const {
  for (std::size_t e : graph_->incident(v)) {
    if (arc(e).second != v) return false;
  }
  return true;
}

std::vector<Vertex> AcyclicOrientation::sources() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph_->vertex_count(); ++v) {
    if (is_source(v)) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> AcyclicOrientation::sinks() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph_->vertex_count(); ++v) {
    if (is_sink(v)) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<Vertex>> AcyclicOrientation::successors() const {
  std::vector<std::vector<Vertex>> succ(graph_->vertex_count());
  for (std::size_t e = 0; e < graph_->edge_count(); ++e) {
    const auto [a, b] = arc(e);
    succ[a].push_back(b);
  }
  for (auto& s : succ) std::sort(s.begin(), s.end());
  return succ;
}

std::vector<Vertex> AcyclicOrientation::topological_order() const {
  const std::size_t n = graph_->vertex_count();
  const auto succ = successors();
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& s : succ) {
    for (Vertex w : s) ++indeg[w];
  }
  std::vector<Vertex> order;
  std::vector<bool> done(n, false);
  while (order.size() < n) {
    Vertex pick = n;
    for (Vertex v = 0; v < n; ++v) {
      if (!done[v] && indeg[v] == 0) {
        pick = v;
        break;
      }
    }
    done[pick] = true;
    order.push_back(pick);
    for (Vertex w : succ[pick]) --indeg[w];
  }
  return order;
}

std::vector<Bitset> AcyclicOrientation::reachability() const {
  const std::size_t n = graph_->vertex_count();
  const auto succ = successors();
  const auto order = topological_order();
  std::vector<Bitset> reach(n, Bitset(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (Vertex w : succ[*it]) {
      reach[*it].set(w);
      reach[*it] |= reach[w];
    }
  }
  return reach;
}

AcyclicOrientation AcyclicOrientation::restrict_to(std::shared_ptr<const SimpleGraph> sub) const {
  if (!sub->is_subgraph_of(*graph_)) throw GraphMismatch("restriction target is not a subgraph");
  Bitset bits(sub->edge_count());
  for (std::size_t e = 0; e < sub->edge_count(); ++e) {
    const auto [u, v] = sub->edges()[e];
    bits.set(e, forward_.test(static_cast<std::size_t>(graph_->edge_index(u, v))));
  }
  return {std::move(sub), std::move(bits)};
}

std::string AcyclicOrientation::bitstring() const {
  std::string s;
  for (std::size_t e = 0; e < forward_.size(); ++e) s += forward_.test(e) ? '1' : '0';
  return s;
}

}  // namespace toricheap
