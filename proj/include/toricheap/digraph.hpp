#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "toricheap/bitset.hpp"

namespace toricheap {

using Vertex = std::size_t;

// Undirected simple graph on {0..n-1}. Edges are stored as (u, v) with u < v
// in lexicographic order; that order indexes orientation bitstrings.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  // Duplicate edges are merged; self-loops throw InvalidGraph.
  SimpleGraph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges);

  static SimpleGraph complete(std::size_t n);
  static SimpleGraph path(std::size_t n);
  static SimpleGraph cycle(std::size_t n);
  static SimpleGraph edgeless(std::size_t n);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }

  // Index of edge {u, v} or -1.
  long edge_index(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return edge_index(u, v) >= 0; }
  // Edge indices incident to v.
  const std::vector<std::size_t>& incident(Vertex v) const { return incident_[v]; }

  SimpleGraph without_edge(std::size_t e) const;
  // Edge set inclusion on the same vertex set.
  bool is_subgraph_of(const SimpleGraph& other) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<long> index_;  // n x n
  std::vector<std::vector<std::size_t>> incident_;
};

// An orientation of a SimpleGraph. Bit e is set when edge (u, v), u < v, is
// directed u -> v. The graph is shared between all orientations built from it.
class AcyclicOrientation {
 public:
  AcyclicOrientation() = default;
  // Throws NotAcyclic.
  AcyclicOrientation(std::shared_ptr<const SimpleGraph> graph, Bitset forward);

  // Orients every edge from the smaller to the larger vertex.
  static AcyclicOrientation natural(std::shared_ptr<const SimpleGraph> graph);
  // Orients edge {u, v} as u -> v iff u precedes v in `order`.
  static AcyclicOrientation from_order(std::shared_ptr<const SimpleGraph> graph, const std::vector<Vertex>& order);
  // Orients the listed arcs; every graph edge must appear exactly once.
  static AcyclicOrientation from_arcs(std::shared_ptr<const SimpleGraph> graph,
                                      const std::vector<std::pair<Vertex, Vertex>>& arcs);

  const SimpleGraph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const SimpleGraph>& graph_ptr() const noexcept { return graph_; }
  const Bitset& bits() const noexcept { return forward_; }

  // Directed arc for edge e.
  std::pair<Vertex, Vertex> arc(std::size_t e) const;
  std::vector<std::pair<Vertex, Vertex>> arcs() const;
  bool has_arc(Vertex from, Vertex to) const;

  bool is_source(Vertex v) const;
  bool is_sink(Vertex v) const;
  std::vector<Vertex> sources() const;
  std::vector<Vertex> sinks() const;

  // Out-neighbours per vertex.
  std::vector<std::vector<Vertex>> successors() const;
  // Reachability: row v holds every vertex reachable from v by a nonempty path.
  std::vector<Bitset> reachability() const;
  // A topological order, smallest available vertex first.
  std::vector<Vertex> topological_order() const;

  // Restriction to a subgraph with the same vertex set.
  AcyclicOrientation restrict_to(std::shared_ptr<const SimpleGraph> sub) const;

  // Bitstring over the canonical edge order, '1' meaning u -> v for u < v.
  std::string bitstring() const;

  friend bool operator==(const AcyclicOrientation& a, const AcyclicOrientation& b) {
    return a.forward_ == b.forward_ && (a.graph_ == b.graph_ || *a.graph_ == *b.graph_);
  }

 private:
  std::shared_ptr<const SimpleGraph> graph_;
  Bitset forward_;
};

bool is_acyclic(const SimpleGraph& g, const Bitset& forward);

}  // namespace toricheap
