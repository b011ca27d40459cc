#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "toricheap/coxeter.hpp"
#include "toricheap/digraph.hpp"
#include "toricheap/limits.hpp"

namespace toricheap {

// Finite strict partial order on {0..n-1}, stored as reachability rows.
class Poset {
 public:
  Poset() = default;
  explicit Poset(std::vector<Bitset> above);

  // P(G, omega): i < j iff there is a directed path from i to j.
  static Poset from_orientation(const AcyclicOrientation& o);

  std::size_t size() const noexcept { return above_.size(); }
  bool less(std::size_t i, std::size_t j) const { return above_[i].test(j); }
  bool comparable(std::size_t i, std::size_t j) const { return i == j || less(i, j) || less(j, i); }
  const Bitset& above(std::size_t i) const { return above_[i]; }

  // Cover relations i -> j, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;
  // Every pair i -> j with i < j in the order, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> closure_edges() const;

  // Throws OutOfRange for indices >= size().
  bool is_chain(const std::vector<std::size_t>& subset) const;

  // All linear extensions as element sequences, smaller elements tried first.
  // Throws ExtensionCapExceeded beyond `cap`.
  std::vector<std::vector<std::size_t>> linear_extensions(std::size_t cap) const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  std::vector<Bitset> above_;
};

// The heap H(w): positions 0..m-1 of a word, ordered by reachability in the
// position-increasing orientation of G_w, labelled by the letters.
class Heap {
 public:
  Heap(CoxeterGraph graph, Word word, Poset order);

  const CoxeterGraph& graph() const noexcept { return graph_; }
  const Word& word() const noexcept { return word_; }
  const Poset& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return word_.size(); }
  Gen label(std::size_t i) const { return word_[i]; }

 private:
  CoxeterGraph graph_;
  Word word_;
  Poset order_;
};

// G_w: vertices are positions, {i, j} an edge iff m(w_i, w_j) != 2 (equal
// letters included).
SimpleGraph word_graph(const CoxeterGraph& g, const Word& w);

// Defined for every word, reduced or not.
Heap heap_of_word(const CoxeterGraph& g, const Word& w);

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const Heap& h);
std::vector<std::pair<std::size_t, std::size_t>> closure_edges(const Heap& h);

// Labelled linear extensions L(H) as words, shortlex order.
std::vector<Word> linear_extensions(const Heap& h, const Limits& limits = {});

// Label-preserving order isomorphism test via the occurrence map (k-th s in
// h1 to k-th s in h2). Throws GraphMismatch for different ambient graphs.
bool heaps_isomorphic(const Heap& h1, const Heap& h2);

bool is_chain(const Heap& h, const std::vector<std::size_t>& subset);

// Maps positions of `from` to positions of `to` by occurrence index; empty
// when the letter multisets differ.
std::vector<std::size_t> occurrence_map(const Word& from, const Word& to);

}  // namespace toricheap
