#pragma once

#include <cstddef>
#include <vector>

#include "toricheap/coxeter.hpp"
#include "toricheap/limits.hpp"
#include "toricheap/toric.hpp"
#include "toricheap/words.hpp"

namespace toricheap {

// Rotation class of a word, held by its shortlex-least rotation.
struct CyclicWord {
  Word canonical;

  std::size_t length() const noexcept { return canonical.size(); }
  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord& a, const CyclicWord& b) {
    if (shortlex_less(a.canonical, b.canonical)) return std::strong_ordering::less;
    if (shortlex_less(b.canonical, a.canonical)) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

// w with its first k letters moved to the end.
Word rotate(const Word& w, std::size_t k);
CyclicWord cyclic_word(const Word& w);
// Distinct rotations, starting from the canonical one.
std::vector<Word> rotations(const CyclicWord& cw);

// Printed as "[s1 s2 s3]".
std::string format_cyclic_word(const CoxeterGraph& g, const CyclicWord& cw);

// Every rotation of w is reduced.
bool is_cyclically_reduced_word(const CoxeterGraph& g, const Word& w, const Limits& limits = {});
// Every reduced word of the element is cyclically reduced. Throws NotReduced.
bool is_cyclically_reduced_element(const CoxeterGraph& g, const Word& w, const Limits& limits = {});

struct ToricReducedness {
  bool torically_reduced = true;
  // When refuted: words from w, each one rotation or braid move from the
  // previous, ending at a word with two equal adjacent letters.
  std::vector<Word> witness;
  std::size_t visited = 0;
};

// Breadth-first search of the closure of w under rotations and braid moves.
// Throws OrbitCapExceeded when the closure is too large to settle.
ToricReducedness toric_reducedness(const CoxeterGraph& g, const Word& w, const Limits& limits = {});
bool is_torically_reduced(const CoxeterGraph& g, const Word& w, const Limits& limits = {});

// R_tor([w]): closure of [w] under cyclic braid moves. Throws
// NotToricallyReduced.
std::vector<CyclicWord> rtor_cyclic_class(const CoxeterGraph& g, const Word& w, const Limits& limits = {});
// C_tor([w]): closure of [w] under cyclic commutations.
std::vector<CyclicWord> ctor_class(const CoxeterGraph& g, const Word& w, const Limits& limits = {});
// R_tor([w]) split into C_tor classes, ordered by least member.
std::vector<std::vector<CyclicWord>> cyclic_decomposition(const CoxeterGraph& g, const Word& w, const Limits& limits = {});

// Every rotation of every cyclic word in R_tor([w]), shortlex order.
std::vector<Word> rtor_words(const CoxeterGraph& g, const Word& w, const Limits& limits = {});
// The elements those words represent, ordered by normal form.
std::vector<NormalForm> torically_equivalent_elements(const CoxeterGraph& g, const Word& w, const Limits& limits = {});

// Toric poset of (G_w, omega_w) with positions labelled by letters.
class ToricHeap {
 public:
  ToricHeap(CoxeterGraph graph, Word word, ToricPoset toric);

  const CoxeterGraph& graph() const noexcept { return graph_; }
  const Word& word() const noexcept { return word_; }
  const ToricPoset& toric() const noexcept { return toric_; }
  std::size_t size() const noexcept { return word_.size(); }
  Gen label(std::size_t i) const { return word_[i]; }

 private:
  CoxeterGraph graph_;
  Word word_;
  ToricPoset toric_;
};

ToricHeap toric_heap_of_word(const CoxeterGraph& g, const Word& w);

// Tries every cyclic shift of each letter's occurrences and asks whether
// t1's orientation lands in t2's class. Throws GraphMismatch.
bool toric_heaps_isomorphic(const ToricHeap& t1, const ToricHeap& t2, const Limits& limits = {});

// L_tor: total toric extensions read through the labels, as cyclic words.
std::vector<CyclicWord> ltor(const ToricHeap& t, const Limits& limits = {});

}  // namespace toricheap
