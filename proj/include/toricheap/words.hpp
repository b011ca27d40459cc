#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toricheap/coxeter.hpp"
#include "toricheap/limits.hpp"

namespace toricheap {

enum class BraidKind {
  All,    // every braid relation of finite length, commutations included
  Short,  // commutations only (m = 2)
};

// All words obtained from w by a single braid move <s,t>_m -> <t,s>_m.
// Unbounded bonds contribute nothing.
std::vector<Word> braid_neighbors(const CoxeterGraph& g, const Word& w, BraidKind kind = BraidKind::All);

// Index i with w[i] == w[i+1], if any.
std::optional<std::size_t> adjacent_repeat(const Word& w);

// True iff the factor of w starting at `pos` equals <s,t>_m for the pair
// (w[pos], w[pos+1]) with finite m = m(s,t) >= 2.
bool has_braid_factor_at(const CoxeterGraph& g, const Word& w, std::size_t pos);

struct BraidOrbit {
  std::vector<Word> words;  // shortlex order
  Word origin;
  bool truncated = false;
};

// Breadth-first closure of {w} under single braid moves. When the closure
// would exceed `cap` words the result holds the first `cap` and is flagged.
BraidOrbit braid_orbit(const CoxeterGraph& g, const Word& w, std::size_t cap, BraidKind kind = BraidKind::All);

// Tits' criterion: w is reduced iff no word braid-equivalent to it has two
// equal adjacent letters. Throws OrbitCapExceeded when inconclusive.
bool is_reduced(const CoxeterGraph& g, const Word& w, const Limits& limits = {});

struct NormalForm {
  Word word;  // shortlex-least reduced word of the element
  std::size_t length = 0;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm& a, const NormalForm& b) {
    if (shortlex_less(a.word, b.word)) return std::strong_ordering::less;
    if (shortlex_less(b.word, a.word)) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

NormalForm normal_form(const CoxeterGraph& g, const Word& w, const Limits& limits = {});

// R(w) for reduced w, in shortlex order. Throws NotReduced, OrbitCapExceeded.
std::vector<Word> reduced_words(const CoxeterGraph& g, const Word& w, const Limits& limits = {});

// C(w): closure of w under commutations only, shortlex order.
std::vector<Word> commutativity_class(const CoxeterGraph& g, const Word& w, const Limits& limits = {});

// Partition of R(w) into commutativity classes, ordered by least member.
std::vector<std::vector<Word>> commutativity_classes(const CoxeterGraph& g, const Word& w, const Limits& limits = {});

NormalForm multiply(const CoxeterGraph& g, const Word& u, const Word& v, const Limits& limits = {});
Word inverse(const Word& w);
// Normal form of v^{-1} w v.
NormalForm conjugate(const CoxeterGraph& g, const Word& v, const Word& w, const Limits& limits = {});
// l(w^k).
std::size_t power_length(const CoxeterGraph& g, const Word& w, std::size_t k, const Limits& limits = {});

// Every reduced word of length <= max_length, ordered by shortlex.
std::vector<Word> enumerate_reduced_words(const CoxeterGraph& g, std::size_t max_length, const Limits& limits = {});

}  // namespace toricheap
