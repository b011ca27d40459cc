#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toricheap {

// Dense generator index; declaration order of the graph file.
using Gen = std::uint16_t;

// A word over the generators. The empty word is the identity.
using Word = std::vector<Gen>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = w.size();
    for (Gen g : w) h = h * 1000003u ^ g;
    return h;
  }
};

// Shortlex order: shorter words first, then lexicographic by generator index.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const { return shortlex_less(a, b); }
};

// Order of st. Finite strengths are >= 1; infinity is its own state rather
// than a sentinel integer.
class BondStrength {
 public:
  static constexpr BondStrength finite(int m) { return BondStrength(false, m); }
  static constexpr BondStrength infinite() { return BondStrength(true, 0); }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }
  // Precondition: is_finite().
  constexpr int value() const noexcept { return value_; }

  constexpr bool is_commuting() const noexcept { return !infinite_ && value_ == 2; }
  constexpr bool is_odd() const noexcept { return !infinite_ && value_ % 2 == 1; }
  constexpr bool is_even() const noexcept { return !infinite_ && value_ % 2 == 0; }

  friend constexpr bool operator==(BondStrength, BondStrength) = default;

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  constexpr BondStrength(bool inf, int v) : infinite_(inf), value_(v) {}
  bool infinite_;
  int value_;
};

// One stored bond; only pairs with m >= 3 or m = infinity are stored.
struct Bond {
  Gen s;
  Gen t;  // s < t
  BondStrength m;
  friend bool operator==(const Bond&, const Bond&) = default;
};

// Bond description by generator name, as it appears in graph files.
struct BondSpec {
  std::string s;
  std::string t;
  BondStrength m;
};

// A Coxeter system presented by its Coxeter graph. Immutable once built.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;

  // Validates names and bonds; throws InvalidGraph or UnknownGenerator.
  static CoxeterGraph create(std::vector<std::string> generators, const std::vector<BondSpec>& bonds);

  std::size_t rank() const noexcept { return names_.size(); }
  const std::vector<std::string>& generators() const noexcept { return names_; }
  const std::string& name(Gen s) const;

  std::optional<Gen> find(std::string_view name) const;
  // Throws UnknownGenerator.
  Gen index_of(std::string_view name) const;

  BondStrength m(Gen s, Gen t) const;
  // Distinct generators with m(s,t) = 2.
  bool commutes(Gen s, Gen t) const;
  // Distinct generators joined by an edge of the Coxeter graph.
  bool bonded(Gen s, Gen t) const { return s != t && !commutes(s, t); }

  // Stored bonds sorted by (s, t).
  std::vector<Bond> bonds() const;
  std::vector<Gen> neighbors(Gen s) const;

  friend bool operator==(const CoxeterGraph&, const CoxeterGraph&) = default;

 private:
  void check(Gen s) const;

  std::vector<std::string> names_;
  // Row-major rank x rank table; diagonal holds m = 1.
  std::vector<BondStrength> table_;
};

std::set<Gen> support(const Word& w);

// Restriction of g to `subset`; generators keep their relative declaration
// order and are renumbered densely.
CoxeterGraph induced_subgraph(const CoxeterGraph& g, const std::set<Gen>& subset);

// True iff W(g) is finite, decided by positive definiteness of the cosine
// form B(s,t) = -cos(pi / m(s,t)).
bool is_finite_type(const CoxeterGraph& g);

// Connected components of the Coxeter graph, each sorted.
std::vector<std::vector<Gen>> components(const CoxeterGraph& g);

// Accepts whitespace-separated generator names ("s3 s1 s2"), or a single
// compact token: concatenated names ("s3s1s2", longest name first), or one
// character per generator, either the name itself ("ststaba") or its digit
// suffix ("31212" for s3 s1 s2 s1 s2). An empty or blank string, or a lone
// "e", is the identity. Throws ParseError.
Word parse_word(const CoxeterGraph& g, std::string_view text);

// Whitespace-separated names; the identity prints as the empty string.
std::string format_word(const CoxeterGraph& g, const Word& w);

void validate_word(const CoxeterGraph& g, const Word& w);

}  // namespace toricheap
