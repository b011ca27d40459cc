#include "toricheap/words.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

#include "toricheap/errors.hpp"

namespace toricheap {

bool has_braid_factor_at(const CoxeterGraph& g, const Word& w, std::size_t pos) {
  if (pos + 1 >= w.size()) return false;
  const Gen s = w[pos];
  const Gen t = w[pos + 1];
  if (s == t) return false;
  const BondStrength m = g.m(s, t);
  if (m.is_infinite()) return false;
  const auto len = static_cast<std::size_t>(m.value());
  if (pos + len > w.size()) return false;
  for (std::size_t k = 0; k < len; ++k) {
    if (w[pos + k] != ((k % 2 == 0) ? s : t)) return false;
  }
  return true;
}

std::vector<Word> braid_neighbors(const CoxeterGraph& g, const Word& w, BraidKind kind) {
  std::vector<Word> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!has_braid_factor_at(g, w, i)) continue;
    const Gen s = w[i];
    const Gen t = w[i + 1];
    const int m = g.m(s, t).value();
    if (kind == BraidKind::Short && m != 2) continue;
    Word next = w;
    for (int k = 0; k < m; ++k) next[i + static_cast<std::size_t>(k)] = (k % 2 == 0) ? t : s;
    out.push_back(std::move(next));
  }
  return out;
}

std::optional<std::size_t> adjacent_repeat(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1]) return i;
  }
  return std::nullopt;
}

namespace {

// BFS closure under braid moves. `visit` may return true to stop early.
// Returns false when the cap was hit before the closure completed.
template <class Visit>
bool close_under_braids(const CoxeterGraph& g, const Word& w, std::size_t cap, BraidKind kind,
                        std::unordered_set<Word, WordHash>& seen, Visit&& visit) {
  std::deque<Word> queue;
  seen.insert(w);
  queue.push_back(w);
  if (visit(w)) return true;
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (auto& next : braid_neighbors(g, cur, kind)) {
      if (seen.count(next)) continue;
      if (seen.size() >= cap) return false;
      seen.insert(next);
      if (visit(next)) return true;
      queue.push_back(std::move(next));
    }
  }
  return true;
}

std::vector<Word> sorted_words(const std::unordered_set<Word, WordHash>& set) {
  std::vector<Word> out(set.begin(), set.end());
  std::sort(out.begin(), out.end(), ShortlexLess{});
  return out;
}

// Reduced words of a reduced word, as an unordered set.
std::vector<Word> orbit_of_reduced(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  std::unordered_set<Word, WordHash> seen;
  const bool complete = close_under_braids(g, w, limits.max_orbit, BraidKind::All, seen, [](const Word&) { return false; });
  if (!complete) throw OrbitCapExceeded("braid orbit exceeds " + std::to_string(limits.max_orbit) + " words");
  return {seen.begin(), seen.end()};
}

}  // namespace

BraidOrbit braid_orbit(const CoxeterGraph& g, const Word& w, std::size_t cap, BraidKind kind) {
  validate_word(g, w);
  BraidOrbit orbit;
  orbit.origin = w;
  std::unordered_set<Word, WordHash> seen;
  orbit.truncated = !close_under_braids(g, w, std::max<std::size_t>(cap, 1), kind, seen, [](const Word&) { return false; });
  orbit.words = sorted_words(seen);
  return orbit;
}

bool is_reduced(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  validate_word(g, w);
  bool witness = false;
  std::unordered_set<Word, WordHash> seen;
  const bool complete = close_under_braids(g, w, limits.max_orbit, BraidKind::All, seen, [&](const Word& u) {
    witness = adjacent_repeat(u).has_value();
    return witness;
  });
  if (witness) return false;
  if (!complete) throw OrbitCapExceeded("braid orbit exceeds " + std::to_string(limits.max_orbit) + " words before a verdict");
  return true;
}

NormalForm normal_form(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  validate_word(g, w);
  // Left-to-right: keep a reduced word r for the prefix. By the exchange
  // condition r*s is shorter than r exactly when some reduced word of r ends
  // in s; then dropping that final s gives a reduced word for r*s.
  Word r;
  for (Gen s : w) {
    const auto orbit = orbit_of_reduced(g, r, limits);
    const Word* best = nullptr;
    for (const auto& u : orbit) {
      if (!u.empty() && u.back() == s && (!best || shortlex_less(u, *best))) best = &u;
    }
    if (best) {
      r = *best;
      r.pop_back();
    } else {
      r.push_back(s);
    }
  }
  const auto orbit = orbit_of_reduced(g, r, limits);
  NormalForm nf;
  nf.word = *std::min_element(orbit.begin(), orbit.end(), ShortlexLess{});
  nf.length = nf.word.size();
  return nf;
}

std::vector<Word> reduced_words(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  if (!is_reduced(g, w, limits)) throw NotReduced("word is not reduced: " + format_word(g, w));
  auto out = orbit_of_reduced(g, w, limits);
  std::sort(out.begin(), out.end(), ShortlexLess{});
  return out;
}

std::vector<Word> commutativity_class(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  validate_word(g, w);
  std::unordered_set<Word, WordHash> seen;
  const bool complete = close_under_braids(g, w, limits.max_orbit, BraidKind::Short, seen, [](const Word&) { return false; });
  if (!complete) throw OrbitCapExceeded("commutativity class exceeds " + std::to_string(limits.max_orbit) + " words");
  return sorted_words(seen);
}

std::vector<std::vector<Word>> commutativity_classes(const CoxeterGraph& g, const Word& w, const Limits& limits) {
  const auto all = reduced_words(g, w, limits);
  std::unordered_set<Word, WordHash> assigned;
  std::vector<std::vector<Word>> classes;
  // `all` is sorted, so each new class is discovered from its least member.
  for (const auto& u : all) {
    if (assigned.count(u)) continue;
    auto cls = commutativity_class(g, u, limits);
    for (const auto& v : cls) assigned.insert(v);
    classes.push_back(std::move(cls));
  }
  return classes;
}

NormalForm multiply(const CoxeterGraph& g, const Word& u, const Word& v, const Limits& limits) {
  Word uv = u;
  uv.insert(uv.end(), v.begin(), v.end());
  return normal_form(g, uv, limits);
}

Word inverse(const Word& w) { return {w.rbegin(), w.rend()}; }

NormalForm conjugate(const CoxeterGraph& g, const Word& v, const Word& w, const Limits& limits) {
  Word x = inverse(v);
  x.insert(x.end(), w.begin(), w.end());
  x.insert(x.end(), v.begin(), v.end());
  return normal_form(g, x, limits);
}

std::size_t power_length(const CoxeterGraph& g, const Word& w, std::size_t k, const Limits& limits) {
  validate_word(g, w);
  Word acc;
  for (std::size_t i = 0; i < k; ++i) {
    acc.insert(acc.end(), w.begin(), w.end());
    acc = normal_form(g, acc, limits).word;
  }
  return acc.size();
}

std::vector<Word> enumerate_reduced_words(const CoxeterGraph& g, std::size_t max_length, const Limits& limits) {
  std::vector<Word> out{Word{}};
  // Elements of the current length, keyed by normal form, with all reduced words.
  std::map<Word, std::vector<Word>, ShortlexLess> level;
  level.emplace(Word{}, std::vector<Word>{Word{}});
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::map<Word, std::vector<Word>, ShortlexLess> next;
    for (const auto& [nf, words] : level) {
      for (Gen s = 0; s < g.rank(); ++s) {
        const bool descent = std::any_of(words.begin(), words.end(), [&](const Word& u) { return !u.empty() && u.back() == s; });
        if (descent) continue;
        Word candidate = nf;
        candidate.push_back(s);
        auto orbit = orbit_of_reduced(g, candidate, limits);
        std::sort(orbit.begin(), orbit.end(), ShortlexLess{});
        next.try_emplace(orbit.front(), std::move(orbit));
      }
    }
    std::vector<Word> layer;
    for (const auto& [nf, words] : next) layer.insert(layer.end(), words.begin(), words.end());
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
    level = std::move(next);
    if (level.empty()) break;
  }
  return out;
}

}  // namespace toricheap
