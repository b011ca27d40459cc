#include <set>

#include "doctest.h"
#include "oracles/brute.hpp"
#include "support.hpp"
#include "toricheap/errors.hpp"
#include "toricheap/heap.hpp"
#include "toricheap/words.hpp"

using namespace toricheap;

TEST_CASE("heap of the running example") {
  const auto g = testing::graph("b2");
  const auto h = heap_of_word(g, testing::word(g, "s3 s1 s2 s1 s2"));
  CHECK(h.size() == 5);
  using P = std::vector<std::pair<std::size_t, std::size_t>>;
  CHECK(hasse_edges(h) == P{{0, 2}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(closure_edges(h).size() == 9);
  CHECK(testing::names(g, linear_extensions(h)) == std::vector<std::string>{"s1 s3 s2 s1 s2", "s3 s1 s2 s1 s2"});
}

TEST_CASE("non-reduced words still have heaps") {
  const auto g = testing::graph("a2");
  const auto h = heap_of_word(g, testing::word(g, "s1 s1"));
  CHECK(h.order().less(0, 1));
  CHECK(linear_extensions(h).size() == 1);
}

TEST_CASE("heap order matches the closure oracle") {
  for (const char* name : {"b2", "h3", "affine_a3", "affine_e6"}) {
    CAPTURE(name);
    const auto g = testing::graph(name);
    for (const auto& w : enumerate_reduced_words(g, 6)) {
      const auto h = heap_of_word(g, w);
      const auto rel = oracle::heap_relation(g, w);
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = 0; j < w.size(); ++j) REQUIRE(h.order().less(i, j) == rel[i][j]);
      }
    }
  }
}

TEST_CASE("linear extensions are the commutation class") {
  for (const auto& [name, len] : {std::pair{"a3", 6}, {"b2", 8}, {"h3", 8}}) {
    CAPTURE(name);
    const auto g = testing::graph(name);
    for (const auto& w : enumerate_reduced_words(g, static_cast<std::size_t>(len))) {
      const auto ext = linear_extensions(heap_of_word(g, w));
      const auto cls = oracle::commutation_class(g, w);
      REQUIRE(std::set<Word>(ext.begin(), ext.end()) == cls);
    }
  }
}

TEST_CASE("vertex and edge preimages are chains") {
  const auto g = testing::graph("h3");
  for (const auto& w : enumerate_reduced_words(g, 7)) {
    const auto h = heap_of_word(g, w);
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[i] == w[j] || g.bonded(w[i], w[j])) REQUIRE(is_chain(h, {i, j}));
      }
    }
  }
}

TEST_CASE("heap isomorphism agrees with label bijections") {
  for (const char* name : {"b2", "affine_a2", "ex73iii"}) {
    CAPTURE(name);
    const auto g = testing::graph(name);
    const auto words = enumerate_reduced_words(g, 6);
    for (std::size_t i = 0; i < words.size(); i += 7) {
      for (std::size_t j = 0; j < words.size(); j += 5) {
        if (words[i].size() != words[j].size()) continue;
        const bool mine = heaps_isomorphic(heap_of_word(g, words[i]), heap_of_word(g, words[j]));
        REQUIRE(mine == oracle::heaps_isomorphic(g, words[i], words[j]));
      }
    }
  }
}

TEST_CASE("commuting moves preserve the heap") {
  const auto g = testing::graph("affine_c3");
  const Word w = testing::word(g, "s0 s1 s0 s1 s2 s3 s2 s3");
  for (const auto& u : commutativity_class(g, w)) CHECK(heaps_isomorphic(heap_of_word(g, w), heap_of_word(g, u)));
  const Word other = testing::word(g, "s1 s0 s1 s0 s2 s3 s2 s3");
  CHECK_FALSE(heaps_isomorphic(heap_of_word(g, w), heap_of_word(g, other)));
}

TEST_CASE("heaps over different graphs are rejected") {
  const auto a = testing::graph("a3");
  const auto b = testing::graph("b2");
  CHECK_THROWS_AS(heaps_isomorphic(heap_of_word(a, Word{0}), heap_of_word(b, Word{0})), GraphMismatch);
}

TEST_CASE("occurrence map") {
  CHECK(occurrence_map(Word{0, 1, 0}, Word{1, 0, 0}) == std::vector<std::size_t>{1, 0, 2});
  CHECK(occurrence_map(Word{0, 1}, Word{0, 0}).empty());
}

TEST_CASE("extension cap") {
  const auto g = testing::graph("ex73iii");
  Limits tight;
  tight.max_extensions = 1;
  CHECK_THROWS_AS(linear_extensions(heap_of_word(g, testing::word(g, "s a")), tight), ExtensionCapExceeded);
}
