#include "doctest.h"
#include "support.hpp"
#include "toricheap/errors.hpp"
#include "toricheap/graph_io.hpp"
#include "toricheap/words.hpp"

using namespace toricheap;

TEST_CASE("bond table and symmetry") {
  const auto g = testing::graph("b2");
  CHECK(g.rank() == 3);
  CHECK(g.m(0, 1).value() == 4);
  CHECK(g.m(1, 2).value() == 3);
  CHECK(g.m(0, 2).is_commuting());
  for (Gen s = 0; s < g.rank(); ++s) {
    CHECK(g.m(s, s).value() == 1);
    for (Gen t = 0; t < g.rank(); ++t) CHECK(g.commutes(s, t) == g.commutes(t, s));
  }
  CHECK(g.neighbors(1) == std::vector<Gen>{0, 2});
}

TEST_CASE("infinite bonds round-trip") {
  const auto doc = nlohmann::json::parse(R"({"generators": ["a", "b"], "bonds": [["a", "b", "inf"]]})");
  const auto g = load_coxeter_graph(doc);
  CHECK(g.m(0, 1).is_infinite());
  CHECK(g.m(0, 1).to_string() == "inf");
  CHECK(load_coxeter_graph(graph_to_json(g)) == g);
}

TEST_CASE("every shipped graph round-trips") {
  for (const char* name : {"a1", "a2", "a3", "b2", "h3", "affine_a2", "affine_a3", "affine_c2", "affine_c3",
                           "affine_c4", "affine_e6", "ex73iii"}) {
    CAPTURE(name);
    const auto g = testing::graph(name);
    CHECK(load_coxeter_graph(graph_to_json(g)) == g);
  }
}

TEST_CASE("malformed graphs are rejected") {
  using nlohmann::json;
  CHECK_THROWS_AS(load_coxeter_graph(json::parse(R"([1,2])")), InvalidGraph);
  CHECK_THROWS_AS(load_coxeter_graph(json::parse(R"({"generators": ["a", "a"]})")), InvalidGraph);
  CHECK_THROWS_AS(load_coxeter_graph(json::parse(R"({"generators": ["a", "b"], "bonds": [["a", "b", 2]]})")),
                  InvalidGraph);
  CHECK_THROWS_AS(load_coxeter_graph(json::parse(R"({"generators": ["a", "b"], "bonds": [["a", "c", 3]]})")),
                  InvalidGraph);
  CHECK_THROWS_AS(load_coxeter_graph(json::parse(R"({"generators": ["a"], "bonds": [["a", "a", 3]]})")),
                  InvalidGraph);
  CHECK_THROWS_AS(load_coxeter_graph_file("/nonexistent/graph.json"), InvalidGraph);
}

TEST_CASE("word parsing") {
  const auto g = testing::graph("b2");
  CHECK(testing::word(g, "s3 s1 s2") == Word{2, 0, 1});
  CHECK(testing::word(g, "312") == Word{2, 0, 1});
  CHECK(testing::word(g, "e").empty());
  CHECK(testing::word(g, "").empty());
  CHECK(format_word(g, Word{2, 0, 1}) == "s3 s1 s2");
  CHECK_THROWS_AS(testing::word(g, "s1 s9"), ParseError);
  CHECK_THROWS_AS(testing::word(g, "19"), ParseError);

  const auto x = testing::graph("ex73iii");
  CHECK(format_word(x, testing::word(x, "ststaba")) == "s t s t a b a");
}

TEST_CASE("support is a braid invariant") {
  const auto g = testing::graph("h3");
  const Word w = testing::word(g, "s1 s2 s1 s2 s1 s3");
  for (const auto& u : reduced_words(g, w)) CHECK(support(u) == support(w));
}

TEST_CASE("finite type detection") {
  CHECK(is_finite_type(testing::graph("a3")));
  CHECK(is_finite_type(testing::graph("b2")));
  CHECK(is_finite_type(testing::graph("h3")));
  CHECK_FALSE(is_finite_type(testing::graph("affine_a2")));
  CHECK_FALSE(is_finite_type(testing::graph("affine_c2")));
  CHECK_FALSE(is_finite_type(testing::graph("affine_e6")));
  const auto c2 = testing::graph("affine_c2");
  CHECK(is_finite_type(induced_subgraph(c2, {0, 1})));
}

TEST_CASE("components") {
  const auto g = testing::graph("affine_c4");
  CHECK(components(induced_subgraph(g, {0, 1, 3, 4})).size() == 2);
  CHECK(components(g).size() == 1);
}
