#pragma once

#include <string>
#include <vector>

#include "toricheap/coxeter.hpp"
#include "toricheap/graph_io.hpp"

#ifndef TORICHEAP_DATA_DIR
#error "TORICHEAP_DATA_DIR must point at the data directory"
#endif

namespace testing {

inline toricheap::CoxeterGraph graph(const std::string& name) {
  return toricheap::load_coxeter_graph_file(std::string(TORICHEAP_DATA_DIR) + "/graphs/" + name + ".json");
}

inline std::string graph_path(const std::string& name) {
  return std::string(TORICHEAP_DATA_DIR) + "/graphs/" + name + ".json";
}

inline toricheap::Word word(const toricheap::CoxeterGraph& g, const std::string& text) {
  return toricheap::parse_word(g, text);
}

inline std::vector<std::string> names(const toricheap::CoxeterGraph& g, const std::vector<toricheap::Word>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(toricheap::format_word(g, w));
  return out;
}

}  // namespace testing
