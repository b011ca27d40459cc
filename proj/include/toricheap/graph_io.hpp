#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "toricheap/coxeter.hpp"

namespace toricheap {

// Graph documents look like
//   {"generators": ["s1", "s2", "s3"], "bonds": [["s1", "s2", 4], ["s2", "s3", 3]]}
// with "inf" as the strength of an unbounded bond. Throws InvalidGraph.
CoxeterGraph load_coxeter_graph(const nlohmann::json& doc);
CoxeterGraph load_coxeter_graph_file(const std::filesystem::path& path);

nlohmann::json graph_to_json(const CoxeterGraph& g);

}  // namespace toricheap
