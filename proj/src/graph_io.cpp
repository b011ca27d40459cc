#include "toricheap/graph_io.hpp"

#include <cmath>
#include <fstream>

#include "toricheap/errors.hpp"

namespace toricheap {

namespace {

BondStrength parse_strength(const nlohmann::json& v) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return BondStrength::infinite();
    throw InvalidGraph("bond strength must be an integer or \"inf\", got \"" + v.get<std::string>() + "\"");
  }
  if (v.is_number_integer()) {
    const auto m = v.get<long long>();
    if (m <= 2) throw InvalidGraph("bond strength " + std::to_string(m) + " is not >= 3 (m = 2 is expressed by omission)");
    if (m > 1'000'000) throw InvalidGraph("bond strength " + std::to_string(m) + " is unreasonably large");
    return BondStrength::finite(static_cast<int>(m));
  }
  if (v.is_number_float()) {
    const double d = v.get<double>();
    throw InvalidGraph("bond strength must be an integer, got " + std::to_string(d));
  }
  throw InvalidGraph("bond strength must be an integer or \"inf\"");
}

}  // namespace

CoxeterGraph load_coxeter_graph(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InvalidGraph("graph document must be an object");
  if (!doc.contains("generators") || !doc["generators"].is_array()) {
    throw InvalidGraph("graph document needs a 'generators' array");
  }
  std::vector<std::string> names;
  for (const auto& n : doc["generators"]) {
    if (!n.is_string()) throw InvalidGraph("generator names must be strings");
    names.push_back(n.get<std::string>());
  }
  std::vector<BondSpec> bonds;
  if (doc.contains("bonds")) {
    if (!doc["bonds"].is_array()) throw InvalidGraph("'bonds' must be an array");
    for (const auto& b : doc["bonds"]) {
      if (!b.is_array() || b.size() != 3 || !b[0].is_string() || !b[1].is_string()) {
        throw InvalidGraph("each bond must be [name, name, strength]");
      }
      bonds.push_back({b[0].get<std::string>(), b[1].get<std::string>(), parse_strength(b[2])});
    }
  }
  try {
    return CoxeterGraph::create(std::move(names), bonds);
  } catch (const UnknownGenerator& e) {
    throw InvalidGraph(std::string("bond references ") + e.what());
  }
}

CoxeterGraph load_coxeter_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidGraph("cannot open graph file '" + path.string() + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidGraph("malformed graph file '" + path.string() + "': " + e.what());
  }
  return load_coxeter_graph(doc);
}

nlohmann::json graph_to_json(const CoxeterGraph& g) {
  nlohmann::json doc;
  doc["generators"] = g.generators();
  auto bonds = nlohmann::json::array();
  for (const auto& b : g.bonds()) {
    nlohmann::json strength = b.m.is_infinite() ? nlohmann::json("inf") : nlohmann::json(b.m.value());
    bonds.push_back({g.name(b.s), g.name(b.t), strength});
  }
  doc["bonds"] = std::move(bonds);
  return doc;
}

}  // namespace toricheap
