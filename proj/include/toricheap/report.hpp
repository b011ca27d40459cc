#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "toricheap/classifier.hpp"
#include "toricheap/cyclic.hpp"
#include "toricheap/heap.hpp"
#include "toricheap/toric.hpp"

namespace toricheap {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json words_json(const CoxeterGraph& g, const std::vector<Word>& words);
json cyclic_words_json(const CoxeterGraph& g, const std::vector<CyclicWord>& words);
json normal_forms_json(const CoxeterGraph& g, const std::vector<NormalForm>& elements);

// Vertices are printed through `names` when given, otherwise 1-based.
json orientation_json(const AcyclicOrientation& o, const std::vector<std::string>& names = {});

json report_json(const CoxeterGraph& g, const ClassificationReport& r);
json heap_json(const Heap& h);
json toric_heap_json(const ToricHeap& t, const Limits& limits = {});
json conjecture_probe_json(const CoxeterGraph& g, const ConjectureProbe& p);
json cvmt_probe_json(const CoxeterGraph& g, const CvmtProbe& p);

// Nodes pos1..posm labelled by letters, Hasse edges only.
std::string heap_dot(const Heap& h);
// Arcs of a toric poset over the positions of a labelled word.
std::string toric_dot(const ToricPoset& t, const CoxeterGraph& g, const Word& labels, const std::string& name = "toric");
// An orientation of the Coxeter graph, nodes named by generators.
std::string orientation_dot(const CoxeterGraph& g, const AcyclicOrientation& o);

}  // namespace toricheap
