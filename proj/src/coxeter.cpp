#include "toricheap/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <unordered_set>

#include "toricheap/errors.hpp"

namespace toricheap {

CoxeterGraph CoxeterGraph::create(std::vector<std::string> generators, const std::vector<BondSpec>& bonds) {
  CoxeterGraph g;
  std::unordered_set<std::string> seen;
  for (const auto& n : generators) {
    if (n.empty()) throw InvalidGraph("generator names must be non-empty");
    if (std::any_of(n.begin(), n.end(), [](unsigned char c) { return std::isspace(c); })) {
      throw InvalidGraph("generator name contains whitespace: '" + n + "'");
    }
    if (!seen.insert(n).second) throw InvalidGraph("duplicate generator name '" + n + "'");
  }
  if (generators.size() > 0xFFFF) throw InvalidGraph("too many generators");
  g.names_ = std::move(generators);
  const std::size_t n = g.names_.size();
  g.table_.assign(n * n, BondStrength::finite(2));
  for (std::size_t i = 0; i < n; ++i) g.table_[i * n + i] = BondStrength::finite(1);

  for (const auto& b : bonds) {
    const Gen s = g.index_of(b.s);
    const Gen t = g.index_of(b.t);
    if (s == t) throw InvalidGraph("self-bond on '" + b.s + "'");
    if (b.m.is_finite() && b.m.value() <= 2) {
      throw InvalidGraph("bond strength for {" + b.s + "," + b.t + "} must be >= 3 or inf (m = 2 is expressed by omission)");
    }
    auto& slot = g.table_[s * n + t];
    if (!slot.is_commuting()) throw InvalidGraph("bond {" + b.s + "," + b.t + "} declared twice");
    slot = b.m;
    g.table_[t * n + s] = b.m;
  }
  return g;
}

const std::string& CoxeterGraph::name(Gen s) const {
  check(s);
  return names_[s];
}

std::optional<Gen> CoxeterGraph::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Gen>(i);
  }
  return std::nullopt;
}

Gen CoxeterGraph::index_of(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw UnknownGenerator("unknown generator '" + std::string(name) + "'");
}

void CoxeterGraph::check(Gen s) const {
  if (s >= names_.size()) throw UnknownGenerator("generator index " + std::to_string(s) + " out of range");
}

BondStrength CoxeterGraph::m(Gen s, Gen t) const {
  check(s);
  check(t);
  return table_[s * rank() + t];
}

bool CoxeterGraph::commutes(Gen s, Gen t) const { return m(s, t).is_commuting(); }

std::vector<Bond> CoxeterGraph::bonds() const {
  std::vector<Bond> out;
  for (Gen s = 0; s < rank(); ++s) {
    for (Gen t = s + 1; t < rank(); ++t) {
      const auto b = table_[s * rank() + t];
      if (!b.is_commuting()) out.push_back({s, t, b});
    }
  }
  return out;
}

std::vector<Gen> CoxeterGraph::neighbors(Gen s) const {
  std::vector<Gen> out;
  for (Gen t = 0; t < rank(); ++t) {
    if (bonded(s, t)) out.push_back(t);
  }
  return out;
}

std::set<Gen> support(const Word& w) { return {w.begin(), w.end()}; }

CoxeterGraph induced_subgraph(const CoxeterGraph& g, const std::set<Gen>& subset) {
  std::vector<std::string> names;
  for (Gen s : subset) names.push_back(g.name(s));
  std::vector<BondSpec> bonds;
  for (const auto& b : g.bonds()) {
    if (subset.count(b.s) && subset.count(b.t)) bonds.push_back({g.name(b.s), g.name(b.t), b.m});
  }
  return CoxeterGraph::create(std::move(names), bonds);
}

bool is_finite_type(const CoxeterGraph& g) {
  const std::size_t n = g.rank();
  if (n == 0) return true;
  std::vector<double> a(n * n);
  for (Gen s = 0; s < n; ++s) {
    for (Gen t = 0; t < n; ++t) {
      const auto m = g.m(s, t);
      a[s * n + t] = m.is_infinite() ? -1.0 : -std::cos(std::numbers::pi / m.value());
    }
  }
  // Cholesky; a singular (affine) or indefinite form fails the pivot test.
  constexpr double kEps = 1e-9;
  for (std::size_t j = 0; j < n; ++j) {
    double d = a[j * n + j];
    for (std::size_t k = 0; k < j; ++k) d -= a[j * n + k] * a[j * n + k];
    if (d <= kEps) return false;
    const double root = std::sqrt(d);
    a[j * n + j] = root;
    for (std::size_t i = j + 1; i < n; ++i) {
      double v = a[i * n + j];
      for (std::size_t k = 0; k < j; ++k) v -= a[i * n + k] * a[j * n + k];
      a[i * n + j] = v / root;
    }
  }
  return true;
}

std::vector<std::vector<Gen>> components(const CoxeterGraph& g) {
  std::vector<int> comp(g.rank(), -1);
  std::vector<std::vector<Gen>> out;
  for (Gen start = 0; start < g.rank(); ++start) {
    if (comp[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Gen> stack{start};
    comp[start] = id;
    while (!stack.empty()) {
      const Gen s = stack.back();
      stack.pop_back();
      out.back().push_back(s);
      for (Gen t : g.neighbors(s)) {
        if (comp[t] < 0) {
          comp[t] = id;
          stack.push_back(t);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

namespace {

// Reads a run of generator names with no separators, e.g. "s3s1s2",
// taking the longest matching name at each step.
std::optional<Word> split_names(const CoxeterGraph& g, std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    std::optional<Gen> best;
    std::size_t best_len = 0;
    for (Gen s = 0; s < g.rank(); ++s) {
      const auto& n = g.name(s);
      if (n.size() > best_len && text.substr(i, n.size()) == n) {
        best = s;
        best_len = n.size();
      }
    }
    if (!best) return std::nullopt;
    w.push_back(*best);
    i += best_len;
  }
  return w;
}

std::optional<Gen> resolve_char(const CoxeterGraph& g, char c) {
  const std::string direct(1, c);
  if (auto s = g.find(direct)) return s;
  if (auto s = g.find("s" + direct)) return s;
  return std::nullopt;
}

}  // namespace

Word parse_word(const CoxeterGraph& g, std::string_view text) {
  std::vector<std::string> tokens;
  {
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
  }
  Word w;
  if (tokens.empty()) return w;
  if (tokens.size() == 1 && tokens[0] == "e" && !g.find("e")) return w;

  if (tokens.size() == 1 && !g.find(tokens[0])) {
    if (auto split = split_names(g, tokens[0])) return *split;
    for (char c : tokens[0]) {
      auto s = resolve_char(g, c);
      if (!s) throw ParseError("cannot resolve '" + std::string(1, c) + "' in compact word '" + tokens[0] + "'");
      w.push_back(*s);
    }
    return w;
  }
  for (const auto& tok : tokens) {
    auto s = g.find(tok);
    if (!s) throw ParseError("unknown generator '" + tok + "' in word");
    w.push_back(*s);
  }
  return w;
}

std::string format_word(const CoxeterGraph& g, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += g.name(w[i]);
  }
  return out;
}

void validate_word(const CoxeterGraph& g, const Word& w) {
  for (Gen s : w) {
    if (s >= g.rank()) throw UnknownGenerator("generator index " + std::to_string(s) + " out of range");
  }
}

}  // namespace toricheap
