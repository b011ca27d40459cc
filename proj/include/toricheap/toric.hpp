#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <unordered_set>
#include <vector>

#include "toricheap/digraph.hpp"
#include "toricheap/limits.hpp"

namespace toricheap {

using OrientationSet = std::unordered_set<Bitset, BitsetHash>;

// Every acyclic orientation, ordered by bitstring. Throws TooLarge above
// limits.max_edges edges and ClassCapExceeded above limits.max_class results.
std::vector<AcyclicOrientation> all_acyclic_orientations(std::shared_ptr<const SimpleGraph> graph,
                                                         const Limits& limits = {});

// Reverses every edge at a source (throws NotASource) or at a sink (throws
// NotASource when v is not a sink).
AcyclicOrientation flip_source(const AcyclicOrientation& o, Vertex v);
AcyclicOrientation flip_sink(const AcyclicOrientation& o, Vertex v);

// Raw form of the toric class: every orientation reachable by source-to-sink
// and sink-to-source moves. Throws ClassCapExceeded.
OrientationSet toric_class_bits(const SimpleGraph& g, const Bitset& start, const Limits& limits = {});

// The toric class of o, ordered by bitstring.
std::vector<AcyclicOrientation> toric_class(const AcyclicOrientation& o, const Limits& limits = {});

// Partition of Acyc(G) into toric classes; classes ordered by least member.
std::vector<std::vector<AcyclicOrientation>> toric_classes(std::shared_ptr<const SimpleGraph> graph,
                                                           const Limits& limits = {});

// T_G(x, y) by deletion and contraction. Throws TooLarge above
// limits.max_edges edges and OutOfRange on 64-bit overflow.
std::int64_t tutte(const SimpleGraph& g, std::int64_t x, std::int64_t y, const Limits& limits = {});

// A toric poset held by one representative orientation, optionally with its
// whole class attached.
class ToricPoset {
 public:
  explicit ToricPoset(AcyclicOrientation representative);

  const AcyclicOrientation& representative() const noexcept { return rep_; }
  const SimpleGraph& graph() const noexcept { return rep_.graph(); }
  std::size_t size() const noexcept { return rep_.graph().vertex_count(); }

  bool has_class() const noexcept { return static_cast<bool>(cache_); }
  // Copy with the class materialized. Throws ClassCapExceeded.
  ToricPoset materialized(const Limits& limits = {}) const;
  // The class, from the cache when present.
  std::shared_ptr<const OrientationSet> members(const Limits& limits = {}) const;

  bool contains(const AcyclicOrientation& o, const Limits& limits = {}) const;

 private:
  AcyclicOrientation rep_;
  std::shared_ptr<const OrientationSet> cache_;
};

bool same_toric_poset(const ToricPoset& a, const ToricPoset& b, const Limits& limits = {});

// i1 -> i2 -> ... -> ik is a directed path of o and i1 -> ik is an arc.
// Sequences of length 0 and 1 qualify. Throws OutOfRange.
bool is_toric_directed_path(const AcyclicOrientation& o, const std::vector<Vertex>& sequence);

// The subset lies on a toric directed path of the representative: it is a
// chain of the reachability order and some arc x -> y has every member
// between x and y. Throws OutOfRange.
bool is_toric_chain(const ToricPoset& t, const std::vector<Vertex>& subset);

// Adds every missing edge whose endpoints form a toric chain, oriented along
// the representative's reachability.
ToricPoset toric_transitive_closure(const ToricPoset& t);

// Drops edges in canonical order while the total toric extensions stay the
// same. Throws TooLarge and ClassCapExceeded.
ToricPoset toric_hasse(const ToricPoset& t, const Limits& limits = {});

// True iff some member of big's class restricts on small's edges to a member
// of small's class. Throws GraphMismatch unless small's graph is a subgraph.
bool is_toric_extension(const ToricPoset& big, const ToricPoset& small, const Limits& limits = {});

// Cyclic orderings of the vertices whose linearizations restrict into the
// class, each rotated so vertex 0 comes first, sorted. Throws TooLarge above
// limits.max_toric_vertices vertices.
std::vector<std::vector<Vertex>> total_toric_extensions(const ToricPoset& t, const Limits& limits = {});

}  // namespace toricheap
