#pragma once

#include <cstddef>

namespace toricheap {

// Search caps. Exceeding any of them raises a ResourceLimit error; no
// operation silently truncates.
struct Limits {
  std::size_t max_orbit = 2'000'000;       // words visited by braid / rotation closures
  std::size_t max_class = 1'000'000;       // members of a materialized toric class
  std::size_t max_extensions = 1'000'000;  // linear extensions enumerated
  std::size_t max_edges = 24;              // exhaustive 2^E orientation enumeration and Tutte
  std::size_t max_toric_vertices = 10;     // total toric extension search
};

}  // namespace toricheap
