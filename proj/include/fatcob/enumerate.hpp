#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fatcob/canonical.hpp"
#include "fatcob/open_closed.hpp"

namespace fatcob {

inline constexpr std::size_t kDefaultEdgeBound = 8;

// The configured bound: FATCOB_MAX_EDGES if set to a number, else 8.
std::size_t enumeration_bound();

struct EnumerationOptions {
  std::size_t min_edges = 0;
  std::size_t max_edges = 0;
  bool one_vertex = false;
  std::size_t min_valence = 1;
  bool allow_isolated = false;
  std::optional<int> genus;
  std::optional<int> boundary_count;
  unsigned jobs = 1;
};

struct FatGraphClass {
  FatGraph representative;
  std::string canonical;
  std::size_t automorphisms = 1;
  // Rooted versions of the class: half-edge count over automorphisms.
  std::size_t rootings = 1;
  SurfaceSignature surface;
};

// Connected fat graphs up to isomorphism, sorted by (edges, vertices,
// canonical form). Throws BoundExceeded past enumeration_bound().
std::vector<FatGraphClass> enumerate_fat_graphs(const EnumerationOptions& options);

struct OpenClosedEnumerationOptions {
  std::size_t max_edges = 0;
  std::size_t min_valence = 1;
  bool admissible_only = true;
  // When false only one In/Out ordering per leaf assignment is produced.
  bool all_orderings = true;
  std::optional<std::vector<OneManifold>> source;
  std::optional<std::vector<OneManifold>> target;
};

struct OpenClosedClass {
  OpenClosedFatGraph graph;
  std::string canonical;
};

std::vector<OpenClosedClass> enumerate_open_closed(const OpenClosedEnumerationOptions& options);

}  // namespace fatcob
