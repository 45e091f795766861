#pragma once

// Reference computations used only by the tests. They work from the raw
// permutations and share no code with the library beyond its data types.

#include <cstdint>
#include <vector>

#include "fatcob/open_closed.hpp"

namespace oracle {

struct PolygonSurface {
  std::vector<int> genus;        // per connected component, in order of smallest vertex
  std::vector<int> boundary;     // number of polygons per component
  int total_genus = 0;
};

// Builds one polygon per face (sides traced by sigma after the involution),
// glues paired sides and counts corner classes of the closed surface.
PolygonSurface polygon_gluing(const fatcob::FatGraph& g);

// Counts pairings of 2n points on one circle by genus.
std::vector<std::uint64_t> pairing_genus_distribution(unsigned n);

// Tries every bijection of half-edges (meant for at most four edges).
bool brute_force_isomorphic(const fatcob::OpenClosedFatGraph& a, const fatcob::OpenClosedFatGraph& b);

// Ranks of H1 and H0 relative to the incoming part, by elimination mod a
// prime on a complex rebuilt from the definition.
struct RelativeRanks {
  std::size_t h1 = 0, h0 = 0;
  std::size_t extra_vertices = 0, extra_edges = 0;
};
RelativeRanks relative_ranks(const fatcob::OpenClosedFatGraph& g);

// Expected signature of a gluing from the two input signatures alone:
// components merge along matched leaves, Euler characteristics add minus one
// per interval pair, and boundary arcs are rerouted across each glued interval.
struct ExpectedComponent {
  int genus = 0;
  int boundary = 0;
  std::int64_t chi = 0;
  std::vector<std::size_t> in, out;
  auto operator<=>(const ExpectedComponent&) const = default;
};
std::vector<ExpectedComponent> glued_signature(const fatcob::CobordismSignature& left,
                                               const fatcob::CobordismSignature& right);
std::vector<ExpectedComponent> as_expected(const fatcob::CobordismSignature& s);

}  // namespace oracle
