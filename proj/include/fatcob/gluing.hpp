#pragma once

#include <optional>
#include <vector>

#include "fatcob/morphism.hpp"
#include "fatcob/open_closed.hpp"

namespace fatcob {

// For a closed pair: A1..Ak follow the leaf pair in the outgoing cycle of
// the left graph, B1..Bk the leaf pair in the incoming cycle of the right
// graph. B_i (1-based) is glued to the reverse of A_{k+1-i}.
struct ClosedAlignment {
  std::vector<HalfEdgeId> out_cycle;
  std::vector<HalfEdgeId> in_circle;

  std::size_t k() const { return in_circle.size(); }
  // 0-based index into out_cycle of the half-edge whose reverse meets in_circle[i].
  std::size_t partner(std::size_t i) const { return k() - 1 - i; }
  bool operator==(const ClosedAlignment&) const = default;
};

struct GluingPair {
  std::size_t index = 0;
  VertexId out_leaf = kNoCell;  // in the left graph
  VertexId in_leaf = kNoCell;   // in the right graph
  OneManifold kind = OneManifold::Interval;
  ClosedAlignment alignment;  // empty for intervals
  bool operator==(const GluingPair&) const = default;
};

struct GluingMatch {
  std::vector<GluingPair> pairs;
  bool operator==(const GluingMatch&) const = default;
};

// Outgoing leaves of g1 matched in order with incoming leaves of g2.
GluingMatch gluable(const OpenClosedFatGraph& g1, const OpenClosedFatGraph& g2);

struct SubdivisionMatch {
  OpenClosedFatGraph left, right;
  GluingMatch match;
  std::size_t left_subdivisions = 0, right_subdivisions = 0;
};

SubdivisionMatch subdivision_match(const OpenClosedFatGraph& g1, const OpenClosedFatGraph& g2);

// Where the cells of each input ended up in the glued graph. Right-hand
// incoming cells map to the left cells they were identified with; the
// closed incoming leaf and its edge map to kNoCell.
struct GluingProvenance {
  std::vector<VertexId> left_vertex, right_vertex;
  std::vector<HalfEdgeId> left_half_edge, right_half_edge;
};

struct Glued {
  OpenClosedFatGraph graph;
  AdmissibilityReport admissibility;
  GluingProvenance provenance;
  std::size_t interval_pairs = 0;
};

Glued glue(const OpenClosedFatGraph& g1, const OpenClosedFatGraph& g2, const GluingMatch& match);

// The morphism glue(source(m1), source(m2)) -> glue(target(m1), target(m2)).
Morphism glue_morphisms(const Morphism& m1, const Morphism& m2);

}  // namespace fatcob
